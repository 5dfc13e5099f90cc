#include "epp/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace epp {

namespace {

// binomial coefficients through C(64,k); every entry fits in 64 bits
struct BinomialTable {
  std::uint64_t c[MAX_BLOCK_SIZE + 1][MAX_BLOCK_SIZE + 1];
  constexpr BinomialTable() : c{} {
    for (int n = 0; n <= MAX_BLOCK_SIZE; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};
constexpr BinomialTable kBinomial{};

double multinomial(int n, int n0, int n1, int n2) {
  return static_cast<double>(kBinomial.c[n][n0]) *
         static_cast<double>(kBinomial.c[n - n0][n1]) *
         static_cast<double>(kBinomial.c[n - n0 - n1][n2]);
}

double clamp_yield(double y) { return y > 0.0 ? y : 0.0; }

ClosedFormYield finish_closed_form(
    double pass, std::initializer_list<std::pair<double, int>> classes) {
  double h = 0.0;
  for (const auto& [w, mult] : classes)
    if (w > 0.0) h -= mult * (w / pass) * std::log2(w / pass);
  return {pass, h, clamp_yield(pass / 2.0 * (1.0 - h / 2.0))};
}

void check_block_size(int m, int bound, const char* who) {
  if (m < 2 || m > bound)
    throw std::length_error(std::string(who) + ": block size out of range");
}

}  // namespace

double hashing_yield(const BellDiagonal& dist) {
  return clamp_yield(1.0 - shannon_entropy(dist.probabilities()));
}

StepResult recurrence_step(const BellDiagonal& dist) {
  const auto& p = dist.probabilities();
  const double pass = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3] +
                      2.0 * p[0] * p[2] + 2.0 * p[1] * p[3];
  if (pass <= 0.0)
    throw std::domain_error("recurrence_step: zero pass probability");
  return {BellDiagonal((p[0] * p[0] + p[2] * p[2]) / pass,
                       (p[1] * p[1] + p[3] * p[3]) / pass,
                       2.0 * p[1] * p[3] / pass, 2.0 * p[0] * p[2] / pass),
          pass};
}

double block_pass_probability(const BellDiagonal& dist, int m) {
  check_block_size(m, MAX_BLOCK_SIZE, "block_pass_probability");
  const double q1 = dist.at(1) + dist.at(3);
  return (1.0 + std::pow(1.0 - 2.0 * q1, m)) / 2.0;
}

double block_yield(const BellDiagonal& dist, int m) {
  check_block_size(m, MAX_BLOCK_SIZE, "block_yield");
  const int n = m - 1;  // surviving source pairs

  // pw[l][e] = p_l^e over the observed (post-gate) source labels
  std::array<std::array<double, MAX_BLOCK_SIZE>, 4> pw;
  for (int l = 0; l < 4; ++l) {
    pw[l][0] = 1.0;
    for (int e = 1; e <= n; ++e) pw[l][e] = pw[l][e - 1] * dist.at(l);
  }

  // a surviving source string is consistent with two target pre-labels
  // (phase 0 or 1, amplitude = the sources' amplitude parity A); the
  // phase-1 branch sees every observed source label with its phase bit
  // flipped (00<->10, 01<->11). hence per-string weight
  //   W = p_(0,A) prod_l p_l^{n_l} + p_(1,A) prod_l p_flip(l)^{n_l}
  // which depends only on the label counts n_l.
  double pass = 0.0;
  double wlogw = 0.0;
  for (int n0 = 0; n0 <= n; ++n0)
    for (int n1 = 0; n1 + n0 <= n; ++n1)
      for (int n2 = 0; n2 + n1 + n0 <= n; ++n2) {
        const int n3 = n - n0 - n1 - n2;
        const int amp_parity = (n1 + n3) & 1;
        const double w =
            dist.at(amp_parity) * pw[0][n0] * pw[1][n1] * pw[2][n2] *
                pw[3][n3] +
            dist.at(2 + amp_parity) * pw[2][n0] * pw[3][n1] * pw[0][n2] *
                pw[1][n3];
        if (w <= 0.0) continue;
        const double mult = multinomial(n, n0, n1, n2);
        pass += mult * w;
        wlogw += mult * w * std::log(w);
      }
  if (pass <= 0.0) return 0.0;
  const double entropy_bits = (std::log(pass) - wlogw / pass) / M_LN2;
  return clamp_yield(pass * (static_cast<double>(n) / m) *
                     (1.0 - entropy_bits / n));
}

BlockChoice best_block_yield(const BellDiagonal& dist, int max_block) {
  check_block_size(max_block, MAX_BLOCK_SIZE, "best_block_yield");
  const auto& p = dist.probabilities();
  const double pmax = std::max({p[0], p[1], p[2], p[3]});
  const double amp_class_max = std::max(p[0] + p[2], p[1] + p[3]);

  BlockChoice best{2, block_yield(dist, 2)};
  for (int m = 3; m <= max_block; ++m) {
    const double pass = block_pass_probability(dist, m);
    if (pass <= 0.0) continue;  // yield is exactly 0
    // every surviving string has posterior weight at most
    // amp_class_max * pmax^(m-1) / p_pass, so the posterior entropy is at
    // least the min-entropy bound below. once it provably reaches m-1 the
    // clamped yield is exactly 0 and the enumeration can be skipped. the
    // 1e-6 margin absorbs rounding in this estimate itself.
    const double entropy_floor = -std::log2(amp_class_max) -
                                 (m - 1) * std::log2(pmax) + std::log2(pass);
    if (entropy_floor - (m - 1) >= 1e-6) continue;
    const double y = block_yield(dist, m);
    if (y > best.yield) best = {m, y};
  }
  return best;
}

double four_pair_yield(const BellDiagonal& dist) {
  const auto result = four_pair_exact(product_table(dist, 4));
  const double h = shannon_entropy(result.posterior);
  return clamp_yield(result.pass_weight / 2.0 * (1.0 - h / 2.0));
}

ClosedFormYield four_pair_closed_form_werner(double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0))
    throw std::invalid_argument("four_pair_closed_form_werner: bad fidelity");
  const double f = fidelity, g = (1.0 - fidelity) / 3.0;
  const double f2 = f * f, g2 = g * g;
  const double pass = f2 * f2 + 18.0 * f2 * g2 + 24.0 * f * g2 * g +
                      21.0 * g2 * g2;
  return finish_closed_form(pass, {{f2 * f2 + 3.0 * g2 * g2, 1},
                                   {2.0 * f2 * g2 + 2.0 * g2 * g2, 9},
                                   {4.0 * f * g2 * g, 6}});
}

ClosedFormYield four_pair_closed_form_general(const BellDiagonal& dist) {
  const auto& p = dist.probabilities();
  const double s0 = p[0] * p[0], s1 = p[1] * p[1], s2 = p[2] * p[2],
               s3 = p[3] * p[3];
  const double quartic = s0 * s0 + s1 * s1 + s2 * s2 + s3 * s3;
  const double product = 4.0 * p[0] * p[1] * p[2] * p[3];
  const double cls_a = 2.0 * s0 * s1 + 2.0 * s2 * s3;
  const double cls_b = 2.0 * s0 * s2 + 2.0 * s1 * s3;
  const double cls_c = 2.0 * s0 * s3 + 2.0 * s1 * s2;
  const double pass =
      quartic + 6.0 * product + 3.0 * (cls_a + cls_b + cls_c);
  return finish_closed_form(pass, {{quartic, 1},
                                   {product, 6},
                                   {cls_a, 3},
                                   {cls_b, 3},
                                   {cls_c, 3}});
}

FourPairClosedForm four_pair_closed_form_polynomials(VarSet vars) {
  using P = BellPolynomial;
  FourPairClosedForm out{P(vars), {}};
  if (vars == VarSet::werner) {
    const auto mono = [](int ef, int eg, int coeff) {
      return P::monomial(VarSet::werner,
                         {static_cast<std::uint8_t>(ef),
                          static_cast<std::uint8_t>(eg), 0, 0},
                         coeff);
    };
    out.pass = mono(4, 0, 1) + mono(2, 2, 18) + mono(1, 3, 24) +
               mono(0, 4, 21);
    out.posterior_classes = {
        {mono(4, 0, 1) + mono(0, 4, 3), 1},
        {mono(2, 2, 2) + mono(0, 4, 2), 9},
        {mono(1, 3, 4), 6},
    };
    return out;
  }
  const auto pair_sq = [](int i, int j, int coeff) {
    P::Exponents e{0, 0, 0, 0};
    e[i] = 2;
    e[j] = 2;
    return P::monomial(VarSet::general, e, coeff);
  };
  P quartic(vars);
  for (int i = 0; i < 4; ++i) {
    P::Exponents e{0, 0, 0, 0};
    e[i] = 4;
    quartic += P::monomial(vars, e, 1);
  }
  const P product = P::monomial(vars, {1, 1, 1, 1}, 4);
  const P cls_a = pair_sq(0, 1, 2) + pair_sq(2, 3, 2);
  const P cls_b = pair_sq(0, 2, 2) + pair_sq(1, 3, 2);
  const P cls_c = pair_sq(0, 3, 2) + pair_sq(1, 2, 2);
  out.pass = quartic + P::monomial(vars, {1, 1, 1, 1}, 24) +
             pair_sq(0, 1, 6) + pair_sq(2, 3, 6) + pair_sq(0, 2, 6) +
             pair_sq(1, 3, 6) + pair_sq(0, 3, 6) + pair_sq(1, 2, 6);
  out.posterior_classes = {
      {quartic, 1}, {product, 6}, {cls_a, 3}, {cls_b, 3}, {cls_c, 3}};
  return out;
}

double terminal_yield(const BellDiagonal& dist, const TerminalProtocol& t) {
  switch (t.kind) {
    case TerminalProtocol::Kind::hashing:
      return hashing_yield(dist);
    case TerminalProtocol::Kind::block:
      return block_yield(dist, t.block_size);
    case TerminalProtocol::Kind::four_pair:
      return four_pair_yield(dist);
  }
  throw std::invalid_argument("terminal_yield: bad terminal kind");
}

double pipeline_yield(const BellDiagonal& dist,
                      const ProtocolSchedule& schedule) {
  if (schedule.recurrence_rounds < 0)
    throw std::invalid_argument("pipeline_yield: negative round count");
  BellDiagonal d = dist;
  double prefactor = 1.0;
  for (int i = 0; i < schedule.recurrence_rounds; ++i) {
    const StepResult step = recurrence_step(d);
    prefactor *= step.pass_probability / 2.0;
    d = step.output;
  }
  return prefactor * terminal_yield(d, schedule.terminal);
}

ScheduleChoice recurrence_schedule_yield(const BellDiagonal& dist,
                                         const TerminalProtocol& terminal,
                                         int max_rounds) {
  if (max_rounds < 0)
    throw std::invalid_argument("recurrence_schedule_yield: negative bound");
  ScheduleChoice best{0, 0.0};
  BellDiagonal d = dist;
  double prefactor = 1.0;
  for (int k = 0;; ++k) {
    const double y = prefactor * terminal_yield(d, terminal);
    if (k == 0 || y > best.yield) best = {k, y};
    if (k == max_rounds) break;
    // terminal yields never exceed 1, so once the prefactor drops to the
    // incumbent no later round can strictly improve on it
    const StepResult step = recurrence_step(d);
    prefactor *= step.pass_probability / 2.0;
    d = step.output;
    if (prefactor <= best.yield) break;
  }
  return best;
}

CombinedChoice best_combined_yield(const BellDiagonal& dist, int max_rounds,
                                   int max_block) {
  if (max_rounds < 0)
    throw std::invalid_argument("best_combined_yield: negative bound");
  CombinedChoice best{{0, TerminalProtocol::make_hashing()}, 0.0};
  BellDiagonal d = dist;
  double prefactor = 1.0;
  bool initialized = false;
  for (int k = 0;; ++k) {
    TerminalProtocol terminal = TerminalProtocol::make_hashing();
    double ty = hashing_yield(d);
    const BlockChoice blk = best_block_yield(d, max_block);
    if (blk.yield > ty) {
      ty = blk.yield;
      terminal = TerminalProtocol::make_block(blk.block_size);
    }
    const double fp = four_pair_yield(d);
    if (fp > ty) {
      ty = fp;
      terminal = TerminalProtocol::make_four_pair();
    }
    const double y = prefactor * ty;
    if (!initialized || y > best.yield) {
      best = {{k, terminal}, y};
      initialized = true;
    }
    if (k == max_rounds) break;
    const StepResult step = recurrence_step(d);
    prefactor *= step.pass_probability / 2.0;
    d = step.output;
    if (prefactor <= best.yield) break;
  }
  return best;
}

CompetitorPoint evaluate_competitors(double fidelity,
                                     const CrossoverConfig& config) {
  const BellDiagonal dist = BellDiagonal::werner(fidelity);
  const double fp = four_pair_yield(dist);
  const ScheduleChoice rec = recurrence_schedule_yield(
      dist, TerminalProtocol::make_hashing(), config.max_rounds);
  const BlockChoice blk = best_block_yield(dist, config.max_block);
  return {fidelity, fp,     rec.yield,
          rec.rounds, blk.yield, blk.block_size,
          fp > rec.yield && fp > blk.yield};
}

namespace {

// refine the win/lose boundary between two grid neighbours; returns the
// midpoint of the final bracket.
double bisect_boundary(double losing, double winning,
                       const CrossoverConfig& config) {
  while (std::abs(winning - losing) > config.bisect_tol) {
    const double mid = (winning + losing) / 2.0;
    if (evaluate_competitors(mid, config).four_pair_wins)
      winning = mid;
    else
      losing = mid;
  }
  return (winning + losing) / 2.0;
}

}  // namespace

CrossoverReport crossover_scan(double f_min, double f_max, double step,
                               const CrossoverConfig& config) {
  if (!(f_min >= 0.0 && f_max <= 1.0 && f_min < f_max))
    throw std::invalid_argument("crossover_scan: bad fidelity range");
  if (!(step > 0.0)) throw std::invalid_argument("crossover_scan: bad step");

  CrossoverReport report;
  const int count = static_cast<int>((f_max - f_min) / step + 1e-9) + 1;
  report.grid.reserve(count);
  for (int i = 0; i < count; ++i)
    report.grid.push_back(evaluate_competitors(
        std::min(f_min + i * step, f_max), config));

  for (int i = 0; i < count; ++i) {
    if (!report.grid[i].four_pair_wins) continue;
    int j = i;
    while (j + 1 < count && report.grid[j + 1].four_pair_wins) ++j;
    CrossoverInterval interval{};
    interval.lower = i == 0 ? report.grid[i].fidelity
                            : bisect_boundary(report.grid[i - 1].fidelity,
                                              report.grid[i].fidelity,
                                              config);
    interval.upper = j + 1 == count
                         ? report.grid[j].fidelity
                         : bisect_boundary(report.grid[j + 1].fidelity,
                                           report.grid[j].fidelity, config);
    interval.at_lower = evaluate_competitors(interval.lower, config);
    interval.at_upper = evaluate_competitors(interval.upper, config);
    report.intervals.push_back(interval);
    i = j;
  }
  return report;
}

}  // namespace epp
