#include "epp/enumeration.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace epp {

namespace {

void check_dense_pairs(int pairs) {
  if (pairs < 1 || pairs > MAX_DENSE_PAIRS)
    throw std::length_error("product_table: pair count outside dense bounds");
}

BellLabel string_label(std::uint32_t code, int pairs, int i) {
  return static_cast<BellLabel>((code >> (2 * (pairs - 1 - i))) & 3u);
}

std::string werner_monomial(int f_exponent, int degree) {
  const int g_exponent = degree - f_exponent;
  std::string out;
  if (f_exponent > 0) {
    out += "F";
    if (f_exponent > 1) out += "^" + std::to_string(f_exponent);
  }
  if (g_exponent > 0) {
    out += "G";
    if (g_exponent > 1) out += "^" + std::to_string(g_exponent);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

WeightedStringTable<double> product_table(const BellDiagonal& dist,
                                          int pairs) {
  check_dense_pairs(pairs);
  const std::uint32_t n = 1u << (2 * pairs);
  WeightedStringTable<double> table{pairs, std::vector<double>(n)};
  for (std::uint32_t code = 0; code < n; ++code) {
    double w = 1.0;
    for (int i = 0; i < pairs; ++i)
      w *= dist.at((code >> (2 * i)) & 3u);
    table.weight[code] = w;
  }
  return table;
}

WeightedStringTable<BellPolynomial> product_table(VarSet vars, int pairs) {
  check_dense_pairs(pairs);
  const std::uint32_t n = 1u << (2 * pairs);
  WeightedStringTable<BellPolynomial> table{
      pairs, std::vector<BellPolynomial>(n, BellPolynomial(vars))};
  for (std::uint32_t code = 0; code < n; ++code) {
    BellPolynomial::Exponents exps{0, 0, 0, 0};
    for (int i = 0; i < pairs; ++i) {
      const int label = (code >> (2 * i)) & 3u;
      if (vars == VarSet::werner)
        exps[label == 0 ? 0 : 1] += 1;
      else
        exps[label] += 1;
    }
    table.weight[code] = BellPolynomial::monomial(vars, exps, 1);
  }
  return table;
}

namespace {

template <typename W>
ConditionalResult<W> four_pair_reduce(const WeightedStringTable<W>& table,
                                      W zero) {
  if (table.pairs != 4)
    throw std::length_error("four_pair_exact: requires exactly 4 pairs");
  ConditionalResult<W> out{zero, std::vector<W>(16, zero)};
  for (std::uint32_t code = 0; code < 256; ++code) {
    const std::uint8_t image = apply_f_code(static_cast<std::uint8_t>(code));
    if (!four_pair_pass(image)) continue;
    out.pass_weight += table.weight[code];
    out.posterior[image >> 4] += table.weight[code];
  }
  return out;
}

}  // namespace

ConditionalResult<double> four_pair_exact(
    const WeightedStringTable<double>& table) {
  auto out = four_pair_reduce(table, 0.0);
  if (out.pass_weight <= 0.0)
    throw std::domain_error("four_pair_exact: zero pass probability");
  for (double& w : out.posterior) w /= out.pass_weight;
  return out;
}

ConditionalResult<BellPolynomial> four_pair_exact(
    const WeightedStringTable<BellPolynomial>& table) {
  if (table.weight.empty())
    throw std::length_error("four_pair_exact: empty table");
  return four_pair_reduce(table, BellPolynomial(table.weight[0].vars()));
}

std::vector<PassTableRow> generate_pass_table() {
  std::vector<PassTableRow> rows;
  for (std::uint32_t code = 0; code < 256; ++code) {
    const std::uint8_t image = apply_f_code(static_cast<std::uint8_t>(code));
    if (!four_pair_pass(image)) continue;
    const BellString input = BellString::from_code(code, 4);
    int f_exponent = 0;
    for (int i = 0; i < 4; ++i)
      if (input.label(i) == BellLabel::phi_plus) ++f_exponent;
    rows.push_back({werner_monomial(f_exponent, 4), input.str(),
                    BellString::from_code(image, 4).str(),
                    BellString::from_code(image >> 4, 2).str()});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.marginal, a.input) < std::tie(b.marginal, b.input);
  });
  return rows;
}

void write_pass_table_csv(std::ostream& out,
                          const std::vector<PassTableRow>& rows) {
  out << "monomial,input,f_image,marginal\n";
  for (const auto& r : rows)
    out << r.monomial << ',' << r.input << ',' << r.f_image << ','
        << r.marginal << '\n';
}

StepResult recurrence_exact(const BellDiagonal& dist) {
  std::array<double, 4> post{0, 0, 0, 0};
  double pass = 0.0;
  for (BellLabel source : all_labels)
    for (BellLabel target : all_labels) {
      const BxorResult gate = bxor(source, target);
      if (measure_compare(gate.target, MeasureAxis::z) != 0) continue;
      const double w = dist[source] * dist[target];
      post[label_code(recurrence_relabel(gate.source))] += w;
      pass += w;
    }
  if (pass <= 0.0)
    throw std::domain_error("recurrence_exact: zero pass probability");
  for (double& p : post) p /= pass;
  return {BellDiagonal(post), pass};
}

BlockExact block_exact(const BellDiagonal& dist, int m) {
  if (m < 2 || m > MAX_DENSE_BLOCK)
    throw std::length_error("block_exact: block size outside dense bounds");
  const std::uint32_t n = 1u << (2 * m);
  std::vector<double> post(n >> 2, 0.0);
  double pass = 0.0;
  for (std::uint32_t code = 0; code < n; ++code) {
    std::array<BellLabel, MAX_DENSE_BLOCK> labels;
    double w = 1.0;
    for (int i = 0; i < m; ++i) {
      labels[i] = string_label(code, m, i);
      w *= dist[labels[i]];
    }
    for (int i = 0; i + 1 < m; ++i) {
      const BxorResult gate = bxor(labels[i], labels[m - 1]);
      labels[i] = gate.source;
      labels[m - 1] = gate.target;
    }
    if (measure_compare(labels[m - 1], MeasureAxis::z) != 0) continue;
    std::uint32_t surviving = 0;
    for (int i = 0; i + 1 < m; ++i)
      surviving = (surviving << 2) | static_cast<std::uint32_t>(
                                         label_code(labels[i]));
    post[surviving] += w;
    pass += w;
  }
  if (pass <= 0.0) return {0.0, 0.0};
  for (double& p : post) p /= pass;
  return {pass, shannon_entropy(post)};
}

}  // namespace epp
