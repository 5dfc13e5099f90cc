#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epp/curve.hpp"
#include "epp/reference_table.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kProtocolTags[] = {"hashing", "recurrence", "ms", "ls",
                                         "combined"};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// round a value through its 12-significant-digit form so CSV and JSON agree
double rounded(double value) {
  return std::strtod(epp::format_significant(value).c_str(), nullptr);
}

int with_output(const std::string& path,
                const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return usage_error("cannot open output file: " + path);
  emit(file);
  return 0;
}

epp::BellDiagonal random_bell_diagonal(std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::array<double, 4> p{};
  double sum = 0.0;
  for (double& v : p) {
    v = exp1(rng);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return epp::BellDiagonal(p);
}

// --- curve ----------------------------------------------------------------

struct CurveArgs {
  double f_min = 0.25;
  double f_max = 1.0;
  double step = 0.001;
  int k_max = epp::DEFAULT_MAX_ROUNDS;
  int m_max = epp::MAX_BLOCK_SIZE;
  std::string protocols;
  std::string dist;
  std::string format = "csv";
  std::string output;
};

bool parse_protocols(const std::string& text, epp::ProtocolSelection& sel) {
  if (text.empty()) return true;  // default: all
  sel = {false, false, false, false, false};
  for (const std::string& tag : split(text, ',')) {
    if (tag == "hashing")
      sel.hashing = true;
    else if (tag == "recurrence")
      sel.recurrence = true;
    else if (tag == "ms")
      sel.block = true;
    else if (tag == "ls")
      sel.four_pair = true;
    else if (tag == "combined")
      sel.combined = true;
    else
      return false;
  }
  return true;
}

std::vector<std::string> enabled_tags(const epp::ProtocolSelection& sel) {
  std::vector<std::string> tags;
  const bool flags[] = {sel.hashing, sel.recurrence, sel.block, sel.four_pair,
                        sel.combined};
  for (int i = 0; i < 5; ++i)
    if (flags[i]) tags.push_back(kProtocolTags[i]);
  return tags;
}

void emit_curve_csv(std::ostream& out, const std::vector<epp::CurvePoint>& pts,
                    const epp::ProtocolSelection& sel) {
  out << "F";
  if (sel.hashing) out << ",yield_hashing";
  if (sel.recurrence) out << ",best_k,yield_recurrence";
  if (sel.block) out << ",best_m,yield_ms";
  if (sel.four_pair) out << ",yield_ls";
  if (sel.combined) out << ",yield_combined";
  out << "\n";
  for (const auto& p : pts) {
    out << epp::format_significant(p.fidelity);
    if (sel.hashing) out << ',' << epp::format_significant(p.yield_hashing);
    if (sel.recurrence)
      out << ',' << p.best_k << ','
          << epp::format_significant(p.yield_recurrence);
    if (sel.block)
      out << ',' << p.best_m << ','
          << epp::format_significant(p.yield_block);
    if (sel.four_pair)
      out << ',' << epp::format_significant(p.yield_four_pair);
    if (sel.combined)
      out << ',' << epp::format_significant(p.yield_combined);
    out << "\n";
  }
}

json curve_point_json(const epp::CurvePoint& p,
                      const epp::ProtocolSelection& sel) {
  json row;
  row["F"] = rounded(p.fidelity);
  if (sel.hashing) row["yield_hashing"] = rounded(p.yield_hashing);
  if (sel.recurrence) {
    row["best_k"] = p.best_k;
    row["yield_recurrence"] = rounded(p.yield_recurrence);
  }
  if (sel.block) {
    row["best_m"] = p.best_m;
    row["yield_ms"] = rounded(p.yield_block);
  }
  if (sel.four_pair) row["yield_ls"] = rounded(p.yield_four_pair);
  if (sel.combined) row["yield_combined"] = rounded(p.yield_combined);
  return row;
}

int run_curve(const CurveArgs& args) {
  epp::CurveOptions options;
  options.f_min = args.f_min;
  options.f_max = args.f_max;
  options.step = args.step;
  options.max_rounds = args.k_max;
  options.max_block = args.m_max;
  if (!parse_protocols(args.protocols, options.protocols))
    return usage_error("unknown protocol tag in --protocols (expected "
                       "hashing, recurrence, ms, ls, combined)");

  json config;
  config["command"] = "curve";
  config["format"] = args.format;
  config["protocols"] = enabled_tags(options.protocols);
  config["k_max"] = args.k_max;
  config["m_max"] = args.m_max;

  std::vector<epp::CurvePoint> points;
  try {
    if (!args.dist.empty()) {
      const auto parts = split(args.dist, ',');
      if (parts.size() != 4)
        return usage_error("--dist expects four comma-separated "
                           "probabilities");
      std::array<double, 4> p{};
      for (int i = 0; i < 4; ++i) {
        char* end = nullptr;
        p[i] = std::strtod(parts[i].c_str(), &end);
        if (parts[i].empty() || end != parts[i].c_str() + parts[i].size())
          return usage_error("--dist component is not a number: " + parts[i]);
      }
      const epp::BellDiagonal dist(p);
      // single record; the F column carries the phi+ weight
      points.push_back(epp::evaluate_curve_point(dist, p[0], options));
      config["dist"] = {rounded(p[0]), rounded(p[1]), rounded(p[2]),
                        rounded(p[3])};
    } else {
      points = epp::werner_curve(options);
      config["f_min"] = args.f_min;
      config["f_max"] = args.f_max;
      config["step"] = args.step;
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  return with_output(args.output, [&](std::ostream& out) {
    if (args.format == "json") {
      json doc;
      doc["config"] = config;
      doc["points"] = json::array();
      for (const auto& p : points)
        doc["points"].push_back(curve_point_json(p, options.protocols));
      out << doc.dump(2) << "\n";
    } else {
      emit_curve_csv(out, points, options.protocols);
    }
  });
}

// --- crossover --------------------------------------------------------------

struct CrossoverArgs {
  double f_min = 0.5;
  double f_max = 1.0;
  double step = 0.001;
  int k_max = epp::DEFAULT_MAX_ROUNDS;
  int m_max = epp::MAX_BLOCK_SIZE;
  std::string format = "text";
  std::string output;
};

json competitor_json(const epp::CompetitorPoint& c) {
  json row;
  row["F"] = rounded(c.fidelity);
  row["yield_ls"] = rounded(c.four_pair);
  row["best_k"] = c.recurrence_rounds;
  row["yield_recurrence"] = rounded(c.recurrence);
  row["best_m"] = c.block_size;
  row["yield_ms"] = rounded(c.block);
  return row;
}

void print_competitors_text(std::ostream& out, const char* where,
                            const epp::CompetitorPoint& c) {
  char fidelity[32];
  std::snprintf(fidelity, sizeof fidelity, "%.3f", c.fidelity);
  out << "    " << where << " " << fidelity << ": four-pair yield "
      << epp::format_significant(c.four_pair, 6) << ", recurrence (k="
      << c.recurrence_rounds << ") "
      << epp::format_significant(c.recurrence, 6) << ", block (m="
      << c.block_size << ") " << epp::format_significant(c.block, 6) << "\n";
}

int run_crossover(const CrossoverArgs& args) {
  const epp::CrossoverConfig config{args.k_max, args.m_max, 5e-3};
  epp::CrossoverReport report;
  try {
    report = epp::crossover_scan(args.f_min, args.f_max, args.step, config);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  return with_output(args.output, [&](std::ostream& out) {
    if (args.format == "json") {
      json doc;
      doc["config"] = {{"command", "crossover"},
                       {"f_min", args.f_min},
                       {"f_max", args.f_max},
                       {"step", args.step},
                       {"k_max", args.k_max},
                       {"m_max", args.m_max},
                       {"bisect_tol", config.bisect_tol}};
      doc["intervals"] = json::array();
      for (const auto& iv : report.intervals)
        doc["intervals"].push_back({{"lower", rounded(iv.lower)},
                                    {"upper", rounded(iv.upper)},
                                    {"at_lower", competitor_json(iv.at_lower)},
                                    {"at_upper", competitor_json(iv.at_upper)}});
      out << doc.dump(2) << "\n";
      return;
    }
    out << "crossover scan: F in [" << epp::format_significant(args.f_min, 6)
        << ", " << epp::format_significant(args.f_max, 6) << "], step "
        << epp::format_significant(args.step, 6) << ", k_max " << args.k_max
        << ", m_max " << args.m_max << "\n";
    if (report.intervals.empty()) {
      out << "no improvement interval found\n";
      return;
    }
    out << "intervals where the four-pair protocol strictly beats the best "
           "recurrence schedule and the best block size:\n";
    for (const auto& iv : report.intervals) {
      char lo[32], hi[32];
      std::snprintf(lo, sizeof lo, "%.3f", iv.lower);
      std::snprintf(hi, sizeof hi, "%.3f", iv.upper);
      out << "  [" << lo << ", " << hi << "]\n";
      print_competitors_text(out, "lower endpoint", iv.at_lower);
      print_competitors_text(out, "upper endpoint", iv.at_upper);
    }
  });
}

// --- verify -----------------------------------------------------------------

bool verify_table(std::ostream& out) {
  const auto generated = epp::generate_pass_table();
  const auto& reference = epp::reference_pass_table();
  if (generated.size() != reference.size()) {
    out << "[mismatch] pass table: generated " << generated.size()
        << " rows, reference has " << reference.size() << "\n";
    return false;
  }
  // both sides are sorted by (marginal, input), so rowwise comparison is a
  // per-marginal-group set comparison
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (generated[i] == reference[i]) continue;
    out << "[mismatch] pass table row " << i << ": generated ("
        << generated[i].monomial << ", " << generated[i].input << ", "
        << generated[i].f_image << ", " << generated[i].marginal
        << ") reference (" << reference[i].monomial << ", "
        << reference[i].input << ", " << reference[i].f_image << ", "
        << reference[i].marginal << ")\n";
    return false;
  }
  out << "[ok] pass table: " << generated.size() << "/" << reference.size()
      << " rows match\n";
  return true;
}

bool verify_closed_form(std::ostream& out, epp::VarSet vars,
                        const char* label, const char* coeff_note,
                        const char* class_note) {
  const auto symbolic =
      epp::four_pair_exact(epp::product_table(vars, 4));
  const auto closed = epp::four_pair_closed_form_polynomials(vars);

  if (!(symbolic.pass_weight == closed.pass)) {
    out << "[mismatch] " << label << " pass probability: enumerated "
        << symbolic.pass_weight.str() << ", closed form "
        << closed.pass.str() << "\n";
    return false;
  }

  epp::BellPolynomial posterior_sum(vars);
  for (const auto& w : symbolic.posterior) posterior_sum += w;
  if (!(posterior_sum == symbolic.pass_weight)) {
    out << "[mismatch] " << label
        << " conservation: posterior sum " << posterior_sum.str()
        << " != p_pass " << symbolic.pass_weight.str() << "\n";
    return false;
  }

  std::map<std::string, int> enumerated;
  for (const auto& w : symbolic.posterior) ++enumerated[w.str()];
  std::map<std::string, int> expected;
  for (const auto& [poly, mult] : closed.posterior_classes)
    expected[poly.str()] += mult;
  if (enumerated != expected) {
    out << "[mismatch] " << label << " posterior classes:\n";
    for (const auto& [poly, mult] : enumerated)
      out << "  enumerated " << mult << " x " << poly << "\n";
    for (const auto& [poly, mult] : expected)
      out << "  expected   " << mult << " x " << poly << "\n";
    return false;
  }

  out << "[ok] " << label << ": p_pass coefficients " << coeff_note
      << " confirmed; posterior classes " << class_note << " confirmed\n";
  return true;
}

bool verify_recurrence(std::ostream& out) {
  std::mt19937_64 rng(0x5eedful);
  constexpr int kTrials = 1000;
  constexpr double kTol = 1e-12;
  for (int t = 0; t < kTrials; ++t) {
    const auto dist = random_bell_diagonal(rng);
    const auto closed = epp::recurrence_step(dist);
    const auto exact = epp::recurrence_exact(dist);
    double dev =
        std::abs(closed.pass_probability - exact.pass_probability);
    for (int i = 0; i < 4; ++i)
      dev = std::max(dev, std::abs(closed.output.at(i) - exact.output.at(i)));
    if (dev > kTol) {
      out << "[mismatch] recurrence at (" << dist.at(0) << ", " << dist.at(1)
          << ", " << dist.at(2) << ", " << dist.at(3) << "): deviation "
          << dev << "\n";
      return false;
    }
  }
  out << "[ok] recurrence: " << kTrials << "/" << kTrials
      << " random inputs within 1e-12\n";
  return true;
}

bool verify_ms(std::ostream& out) {
  std::mt19937_64 rng(0xb10c5ull);
  constexpr int kTrialsPerSize = 100;
  constexpr double kTol = 1e-10;
  int checks = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int t = 0; t < kTrialsPerSize; ++t) {
      const auto dist = random_bell_diagonal(rng);
      const auto dense = epp::block_exact(dist, m);
      const double dense_yield =
          dense.pass_probability <= 0.0
              ? 0.0
              : std::max(0.0, dense.pass_probability *
                                  (double(m - 1) / m) *
                                  (1.0 - dense.posterior_entropy_bits /
                                             (m - 1)));
      const double fast_yield = epp::block_yield(dist, m);
      if (std::abs(dense_yield - fast_yield) > kTol) {
        out << "[mismatch] block yield m=" << m << " at (" << dist.at(0)
            << ", " << dist.at(1) << ", " << dist.at(2) << ", " << dist.at(3)
            << "): dense " << dense_yield << ", multinomial " << fast_yield
            << "\n";
        return false;
      }
      ++checks;
    }
  }
  out << "[ok] ms: " << checks << "/" << checks
      << " multinomial-vs-dense yield checks within 1e-10 (m=2..6)\n";
  return true;
}

int run_verify(const std::string& target) {
  bool ok = true;
  const bool all = target.empty();
  if (all || target == "table") ok = verify_table(std::cout) && ok;
  if (all || target == "werner-closed-form")
    ok = verify_closed_form(std::cout, epp::VarSet::werner,
                            "werner closed form", "(1, 18, 24, 21)",
                            "(1x, 9x, 6x)") &&
         ok;
  if (all || target == "general-closed-form")
    ok = verify_closed_form(std::cout, epp::VarSet::general,
                            "general closed form", "(quartic, 24, 6 pairs)",
                            "(1, 6, 3, 3, 3)") &&
         ok;
  if (all || target == "recurrence") ok = verify_recurrence(std::cout) && ok;
  if (all || target == "ms") ok = verify_ms(std::cout) && ok;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact yield analysis for entanglement purification on "
               "Bell-diagonal ensembles"};
  app.require_subcommand(1);

  CurveArgs curve_args;
  auto* curve = app.add_subcommand(
      "curve", "emit per-fidelity yields for each protocol family");
  curve->add_option("--f-min", curve_args.f_min, "Werner grid start")
      ->capture_default_str();
  curve->add_option("--f-max", curve_args.f_max, "Werner grid end")
      ->capture_default_str();
  curve->add_option("--step", curve_args.step, "Werner grid step")
      ->capture_default_str();
  curve->add_option("--k-max", curve_args.k_max,
                    "max recurrence rounds in schedules")
      ->check(CLI::Range(0, 4096))
      ->capture_default_str();
  curve->add_option("--m-max", curve_args.m_max, "max block size")
      ->check(CLI::Range(2, epp::MAX_BLOCK_SIZE))
      ->capture_default_str();
  curve->add_option("--protocols", curve_args.protocols,
                    "comma-separated subset of "
                    "hashing,recurrence,ms,ls,combined");
  curve->add_option("--dist", curve_args.dist,
                    "evaluate one distribution p00,p01,p10,p11 instead of "
                    "the Werner grid");
  curve->add_option("--format", curve_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  curve->add_option("--output", curve_args.output, "write to file");

  CrossoverArgs cross_args;
  auto* crossover = app.add_subcommand(
      "crossover",
      "report fidelity intervals where the four-pair protocol wins");
  crossover->add_option("--f-min", cross_args.f_min, "grid start")
      ->capture_default_str();
  crossover->add_option("--f-max", cross_args.f_max, "grid end")
      ->capture_default_str();
  crossover->add_option("--step", cross_args.step, "grid step")
      ->capture_default_str();
  crossover->add_option("--k-max", cross_args.k_max,
                        "max recurrence rounds in schedules")
      ->check(CLI::Range(0, 4096))
      ->capture_default_str();
  crossover->add_option("--m-max", cross_args.m_max, "max block size")
      ->check(CLI::Range(2, epp::MAX_BLOCK_SIZE))
      ->capture_default_str();
  crossover->add_option("--format", cross_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  crossover->add_option("--output", cross_args.output, "write to file");

  std::string verify_target;
  auto* verify = app.add_subcommand(
      "verify", "re-derive and check the built-in exact references");
  verify
      ->add_option("target", verify_target,
                   "one of table, werner-closed-form, general-closed-form, "
                   "recurrence, ms (default: all)")
      ->check(CLI::IsMember({"table", "werner-closed-form",
                             "general-closed-form", "recurrence", "ms"}));

  std::string table_output;
  auto* table = app.add_subcommand(
      "table", "dump the 64-row passing-string table as CSV");
  table->add_option("--output", table_output, "write to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (curve->parsed()) return run_curve(curve_args);
    if (crossover->parsed()) return run_crossover(cross_args);
    if (verify->parsed()) return run_verify(verify_target);
    if (table->parsed())
      return with_output(table_output, [](std::ostream& out) {
        epp::write_pass_table_csv(out, epp::generate_pass_table());
      });
  } catch (const std::exception& e) {
    if (verify->parsed()) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    return usage_error(e.what());
  }
  return 0;
}
