#pragma once

#include <string>
#include <vector>

#include "epp/protocols.hpp"

// grid sweeps producing one record per fidelity with every protocol
// family's yield, plus the fixed-precision formatting shared by the CLI
// and the tests (12 significant digits, byte-stable across runs).
namespace epp {

struct ProtocolSelection {
  bool hashing = true;
  bool recurrence = true;  // best recurrence-then-hashing schedule
  bool block = true;       // best block size
  bool four_pair = true;
  bool combined = true;  // best recurrence prefix + best terminal
};

struct CurveOptions {
  double f_min = 0.25;
  double f_max = 1.0;
  double step = 0.001;
  int max_rounds = DEFAULT_MAX_ROUNDS;
  int max_block = MAX_BLOCK_SIZE;
  ProtocolSelection protocols;
};

// unevaluated fields (deselected protocols) are left at 0.
struct CurvePoint {
  double fidelity = 0.0;
  double yield_hashing = 0.0;
  int best_k = 0;
  double yield_recurrence = 0.0;
  int best_m = 0;
  double yield_block = 0.0;
  double yield_four_pair = 0.0;
  double yield_combined = 0.0;
};

CurvePoint evaluate_curve_point(const BellDiagonal& dist,
                                double fidelity_label,
                                const CurveOptions& options);

// number of points in the inclusive grid f_min, f_min+step, ...
int curve_grid_size(double f_min, double f_max, double step);

// one point per Werner grid fidelity. throws std::invalid_argument unless
// 0 <= f_min < f_max <= 1 and step > 0.
std::vector<CurvePoint> werner_curve(const CurveOptions& options);

// shortest decimal form with the given significant digits ("%.*g").
std::string format_significant(double value, int digits = 12);

}  // namespace epp
