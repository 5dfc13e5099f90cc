#include "epp/curve.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace epp {

CurvePoint evaluate_curve_point(const BellDiagonal& dist,
                                double fidelity_label,
                                const CurveOptions& options) {
  CurvePoint point;
  point.fidelity = fidelity_label;
  const auto& sel = options.protocols;
  if (sel.hashing) point.yield_hashing = hashing_yield(dist);
  if (sel.recurrence) {
    const ScheduleChoice rec = recurrence_schedule_yield(
        dist, TerminalProtocol::make_hashing(), options.max_rounds);
    point.best_k = rec.rounds;
    point.yield_recurrence = rec.yield;
  }
  if (sel.block) {
    const BlockChoice blk = best_block_yield(dist, options.max_block);
    point.best_m = blk.block_size;
    point.yield_block = blk.yield;
  }
  if (sel.four_pair) point.yield_four_pair = four_pair_yield(dist);
  if (sel.combined)
    point.yield_combined =
        best_combined_yield(dist, options.max_rounds, options.max_block)
            .yield;
  return point;
}

int curve_grid_size(double f_min, double f_max, double step) {
  if (!(f_min < f_max) || !(step > 0.0))
    throw std::invalid_argument("curve grid: need f_min < f_max, step > 0");
  return static_cast<int>((f_max - f_min) / step + 1e-9) + 1;
}

std::vector<CurvePoint> werner_curve(const CurveOptions& options) {
  if (!(options.f_min >= 0.0 && options.f_max <= 1.0))
    throw std::invalid_argument("curve grid: fidelity outside [0,1]");
  const int count = curve_grid_size(options.f_min, options.f_max,
                                    options.step);
  std::vector<CurvePoint> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    // the grid can overshoot f_max by rounding on the last point
    const double f = std::min(options.f_min + i * options.step,
                              options.f_max);
    points.push_back(
        evaluate_curve_point(BellDiagonal::werner(f), f, options));
  }
  return points;
}

std::string format_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

}  // namespace epp
