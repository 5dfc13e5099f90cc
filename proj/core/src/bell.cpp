#include "epp/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace epp {

std::string label_name(BellLabel l) {
  switch (l) {
    case BellLabel::phi_plus:
      return "phi+";
    case BellLabel::psi_plus:
      return "psi+";
    case BellLabel::phi_minus:
      return "phi-";
    case BellLabel::psi_minus:
      return "psi-";
  }
  throw std::invalid_argument("bad label code");
}

BellDiagonal::BellDiagonal(const std::array<double, 4>& p) : p_(p) {
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0))  // also rejects NaN
      throw std::invalid_argument("BellDiagonal: negative component");
    sum += v;
  }
  if (std::abs(sum - 1.0) > DIST_SUM_TOL)
    throw std::invalid_argument("BellDiagonal: components must sum to 1");
}

BellDiagonal BellDiagonal::werner(double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0))
    throw std::invalid_argument("werner: fidelity outside [0,1]");
  const double g = (1.0 - fidelity) / 3.0;
  return BellDiagonal(fidelity, g, g, g);
}

BellDiagonal BellDiagonal::pure(BellLabel l) {
  std::array<double, 4> p{0, 0, 0, 0};
  p[label_code(l)] = 1.0;
  return BellDiagonal(p);
}

BellString::BellString(int pairs) : pairs_(pairs), code_(0) {
  if (pairs < 1 || pairs > 15)
    throw std::invalid_argument("BellString: pair count outside [1,15]");
}

BellString BellString::from_code(std::uint32_t code, int pairs) {
  BellString s(pairs);
  if (code >> (2 * pairs))
    throw std::invalid_argument("BellString: code too wide for pair count");
  s.code_ = code;
  return s;
}

BellString BellString::from_string(std::string_view bits) {
  if (bits.size() % 2 != 0)
    throw std::invalid_argument("BellString: odd bit count");
  BellString s(static_cast<int>(bits.size() / 2));
  std::uint32_t code = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("BellString: bits must be 0 or 1");
    code = (code << 1) | static_cast<std::uint32_t>(c - '0');
  }
  s.code_ = code;
  return s;
}

BellLabel BellString::label(int i) const {
  if (i < 0 || i >= pairs_) throw std::out_of_range("BellString: pair index");
  return static_cast<BellLabel>((code_ >> (2 * (pairs_ - 1 - i))) & 3u);
}

void BellString::set_label(int i, BellLabel l) {
  if (i < 0 || i >= pairs_) throw std::out_of_range("BellString: pair index");
  const int shift = 2 * (pairs_ - 1 - i);
  code_ = (code_ & ~(3u << shift)) |
          (static_cast<std::uint32_t>(label_code(l)) << shift);
}

std::string BellString::str() const {
  std::string out(2 * static_cast<std::size_t>(pairs_), '0');
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += (code_ >> (2 * pairs_ - 1 - i)) & 1u;
  return out;
}

BellString apply_f(const BellString& s) {
  if (s.pairs() != 4)
    throw std::invalid_argument("apply_f: requires exactly 4 pairs");
  return BellString::from_code(
      apply_f_code(static_cast<std::uint8_t>(s.code())), 4);
}

double shannon_entropy(std::span<const double> dist) {
  double sum = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0))
      throw std::domain_error("shannon_entropy: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > ENTROPY_NORM_TOL)
    throw std::domain_error("shannon_entropy: distribution not normalized");
  double h = 0.0;
  for (double p : dist)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace epp
