#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

// label algebra for Bell-diagonal ensembles: each shared pair carries a
// (phase, amplitude) bit pair, and every operation we care about -- bilateral
// XOR, one- and two-sided rotations, comparison measurements -- acts on those
// bits by GF(2)-linear maps. no state vectors anywhere in this module.
namespace epp {

enum class BellLabel : std::uint8_t {
  phi_plus = 0b00,
  psi_plus = 0b01,
  phi_minus = 0b10,
  psi_minus = 0b11,
};

constexpr std::array<BellLabel, 4> all_labels{
    BellLabel::phi_plus, BellLabel::psi_plus, BellLabel::phi_minus,
    BellLabel::psi_minus};

constexpr int label_code(BellLabel l) { return static_cast<int>(l); }
constexpr int phase_bit(BellLabel l) { return (label_code(l) >> 1) & 1; }
constexpr int amplitude_bit(BellLabel l) { return label_code(l) & 1; }
constexpr BellLabel make_label(int phase, int amplitude) {
  return static_cast<BellLabel>(((phase & 1) << 1) | (amplitude & 1));
}

std::string label_name(BellLabel l);  // "phi+", "psi+", "phi-", "psi-"

struct BxorResult {
  BellLabel source;
  BellLabel target;
};

// bilateral XOR: both parties apply CNOT from their half of the source pair
// onto their half of the target pair. on labels the phase bit flows
// target -> source and the amplitude bit flows source -> target.
constexpr BxorResult bxor(BellLabel source, BellLabel target) {
  return {make_label(phase_bit(source) ^ phase_bit(target),
                     amplitude_bit(source)),
          make_label(phase_bit(target),
                     amplitude_bit(target) ^ amplitude_bit(source))};
}

// one-sided pi rotation about x: flips the amplitude bit.
constexpr BellLabel sigma_x_relabel(BellLabel l) {
  return make_label(phase_bit(l), amplitude_bit(l) ^ 1);
}

// two-sided pi/2 rotation about x: swaps phi+ <-> psi+, fixes phi-, psi-.
constexpr BellLabel bx_relabel(BellLabel l) {
  return make_label(phase_bit(l), amplitude_bit(l) ^ phase_bit(l) ^ 1);
}

// relabeling applied to the kept pair after a passed recurrence round
// (sigma_x then bx): fixes phi+, psi+ and swaps phi- <-> psi-.
constexpr BellLabel recurrence_relabel(BellLabel l) {
  return bx_relabel(sigma_x_relabel(l));
}

enum class MeasureAxis { x, z };

// both parties measure their half along the given axis and compare outcomes:
// 0 = identical, 1 = opposite. z reads the amplitude bit, x the phase bit.
constexpr int measure_compare(BellLabel l, MeasureAxis axis) {
  return axis == MeasureAxis::z ? amplitude_bit(l) : phase_bit(l);
}

inline constexpr double DIST_SUM_TOL = 1e-12;
inline constexpr double ENTROPY_NORM_TOL = 1e-9;

// probability vector over the four labels, indexed by label code.
class BellDiagonal {
 public:
  // validates componentwise non-negativity and sum within DIST_SUM_TOL of 1.
  explicit BellDiagonal(const std::array<double, 4>& p);
  BellDiagonal(double p00, double p01, double p10, double p11)
      : BellDiagonal(std::array<double, 4>{p00, p01, p10, p11}) {}

  static BellDiagonal werner(double fidelity);  // (F, G, G, G), G=(1-F)/3
  static BellDiagonal uniform() { return BellDiagonal(.25, .25, .25, .25); }
  static BellDiagonal pure(BellLabel l);

  double operator[](BellLabel l) const { return p_[label_code(l)]; }
  double at(int code) const { return p_[code]; }
  const std::array<double, 4>& probabilities() const { return p_; }
  double fidelity() const { return p_[0]; }

 private:
  std::array<double, 4> p_;
};

// fixed-length string of pair labels; pair 0 is the leftmost (most
// significant) two bits of the code, each pair contributing (phase,
// amplitude) in that order.
class BellString {
 public:
  explicit BellString(int pairs);  // all phi+
  static BellString from_code(std::uint32_t code, int pairs);
  static BellString from_string(std::string_view bits);  // "01..." length 2n

  int pairs() const { return pairs_; }
  std::uint32_t code() const { return code_; }
  BellLabel label(int i) const;
  void set_label(int i, BellLabel l);
  std::string str() const;

  friend bool operator==(const BellString&, const BellString&) = default;

 private:
  BellString(int pairs, std::uint32_t code) : pairs_(pairs), code_(code) {}
  int pairs_;
  std::uint32_t code_;
};

// the 4-pair bijection on 8-bit codes, bit 7 = a1 (pair a phase) down to
// bit 0 = d2 (pair d amplitude):
//   (a1,a2,b1,b2,c1,c2,d1,d2) ->
//   (a1^d1, a2^c2, b1^d1, b2^c2, a1^b1^c1^d1, c2, d1, a2^b2^c2^d2)
constexpr std::uint8_t apply_f_code(std::uint8_t x) {
  const int a1 = (x >> 7) & 1, a2 = (x >> 6) & 1, b1 = (x >> 5) & 1,
            b2 = (x >> 4) & 1, c1 = (x >> 3) & 1, c2 = (x >> 2) & 1,
            d1 = (x >> 1) & 1, d2 = x & 1;
  return static_cast<std::uint8_t>(
      ((a1 ^ d1) << 7) | ((a2 ^ c2) << 6) | ((b1 ^ d1) << 5) |
      ((b2 ^ c2) << 4) | ((a1 ^ b1 ^ c1 ^ d1) << 3) | (c2 << 2) | (d1 << 1) |
      (a2 ^ b2 ^ c2 ^ d2));
}

// pass condition for the 4-pair protocol: the two comparison bits of the
// image (pair-c x test, bit 3; pair-d z test, bit 0) are both 0.
constexpr bool four_pair_pass(std::uint8_t image) {
  return ((image >> 3) & 1) == 0 && (image & 1) == 0;
}

BellString apply_f(const BellString& s);  // requires s.pairs() == 4

// -sum p log2 p with 0 log 0 = 0. requires non-negative entries summing to 1
// within ENTROPY_NORM_TOL; throws std::domain_error otherwise.
double shannon_entropy(std::span<const double> dist);

}  // namespace epp
