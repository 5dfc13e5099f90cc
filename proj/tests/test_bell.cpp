#include <doctest.h>

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "epp/bell.hpp"
#include "support/state_vector.hpp"

using epp::all_labels;
using epp::amplitude_bit;
using epp::apply_f;
using epp::apply_f_code;
using epp::BellDiagonal;
using epp::BellLabel;
using epp::BellString;
using epp::bx_relabel;
using epp::bxor;
using epp::four_pair_pass;
using epp::label_code;
using epp::make_label;
using epp::MeasureAxis;
using epp::measure_compare;
using epp::phase_bit;
using epp::recurrence_relabel;
using epp::shannon_entropy;
using epp::sigma_x_relabel;

namespace sv = epp::test;

namespace {
constexpr double kOracleTol = 1e-12;
constexpr double kEntropyExampleTol = 1e-5;   // quoted to six digits
constexpr double kEntropyFrozenTol = 1e-12;   // independently recomputed
}  // namespace

TEST_SUITE("bell") {

TEST_CASE("label encoding round-trips phase and amplitude bits") {
  CHECK_EQ(label_code(BellLabel::phi_plus), 0b00);
  CHECK_EQ(label_code(BellLabel::psi_plus), 0b01);
  CHECK_EQ(label_code(BellLabel::phi_minus), 0b10);
  CHECK_EQ(label_code(BellLabel::psi_minus), 0b11);
  for (BellLabel l : all_labels) {
    CHECK_EQ(make_label(phase_bit(l), amplitude_bit(l)), l);
  }
  CHECK_EQ(epp::label_name(BellLabel::phi_plus), "phi+");
  CHECK_EQ(epp::label_name(BellLabel::psi_plus), "psi+");
  CHECK_EQ(epp::label_name(BellLabel::phi_minus), "phi-");
  CHECK_EQ(epp::label_name(BellLabel::psi_minus), "psi-");
}

TEST_CASE("bell_state oracle states are orthonormal") {
  for (BellLabel a : all_labels) {
    for (BellLabel b : all_labels) {
      const double overlap =
          sv::overlap_magnitude(sv::bell_state(a), sv::bell_state(b));
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) <= kOracleTol);
    }
  }
}

TEST_CASE("bxor worked examples") {
  // source phi+, target phi+: both fixed.
  auto r = bxor(BellLabel::phi_plus, BellLabel::phi_plus);
  CHECK_EQ(r.source, BellLabel::phi_plus);
  CHECK_EQ(r.target, BellLabel::phi_plus);
  // source psi+, target phi+: amplitude bit copies onto the target.
  r = bxor(BellLabel::psi_plus, BellLabel::phi_plus);
  CHECK_EQ(r.source, BellLabel::psi_plus);
  CHECK_EQ(r.target, BellLabel::psi_plus);
  // source phi-, target phi-: phase bits cancel on the source.
  r = bxor(BellLabel::phi_minus, BellLabel::phi_minus);
  CHECK_EQ(r.source, BellLabel::phi_plus);
  CHECK_EQ(r.target, BellLabel::phi_minus);
}

TEST_CASE("bxor matches the two-pair state-vector oracle on all 16 inputs") {
  // four qubits ordered (Alice1, Bob1, Alice2, Bob2); the source pair is
  // qubits (0, 1) and the target pair qubits (2, 3). both parties apply
  // CNOT from their source half onto their target half.
  for (BellLabel source : all_labels) {
    for (BellLabel target : all_labels) {
      sv::StateVector state =
          sv::kron(sv::bell_state(source), sv::bell_state(target));
      state = sv::apply_cnot(state, 0, 2, 4);
      state = sv::apply_cnot(state, 1, 3, 4);
      const auto expected_labels = bxor(source, target);
      const sv::StateVector expected =
          sv::kron(sv::bell_state(expected_labels.source),
                   sv::bell_state(expected_labels.target));
      CHECK(std::abs(sv::overlap_magnitude(expected, state) - 1.0) <=
            kOracleTol);
    }
  }
}

TEST_CASE("bxor conserves source amplitude and target phase and transports "
          "the pair parities") {
  for (BellLabel source : all_labels) {
    for (BellLabel target : all_labels) {
      const auto r = bxor(source, target);
      // untouched bits
      CHECK_EQ(amplitude_bit(r.source), amplitude_bit(source));
      CHECK_EQ(phase_bit(r.target), phase_bit(target));
      // the pair's amplitude parity lands on the target, so a later
      // amplitude measurement of the target reveals it; the phase parity
      // accumulates on the source
      CHECK_EQ(amplitude_bit(r.target),
               amplitude_bit(source) ^ amplitude_bit(target));
      CHECK_EQ(phase_bit(r.source), phase_bit(source) ^ phase_bit(target));
    }
  }
}

TEST_CASE("one-sided x flip matches the oracle and is an involution") {
  for (BellLabel l : all_labels) {
    sv::StateVector state = sv::bell_state(l);
    state = sv::apply_one_qubit(state, sv::pauli_x(), 1, 2);  // Bob's half
    const double overlap =
        sv::overlap_magnitude(sv::bell_state(sigma_x_relabel(l)), state);
    CHECK(std::abs(overlap - 1.0) <= kOracleTol);
    CHECK_EQ(sigma_x_relabel(sigma_x_relabel(l)), l);
  }
}

TEST_CASE("two-sided x quarter-turn matches the oracle and is an involution") {
  for (BellLabel l : all_labels) {
    sv::StateVector state = sv::bell_state(l);
    state = sv::apply_one_qubit(state, sv::x_quarter_turn(), 0, 2);
    state = sv::apply_one_qubit(state, sv::x_quarter_turn(), 1, 2);
    const double overlap =
        sv::overlap_magnitude(sv::bell_state(bx_relabel(l)), state);
    CHECK(std::abs(overlap - 1.0) <= kOracleTol);
    CHECK_EQ(bx_relabel(bx_relabel(l)), l);
  }
  CHECK_EQ(bx_relabel(BellLabel::phi_plus), BellLabel::psi_plus);
  CHECK_EQ(bx_relabel(BellLabel::psi_plus), BellLabel::phi_plus);
  CHECK_EQ(bx_relabel(BellLabel::phi_minus), BellLabel::phi_minus);
  CHECK_EQ(bx_relabel(BellLabel::psi_minus), BellLabel::psi_minus);
}

TEST_CASE("post-round relabel fixes the plus pair and swaps the minus pair") {
  CHECK_EQ(recurrence_relabel(BellLabel::phi_plus), BellLabel::phi_plus);
  CHECK_EQ(recurrence_relabel(BellLabel::psi_plus), BellLabel::psi_plus);
  CHECK_EQ(recurrence_relabel(BellLabel::phi_minus), BellLabel::psi_minus);
  CHECK_EQ(recurrence_relabel(BellLabel::psi_minus), BellLabel::phi_minus);
  for (BellLabel l : all_labels) {
    CHECK_EQ(recurrence_relabel(l), bx_relabel(sigma_x_relabel(l)));
  }
}

TEST_CASE("comparison measurements match the oracle on both axes") {
  for (BellLabel l : all_labels) {
    // z axis: measure both halves in the computational basis and compare.
    const double z_same = sv::equal_outcome_probability(sv::bell_state(l));
    CHECK(std::abs(z_same - (1.0 - measure_compare(l, MeasureAxis::z))) <=
          kOracleTol);
    // x axis: rotate both halves with a Hadamard, then compare in z.
    sv::StateVector rotated = sv::bell_state(l);
    rotated = sv::apply_one_qubit(rotated, sv::hadamard(), 0, 2);
    rotated = sv::apply_one_qubit(rotated, sv::hadamard(), 1, 2);
    const double x_same = sv::equal_outcome_probability(rotated);
    CHECK(std::abs(x_same - (1.0 - measure_compare(l, MeasureAxis::x))) <=
          kOracleTol);
  }
}

TEST_CASE("comparison outcomes for a worked four-pair string") {
  // 00100111 reads as pairs phi+, phi-, psi+, psi-: an x test on the third
  // pair comes out identical, a z test on the fourth pair comes out opposite.
  const BellString s = BellString::from_string("00100111");
  CHECK_EQ(s.label(0), BellLabel::phi_plus);
  CHECK_EQ(s.label(1), BellLabel::phi_minus);
  CHECK_EQ(s.label(2), BellLabel::psi_plus);
  CHECK_EQ(s.label(3), BellLabel::psi_minus);
  CHECK_EQ(measure_compare(s.label(2), MeasureAxis::x), 0);
  CHECK_EQ(measure_compare(s.label(3), MeasureAxis::z), 1);
}

TEST_CASE("BellString round-trips codes, bit strings, and labels") {
  const BellString s = BellString::from_string("00100111");
  CHECK_EQ(s.pairs(), 4);
  CHECK_EQ(s.code(), 0b00100111u);
  CHECK_EQ(s.str(), "00100111");
  CHECK_EQ(BellString::from_code(0b00100111u, 4), s);

  BellString t(4);
  CHECK_EQ(t.str(), "00000000");
  for (int i = 0; i < 4; ++i) t.set_label(i, s.label(i));
  CHECK_EQ(t, s);

  CHECK_THROWS_AS(BellString(0), std::invalid_argument);
  CHECK_THROWS_AS(BellString(16), std::invalid_argument);
  CHECK_THROWS_AS(BellString::from_code(1u << 8, 4), std::invalid_argument);
  CHECK_THROWS_AS(BellString::from_string("0"), std::invalid_argument);
  CHECK_THROWS_AS(BellString::from_string("0a"), std::invalid_argument);
  CHECK_THROWS_AS(s.label(4), std::out_of_range);
}

TEST_CASE("four-pair circuit worked examples") {
  CHECK_EQ(apply_f(BellString::from_string("00000000")).str(), "00000000");
  CHECK_EQ(apply_f(BellString::from_string("01010101")).str(), "00000100");
  CHECK_EQ(apply_f(BellString::from_string("11110000")).str(), "11110000");
  CHECK(four_pair_pass(apply_f_code(0b00000000)));
  CHECK(four_pair_pass(apply_f_code(0b01010101)));
  CHECK_FALSE(four_pair_pass(0b00001000));  // x comparison disagrees
  CHECK_FALSE(four_pair_pass(0b00000001));  // z comparison disagrees
}

TEST_CASE("four-pair circuit is a bijection on the 256 codes") {
  std::set<std::uint8_t> images;
  for (int code = 0; code < 256; ++code) {
    images.insert(apply_f_code(static_cast<std::uint8_t>(code)));
  }
  CHECK_EQ(images.size(), 256u);
}

TEST_CASE("four-pair circuit equals its five-gate bilateral-XOR sequence") {
  // pairs a, b, c, d = 0..3; the circuit is the composition of bilateral
  // XORs c->a, c->b, a->d, b->d, c->d.
  constexpr std::array<std::array<int, 2>, 5> gates{
      {{2, 0}, {2, 1}, {0, 3}, {1, 3}, {2, 3}}};
  for (int code = 0; code < 256; ++code) {
    const BellString in = BellString::from_code(code, 4);
    std::array<BellLabel, 4> labels{in.label(0), in.label(1), in.label(2),
                                    in.label(3)};
    for (const auto& gate : gates) {
      const auto r = bxor(labels[gate[0]], labels[gate[1]]);
      labels[gate[0]] = r.source;
      labels[gate[1]] = r.target;
    }
    BellString expected(4);
    for (int i = 0; i < 4; ++i) expected.set_label(i, labels[i]);
    CHECK_EQ(apply_f(in), expected);
  }
}

TEST_CASE("BellDiagonal validates and exposes its factories") {
  const BellDiagonal w = BellDiagonal::werner(0.9);
  CHECK_EQ(w.fidelity(), 0.9);
  CHECK(std::abs(w[BellLabel::psi_plus] - 0.1 / 3.0) <= 1e-15);
  CHECK(std::abs(w[BellLabel::phi_minus] - 0.1 / 3.0) <= 1e-15);
  CHECK(std::abs(w[BellLabel::psi_minus] - 0.1 / 3.0) <= 1e-15);

  const BellDiagonal u = BellDiagonal::uniform();
  for (BellLabel l : all_labels) CHECK_EQ(u[l], 0.25);

  const BellDiagonal pure = BellDiagonal::pure(BellLabel::psi_minus);
  CHECK_EQ(pure[BellLabel::psi_minus], 1.0);
  CHECK_EQ(pure[BellLabel::phi_plus], 0.0);
  CHECK_EQ(pure.at(3), 1.0);

  CHECK_THROWS_AS(BellDiagonal(0.5, 0.5, 0.5, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(BellDiagonal(0.5, 0.5, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(BellDiagonal::werner(1.5), std::invalid_argument);
  CHECK_THROWS_AS(BellDiagonal::werner(-0.1), std::invalid_argument);
}

TEST_CASE("shannon entropy: anchors, invariance, and domain checks") {
  const std::array<double, 4> point{1.0, 0.0, 0.0, 0.0};
  CHECK_EQ(shannon_entropy(point), 0.0);

  const std::array<double, 4> flat{0.25, 0.25, 0.25, 0.25};
  CHECK(std::abs(shannon_entropy(flat) - 2.0) <= 1e-15);

  const double h = shannon_entropy(BellDiagonal::werner(0.9).probabilities());
  CHECK(std::abs(h - 0.627492) <= kEntropyExampleTol);
  CHECK(std::abs(h - 0.6274918436613968) <= kEntropyFrozenTol);

  // permutation invariance
  const std::array<double, 4> a{0.4, 0.3, 0.2, 0.1};
  const std::array<double, 4> b{0.1, 0.2, 0.4, 0.3};
  CHECK(std::abs(shannon_entropy(a) - shannon_entropy(b)) <= 1e-15);

  // uniform maximizes entropy at log2(size)
  const std::vector<double> flat16(16, 1.0 / 16.0);
  CHECK(std::abs(shannon_entropy(flat16) - 4.0) <= 1e-12);

  const std::array<double, 4> negative{0.5, 0.6, -0.1, 0.0};
  CHECK_THROWS_AS(shannon_entropy(negative), std::domain_error);
  const std::array<double, 4> unnormalized{0.5, 0.5, 0.5, 0.5};
  CHECK_THROWS_AS(shannon_entropy(unnormalized), std::domain_error);
}

}  // TEST_SUITE("bell")
