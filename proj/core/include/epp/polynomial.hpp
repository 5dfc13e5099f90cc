#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// exact multivariate polynomials with arbitrary-size integer coefficients.
// used by the symbolic enumeration paths, where floating point is banned;
// coefficients stay exact no matter how the terms combine.
namespace epp {

using BigInt = boost::multiprecision::cpp_int;

// variable sets: werner = {F, G}; general = {p00, p01, p10, p11}.
enum class VarSet { werner, general };

constexpr int var_count(VarSet v) { return v == VarSet::werner ? 2 : 4; }
std::string var_name(VarSet vars, int index);

class BellPolynomial {
 public:
  // exponent vector; entries at index >= var_count(vars) must stay 0.
  using Exponents = std::array<std::uint8_t, 4>;

  explicit BellPolynomial(VarSet vars) : vars_(vars) {}  // the zero polynomial

  static BellPolynomial constant(VarSet vars, BigInt value);
  static BellPolynomial variable(VarSet vars, int index);
  static BellPolynomial monomial(VarSet vars, Exponents exps, BigInt coeff);

  VarSet vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Exponents& exps) const;  // 0 when absent

  BellPolynomial& operator+=(const BellPolynomial& rhs);
  BellPolynomial& operator*=(const BellPolynomial& rhs);
  friend BellPolynomial operator+(BellPolynomial lhs,
                                  const BellPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BellPolynomial operator*(const BellPolynomial& lhs,
                                  const BellPolynomial& rhs);
  BellPolynomial pow(unsigned n) const;

  // values must supply one number per variable in the polynomial's set.
  double evaluate(std::span<const double> values) const;

  friend bool operator==(const BellPolynomial&, const BellPolynomial&) =
      default;

  std::string str() const;  // human-readable, highest exponents first

 private:
  void add_term(const Exponents& exps, const BigInt& coeff);

  VarSet vars_;
  std::map<Exponents, BigInt> terms_;  // zero coefficients never stored
};

}  // namespace epp
