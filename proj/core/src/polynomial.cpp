#include "epp/polynomial.hpp"

#include <stdexcept>

namespace epp {

namespace {

constexpr std::array<const char*, 2> werner_names{"F", "G"};
constexpr std::array<const char*, 4> general_names{"p00", "p01", "p10", "p11"};

void check_same_vars(VarSet a, VarSet b) {
  if (a != b)
    throw std::invalid_argument("BellPolynomial: mixed variable sets");
}

}  // namespace

std::string var_name(VarSet vars, int index) {
  if (index < 0 || index >= var_count(vars))
    throw std::out_of_range("var_name: index outside variable set");
  return vars == VarSet::werner ? werner_names[index] : general_names[index];
}

BellPolynomial BellPolynomial::constant(VarSet vars, BigInt value) {
  return monomial(vars, Exponents{0, 0, 0, 0}, std::move(value));
}

BellPolynomial BellPolynomial::variable(VarSet vars, int index) {
  if (index < 0 || index >= var_count(vars))
    throw std::out_of_range("BellPolynomial: variable index");
  Exponents e{0, 0, 0, 0};
  e[index] = 1;
  return monomial(vars, e, 1);
}

BellPolynomial BellPolynomial::monomial(VarSet vars, Exponents exps,
                                        BigInt coeff) {
  for (int i = var_count(vars); i < 4; ++i)
    if (exps[i] != 0)
      throw std::invalid_argument("BellPolynomial: exponent beyond var set");
  BellPolynomial p(vars);
  p.add_term(exps, coeff);
  return p;
}

BigInt BellPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BellPolynomial::add_term(const Exponents& exps, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BellPolynomial& BellPolynomial::operator+=(const BellPolynomial& rhs) {
  check_same_vars(vars_, rhs.vars_);
  for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
  return *this;
}

BellPolynomial operator*(const BellPolynomial& lhs, const BellPolynomial& rhs) {
  check_same_vars(lhs.vars_, rhs.vars_);
  BellPolynomial out(lhs.vars_);
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      BellPolynomial::Exponents e{};
      for (int i = 0; i < 4; ++i) {
        const int sum = ea[i] + eb[i];
        if (sum > 255)
          throw std::overflow_error("BellPolynomial: exponent overflow");
        e[i] = static_cast<std::uint8_t>(sum);
      }
      out.add_term(e, ca * cb);
    }
  return out;
}

BellPolynomial& BellPolynomial::operator*=(const BellPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

BellPolynomial BellPolynomial::pow(unsigned n) const {
  BellPolynomial out = constant(vars_, 1);
  for (unsigned i = 0; i < n; ++i) out *= *this;
  return out;
}

double BellPolynomial::evaluate(std::span<const double> values) const {
  if (static_cast<int>(values.size()) != var_count(vars_))
    throw std::invalid_argument("BellPolynomial: wrong number of values");
  double total = 0.0;
  for (const auto& [exps, coeff] : terms_) {
    double term = coeff.convert_to<double>();
    for (int i = 0; i < var_count(vars_); ++i)
      for (int e = 0; e < exps[i]; ++e) term *= values[i];
    total += term;
  }
  return total;
}

std::string BellPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest-degree exponent vectors first reads closest to usual notation
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    if (!out.empty()) out += " + ";
    bool has_var = false;
    for (int i = 0; i < var_count(vars_); ++i) has_var |= exps[i] != 0;
    if (coeff != 1 || !has_var) {
      out += coeff.str();
      if (has_var) out += "*";
    }
    bool first = true;
    for (int i = 0; i < var_count(vars_); ++i) {
      if (exps[i] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += var_name(vars_, i);
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
  }
  return out;
}

}  // namespace epp
