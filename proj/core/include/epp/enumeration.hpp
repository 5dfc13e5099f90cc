#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "epp/bell.hpp"
#include "epp/polynomial.hpp"

// brute-force enumeration over label strings, with either numeric or exact
// polynomial weights. everything here is an oracle: small, obviously correct,
// and used to pin down the closed forms and fast paths in protocols.hpp.
namespace epp {

inline constexpr int MAX_DENSE_PAIRS = 10;   // 4^10 strings, dense tables
inline constexpr int MAX_DENSE_BLOCK = 8;    // dense block-protocol bound

// dense weight table over all 4^pairs label strings, indexed by string code.
template <typename W>
struct WeightedStringTable {
  int pairs;
  std::vector<W> weight;
};

// weight of a string = product of its per-pair weights.
WeightedStringTable<double> product_table(const BellDiagonal& dist, int pairs);
// symbolic per-pair weights: werner assigns F to label 00 and G to the rest;
// general assigns one variable per label.
WeightedStringTable<BellPolynomial> product_table(VarSet vars, int pairs);

// outcome of conditioning the 4-pair circuit on both comparison bits passing,
// marginalized onto the two kept pairs (codes a1a2b1b2, 16 entries).
// numeric path: pass_weight is p_pass and posterior is normalized to sum 1.
// symbolic path: posterior is left unnormalized and sums to pass_weight.
template <typename W>
struct ConditionalResult {
  W pass_weight;
  std::vector<W> posterior;  // size 16
};

ConditionalResult<double> four_pair_exact(
    const WeightedStringTable<double>& table);
ConditionalResult<BellPolynomial> four_pair_exact(
    const WeightedStringTable<BellPolynomial>& table);

// one row of the passing-string table for Werner-form input: the string's
// probability monomial, the input bits, the circuit image bits, and the
// image's first four bits (the kept pairs' labels).
struct PassTableRow {
  std::string monomial;
  std::string input;
  std::string f_image;
  std::string marginal;

  friend bool operator==(const PassTableRow&, const PassTableRow&) = default;
};

// all 64 passing strings, sorted by (marginal, input).
std::vector<PassTableRow> generate_pass_table();
// header "monomial,input,f_image,marginal", one row per record.
void write_pass_table_csv(std::ostream& out,
                          const std::vector<PassTableRow>& rows);

struct StepResult {
  BellDiagonal output;
  double pass_probability;
};

// one recurrence round by enumeration of all 16 source/target label pairs:
// bxor, keep iff the target z-comparison agrees, relabel the kept pair.
StepResult recurrence_exact(const BellDiagonal& dist);

struct BlockExact {
  double pass_probability;
  // joint entropy (bits) of the surviving m-1 source-pair labels; 0 when
  // pass_probability is 0 (no surviving strings).
  double posterior_entropy_bits;
};

// block protocol on m pairs by dense enumeration of 4^m strings: pairs
// 1..m-1 are each bxor'ed into pair m, which is then z-compared.
// requires 2 <= m <= MAX_DENSE_BLOCK; throws std::length_error otherwise.
BlockExact block_exact(const BellDiagonal& dist, int m);

}  // namespace epp
