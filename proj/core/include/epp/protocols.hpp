#pragma once

#include <utility>
#include <vector>

#include "epp/enumeration.hpp"

// yield formulas and schedule optimization for the protocol families:
// hashing alone, iterated recurrence with a terminal protocol, the m-pair
// block protocol, and the 4-pair protocol (exact and closed-form paths).
// every yield is ebits per input pair, clamped to be non-negative.
namespace epp {

inline constexpr int MAX_BLOCK_SIZE = 64;      // multinomial-path bound
inline constexpr int DEFAULT_MAX_ROUNDS = 64;  // recurrence schedule bound

// 1 - H(p), clamped at 0.
double hashing_yield(const BellDiagonal& dist);

// one recurrence round via the closed-form update
//   p'00 = (p00^2+p10^2)/p_pass   p'01 = (p01^2+p11^2)/p_pass
//   p'10 = 2 p01 p11 / p_pass     p'11 = 2 p00 p10 / p_pass
//   p_pass = p00^2+p01^2+p10^2+p11^2+2 p00 p10+2 p01 p11
// (the relabeling after the comparison is folded in, matching
// recurrence_exact).
StepResult recurrence_step(const BellDiagonal& dist);

// pass probability of the m-pair block protocol: the comparison passes iff
// the block's total amplitude parity is even, giving (1+(1-2 q1)^m)/2 with
// q1 = p01+p11.
double block_pass_probability(const BellDiagonal& dist, int m);

// block-protocol yield p_pass * (m-1)/m * (1 - H(passed sources)/(m-1)).
// exploits exchangeability: the posterior weight of a surviving source
// string depends only on its label counts, so the entropy is a sum over
// count vectors with multinomial multiplicities. requires
// 2 <= m <= MAX_BLOCK_SIZE; throws std::length_error otherwise.
double block_yield(const BellDiagonal& dist, int m);

struct BlockChoice {
  int block_size;
  double yield;
};

// argmax of block_yield over 2 <= m <= max_block (smallest m on ties).
// block sizes whose yield is provably 0 by a min-entropy bound are skipped
// without enumeration; the reported choice is unaffected.
BlockChoice best_block_yield(const BellDiagonal& dist,
                             int max_block = MAX_BLOCK_SIZE);

// 4-pair protocol yield p_pass/2 * (1 - H(Q)/2) via numeric enumeration.
double four_pair_yield(const BellDiagonal& dist);

struct ClosedFormYield {
  double pass_probability;
  double conditional_entropy_bits;
  double yield;
};

// closed forms for the 4-pair protocol. the Werner form evaluates
//   p_pass = F^4 + 18 F^2 G^2 + 24 F G^3 + 21 G^4,  G = (1-F)/3,
// with posterior classes (F^4+3G^4) x1, (2F^2G^2+2G^4) x9, (4FG^3) x6;
// the general form evaluates the four-variable quartic with classes
// weighted 1, 6, 3, 3, 3.
ClosedFormYield four_pair_closed_form_werner(double fidelity);
ClosedFormYield four_pair_closed_form_general(const BellDiagonal& dist);

// the same closed forms as exact polynomials, for coefficient-level
// comparison against the symbolic enumeration.
struct FourPairClosedForm {
  BellPolynomial pass;
  // posterior weight class -> number of marginal strings carrying it
  std::vector<std::pair<BellPolynomial, int>> posterior_classes;
};
FourPairClosedForm four_pair_closed_form_polynomials(VarSet vars);

struct TerminalProtocol {
  enum class Kind { hashing, block, four_pair };
  Kind kind = Kind::hashing;
  int block_size = 0;  // required for Kind::block

  static TerminalProtocol make_hashing() { return {Kind::hashing, 0}; }
  static TerminalProtocol make_block(int m) { return {Kind::block, m}; }
  static TerminalProtocol make_four_pair() { return {Kind::four_pair, 0}; }
};

double terminal_yield(const BellDiagonal& dist, const TerminalProtocol& t);

struct ProtocolSchedule {
  int recurrence_rounds = 0;
  TerminalProtocol terminal;
};

// recurrence_rounds rounds (each passing round keeps half the pairs and
// costs its pass probability), then the terminal protocol:
//   yield = (prod_i p_pass,i / 2^k) * terminal_yield(evolved dist)
double pipeline_yield(const BellDiagonal& dist,
                      const ProtocolSchedule& schedule);

struct ScheduleChoice {
  int rounds;
  double yield;
};

// argmax of pipeline_yield over 0 <= k <= max_rounds for a fixed terminal
// (smallest k on ties). rounds whose prefactor already rules out any
// improvement are not evaluated; the reported choice is unaffected.
ScheduleChoice recurrence_schedule_yield(
    const BellDiagonal& dist, const TerminalProtocol& terminal,
    int max_rounds = DEFAULT_MAX_ROUNDS);

struct CombinedChoice {
  ProtocolSchedule schedule;
  double yield;
};

// best pipeline over 0 <= k <= max_rounds and all terminals (hashing,
// best block size <= max_block, 4-pair).
CombinedChoice best_combined_yield(const BellDiagonal& dist,
                                   int max_rounds = DEFAULT_MAX_ROUNDS,
                                   int max_block = MAX_BLOCK_SIZE);

// --- crossover analysis -------------------------------------------------

struct CrossoverConfig {
  int max_rounds = DEFAULT_MAX_ROUNDS;
  int max_block = MAX_BLOCK_SIZE;
  double bisect_tol = 5e-3;  // endpoint refinement tolerance in F
};

// yields of the 4-pair protocol and its two competitors at one Werner point.
struct CompetitorPoint {
  double fidelity;
  double four_pair;
  double recurrence;  // best recurrence-then-hashing schedule
  int recurrence_rounds;
  double block;  // best block size
  int block_size;
  bool four_pair_wins;  // strictly beats both competitors
};

CompetitorPoint evaluate_competitors(double fidelity,
                                     const CrossoverConfig& config = {});

struct CrossoverInterval {
  double lower;
  double upper;
  CompetitorPoint at_lower;  // competitor configuration near each endpoint
  CompetitorPoint at_upper;
};

struct CrossoverReport {
  std::vector<CompetitorPoint> grid;
  std::vector<CrossoverInterval> intervals;
};

// evaluates the Werner grid f_min, f_min+step, ..., f_max, collects maximal
// runs where the 4-pair protocol strictly wins, and refines interior
// endpoints by bisection to config.bisect_tol.
CrossoverReport crossover_scan(double f_min, double f_max, double step,
                               const CrossoverConfig& config = {});

}  // namespace epp
