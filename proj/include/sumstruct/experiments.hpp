#pragma once
// Desk-scale experiment drivers over pairs (X_1, X_2) of subsets of
// {0,...,n-1} with |X_i| = s_i and |X_1 + X_2| <= m ("admissible" pairs):
// exact enumeration with a size histogram, seeded sampling (rejection, with a
// swap-chain fallback when acceptance is poor), arithmetic-progression
// structure summaries, counting against a binomial benchmark, and grid-driven
// verification sweeps over the inequality oracles.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sumstruct/elem_set.hpp"
#include "sumstruct/exact.hpp"
#include "sumstruct/util.hpp"

namespace sumstruct {

struct RunConfig {
  GroupCtx group;               // ambient group of the ground sets
  long long n = 0;              // ground sets are {0,...,n-1} on both sides
  long long s1 = 0, s2 = 0;     // requires 1 <= s1 <= s2 <= n
  long long m = 0;
  double eps = 0.0;
  long long trials = 0;
  std::uint64_t seed = 1;
  long long enum_budget = 20'000'000;  // max subset pairs scanned exhaustively
  double accept_floor = 0.02;          // rejection sampling viability threshold
  long long burn_in = -1;              // swap-chain burn-in; -1 picks 50(s1+s2)
};

// Shared validity checks; structure mode additionally requires m >= s1 + s2
// and an integer (non-cyclic) group.
void validate_config(const RunConfig& cfg, bool structure_mode);

struct EnumerateResult {
  long long n = 0, s1 = 0, s2 = 0, m = 0;
  std::string pair_space;                    // binom(n,s1)*binom(n,s2)
  long long admissible = 0;                  // pairs with |X_1+X_2| <= m
  std::vector<long long> sumset_size_hist;   // index = |X_1+X_2|
};

// Exact scan of every pair. Throws (pointing at sample mode) when the pair
// space exceeds cfg.enum_budget.
EnumerateResult enumerate_pairs(const RunConfig& cfg);

struct SampledPair {
  std::vector<Elem> x1, x2;
  long long sumset_size = 0;
};

struct SampleStats {
  long long requested = 0, produced = 0;
  bool approximate = false;        // swap-chain fallback engaged
  long long burn_in = 0, stride = 0;
  double pilot_acceptance = 0.0;
  std::uint64_t seed = 0;
};

struct SampleResult {
  SampleStats stats;
  std::vector<SampledPair> pairs;
};

// Seeded sampling of admissible pairs: uniform rejection while the pilot
// acceptance rate clears cfg.accept_floor, otherwise a replace-one-element
// walk over admissible states (approximately uniform, flagged). Errors when
// no admissible pair can be found.
SampleResult sample_pairs(const RunConfig& cfg);

struct StructurePairStat {
  std::vector<Elem> x1, x2;
  long long sumset_size = 0;
  long long ap_diff = 0;  // shared difference of the fitted progression pair
  long long covered1 = 0, covered2 = 0;
  long long exceptional1 = 0, exceptional2 = 0;  // s_i - covered_i
};

struct StructureReport {
  long long cap1 = 0, cap2 = 0;  // progression length caps
  double slack = 0.0;
  long long pairs = 0;
  long long fully_covered = 0;
  long long max_exceptional1 = 0, max_exceptional2 = 0;
  double mean_exceptional1 = 0.0, mean_exceptional2 = 0.0;
  bool source_sampled = false;
  SampleStats sample_stats;  // only meaningful when source_sampled
  std::vector<StructurePairStat> rows;
};

// Fits each admissible pair with two progressions sharing one difference,
// length-capped at floor(s_i m/(s1+s2) + slack) with the default slack
// 2^6 m^{13/12} (s1+s2)^{-1/6} (ln n)^{1/4}, and summarizes the exceptional
// (uncovered) element counts. Exhaustive when trials = 0, sampled otherwise.
StructureReport structure_report(const RunConfig& cfg);

struct CountReport {
  long long n = 0, s1 = 0, s2 = 0, m = 0;
  std::string exact_count;
  std::string benchmark;  // binom(floor(s1(m+beta)/(s1+s2)), s1) * (same for s2)
  double lambda = 0.0;
  long long beta_used = 0;
  double log_count = 0.0;
  double log_benchmark = 0.0;
  double log_margin = 0.0;  // 2^10 m^{1/6} (s1+s2)^{2/3} lambda^{2/3} sqrt(ln n)
  bool bound_ok = true;     // count <= exp(log_margin) * benchmark
};

// Exact admissible-pair count compared against the binomial benchmark at
// lambda = min(m/(m-s1-s2), ln(s1+s2)) (second branch when m <= s1+s2) and
// beta taken at m + 2^8 m^{7/6} (s1+s2)^{-1/3} lambda^{-1/3} sqrt(ln n).
CountReport count_report(const RunConfig& cfg);

// One grid cell: key=value parameters, e.g. {"trials","2000"},{"seed","7"}.
struct SweepCell {
  std::map<std::string, std::string> kv;
};

// Nonempty, non-comment lines of space-separated key=value tokens.
std::vector<SweepCell> parse_grid(std::istream& in);

struct CellSummary {
  std::map<std::string, std::string> params;  // echo of the cell
  long long checks = 0;
  long long hypothesis_met = 0;
  long long witnessed = 0;  // structure-witness conclusions (where applicable)
  long long violations = 0;
};

struct SweepOutcome {
  std::string oracle;
  std::vector<CellSummary> cells;
  long long checks = 0;
  long long hypothesis_met = 0;
  long long witnessed = 0;
  long long violations = 0;
};

// Runs the named inequality oracle over the grid. Oracles: "pollard"
// (exhaustive subset sweep per cell: group, universe, max_size), "supersat"
// (random triples: group, n, eps, trials, seed), "kneser", "almost1",
// "freiman", "relstab" (generator-driven: trials, seed), "binom" (explicit
// m, s, t, alpha plus eps or window=lo|mid|hi). Throws on an unknown oracle
// or an empty grid.
SweepOutcome run_sweep(const std::string& oracle, const std::vector<SweepCell>& grid);

}  // namespace sumstruct
