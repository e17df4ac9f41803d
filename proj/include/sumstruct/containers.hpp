#pragma once
// Container machinery for multipartite hypergraphs. A ladder of cap vectors
// descends from the start shape (1,...,1,c_r) by repeatedly decrementing the
// first positive entry; each rung carries a table of codegree allowances, and
// one "round" of the peeling algorithm turns a cap-x hypergraph into a
// cap-x' hypergraph while emitting the fingerprint/discard index sets.
// Iterating rounds until the edge count drops below a stage threshold yields,
// for every admissible independent set I, a container (A_1,...,A_r) together
// with a fingerprint (S_1,...,S_r) that determines it.

#include <string>
#include <vector>

#include "sumstruct/exact.hpp"
#include "sumstruct/hypergraph.hpp"

namespace sumstruct {

struct ParamPack {
  long long m = 0;   // last-part slack (clamped to |V_r|)
  long long b = 0;   // fingerprint budget per round
  long long q = 0;   // last-part shrink scale, 1 <= q <= m
  long long c_r = 1; // start cap on the last part
  Rat R;             // degree-condition headroom, > 0
  std::vector<long long> w;  // (|V_1|, ..., |V_{r-1}|, m)
  bool m_clamped = false;

  int r() const { return static_cast<int>(w.size()); }
  // Shrink fraction delta = 2^{-(c_r + r - 1)(2 c_r + r)} / R.
  Rat delta() const;
  // Stage-s edge-count guarantee alpha_s = 2^{-s(2 c_r + r)}.
  Rat alpha_at(long long s) const;
  // Stage-s stopping threshold factor
  // beta_s = alpha_s * prod_{j=1}^{min(r-1,s)} (b/|V_j|) * (b/m)^{max(0, s-r+1)}.
  Rat beta_at(long long s) const;
};

// Validates the shape (cap = (1,...,1,c_r)), clamps m to |V_r| (recorded in
// m_clamped), then requires 1 <= q <= m, 1 <= b <= min(|V_1|,...,|V_{r-1}|,m)
// and R > 0; throws std::invalid_argument otherwise.
ParamPack make_params(const PartedHypergraph& h, long long m, long long b, long long q, Rat R);

struct DegreeCheck {
  bool holds = false;
  Profile worst_y;           // profile with the largest codegree/allowance ratio
  double ratio = 0.0;        // that ratio (exact value in ratio_exact)
  std::string ratio_exact;
};

// Checks, for every y with y_i in {0,1} (i < r) and y_r in {0..c_r}, that the
// profile-y codegree is at most
//   R * b^{|y|-1} * e(h) * (m/q)^{[y_r > 0]} / (m^{y_r} prod_{i<r} |V_i|^{y_i}).
// The zero profile reads e(h) <= R e(h) / b, i.e. b <= R. Errors on an empty
// hypergraph.
DegreeCheck check_degree_condition(const PartedHypergraph& h, const ParamPack& p);

// Codegree allowances for every rung of the cap ladder. Stage 0 is the start
// shape, where the allowance equals the actual codegree; each later stage is
//   allow(x', v') = max(2 * allow(x, v' + e_{i'}), (b / w_{i'}) * allow(x, v'))
// with i' the first positive coordinate of x and x' = x - e_{i'}.
class DeltaTable {
 public:
  DeltaTable(const PartedHypergraph& h, const ParamPack& p);

  std::size_t stages() const { return ladder_.size(); }
  const std::vector<Profile>& ladder() const { return ladder_; }
  // Stage of a cap vector; throws if it is not on the ladder.
  std::size_t stage_of(const Profile& x) const;
  // Nonzero profiles v <= x at the given stage, lexicographically ascending.
  const std::vector<Profile>& profiles(std::size_t stage) const;
  const Rat& at(std::size_t stage, const Profile& v) const;

  // Index of the first positive coordinate, -1 for the zero vector.
  static int peel_index(const Profile& x);

 private:
  std::vector<Profile> ladder_;
  std::vector<std::vector<Profile>> profiles_;
  std::vector<std::map<Profile, Rat>> val_;
};

struct RoundOutput {
  PartedHypergraph g_star;  // cap x' remainder graph
  long long L = 0;          // number of iterations performed
  std::vector<int> u_seq;   // picked vertices u_0..u_{L-1} (ids in part i')
  std::vector<long long> S; // iterations whose pick was in I (fingerprint)
  std::vector<long long> W; // iterations whose pick was outside I (discards)
  int i_prime = -1;         // part peeled this round
  bool inert_stop = false;  // stopped with live edges none of which meet part i'

  bool operator==(const RoundOutput& o) const {
    return g_star == o.g_star && L == o.L && u_seq == o.u_seq && S == o.S && W == o.W;
  }
};

// One peeling round at cap x. Picks the max-degree vertex of part i'
// (ties by order_rank), records whether it lies in I, shrinks its edges into
// g_star when it does, then deletes every live edge containing the pick or
// containing a placement whose g_star codegree reached half its stage-x'
// allowance. Stops when |S| = b, no edges remain, or part i' has degree zero
// everywhere. Requires g within cap x and I independent in g.
RoundOutput algorithm_round(const PartedHypergraph& g, const Profile& x,
                            const std::vector<int>& I, const ParamPack& p,
                            const DeltaTable& table);

struct RoundStats {
  int stage = 0;
  int i_prime = -1;
  long long iterations = 0;
  long long picked_in = 0;   // |S|
  long long picked_out = 0;  // |W|
  long long edges_in = 0;    // e(G) entering the round
  long long edges_out = 0;   // e(G_*) leaving it
  bool kept_density = false;   // e(G_*) kept the stage-(s+1) guarantee
  bool big_discard_side = false;  // many discards against |V_{i'}| (i' < r)
  bool big_discard_last = false;  // many discards against q (i' = r)
  bool inert_stop = false;
};

struct ContainerRecord {
  std::vector<std::vector<int>> fingerprint;  // S_i: vertex ids per part, sorted
  std::vector<std::vector<int>> container;    // A_i: vertex ids per part, sorted
  int stop_stage = -1;  // stage whose round triggered the stop rule
  int stop_part = -1;   // part peeled at the stopping round
  std::vector<RoundStats> rounds;
};

// Runs rounds down the ladder, accumulating fingerprints, until the remainder
// has fewer than beta_{s+1} e(h) edges; the container then deletes the
// discarded picks of the stopping round from part i'. Checks at every stage
// that the codegree allowances and the stage edge-count guarantee hold and
// that one of the three guaranteed outcomes occurred (std::logic_error
// otherwise). Errors when I is not independent with |I cap V_r| >= |V_r| - m,
// or when the degree condition fails.
ContainerRecord build_container(const PartedHypergraph& h, const std::vector<int>& I,
                                const ParamPack& p);
// Same, reusing a precomputed allowance table for h.
ContainerRecord build_container(const PartedHypergraph& h, const std::vector<int>& I,
                                const ParamPack& p, const DeltaTable& table);

struct ContainerPropertyReport {
  long long checked = 0;
  long long containment_failures = 0;     // some I escapes its container
  long long shrink_failures = 0;          // no part shrank by the delta margin
  long long fingerprint_outside_i = 0;    // fingerprint not inside I
  long long side_condition_failures = 0;  // nonempty S_i without a shrunk later part
  long long fingerprint_all_empty = 0;    // informational: I with an empty fingerprint
  std::string delta_exact;
  bool ok() const {
    return containment_failures == 0 && shrink_failures == 0 &&
           fingerprint_outside_i == 0 && side_condition_failures == 0;
  }
};

// Builds the container of every sampled I and checks: containment
// (I cap V_i inside A_i), the shrink dichotomy (some A_i at most
// (1-delta)|V_i| with i < r, or A_r at most |V_r| - delta q), and the
// fingerprint side conditions.
ContainerPropertyReport verify_container_properties(const PartedHypergraph& h,
                                                    const ParamPack& p,
                                                    const std::vector<std::vector<int>>& sample);

// True when no edge (multiplicity >= 1) lies entirely inside I.
bool is_independent(const PartedHypergraph& h, const std::vector<int>& I);

}  // namespace sumstruct
