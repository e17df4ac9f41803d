#include "sumstruct/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sumstruct/ap_cover.hpp"
#include "sumstruct/instance_gen.hpp"
#include "sumstruct/oracles.hpp"
#include "sumstruct/setops.hpp"

namespace sumstruct {

namespace {

// Stamped dense buffer: computes |X_1 + X_2| for index sets over {0..n-1}
// without clearing between calls.
class SumsetSizer {
 public:
  SumsetSizer(const GroupCtx& g, long long n)
      : cyclic_(g.is_cyclic()), mod_(g.modulus) {
    const long long span = cyclic_ ? mod_ : std::max(1LL, 2 * n - 1);
    stamp_.assign(static_cast<std::size_t>(span), 0);
  }

  long long size(const std::vector<long long>& x1, const std::vector<long long>& x2) {
    ++epoch_;
    long long cnt = 0;
    for (long long a : x1) {
      for (long long b : x2) {
        long long s = a + b;
        if (cyclic_ && s >= mod_) s -= mod_;
        if (stamp_[static_cast<std::size_t>(s)] != epoch_) {
          stamp_[static_cast<std::size_t>(s)] = epoch_;
          ++cnt;
        }
      }
    }
    return cnt;
  }

 private:
  bool cyclic_;
  long long mod_;
  std::vector<long long> stamp_;
  long long epoch_ = 0;
};

// Ascending k-combinations of {0..n-1}.
void each_combination(long long n, long long k,
                      const std::function<void(const std::vector<long long>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<long long> idx(k);
  std::iota(idx.begin(), idx.end(), 0LL);
  if (k == 0) {
    fn(idx);
    return;
  }
  while (true) {
    fn(idx);
    long long i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Elem> to_elems(const std::vector<long long>& v) {
  return std::vector<Elem>(v.begin(), v.end());
}

double ln_of_int(const Int& v) {
  signed long e;
  const double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

void validate_config(const RunConfig& cfg, bool structure_mode) {
  if (cfg.n < 1) throw std::invalid_argument("n must be positive");
  if (cfg.s1 < 1 || cfg.s1 > cfg.s2 || cfg.s2 > cfg.n)
    throw std::invalid_argument("sizes must satisfy 1 <= s1 <= s2 <= n");
  if (cfg.m < 1) throw std::invalid_argument("m must be positive");
  if (cfg.group.is_cyclic() && cfg.n > cfg.group.modulus)
    throw std::invalid_argument("ground set cannot exceed the cyclic group");
  if (structure_mode) {
    if (cfg.m < cfg.s1 + cfg.s2)
      throw std::invalid_argument("structure mode needs m >= s1 + s2");
    if (cfg.group.is_cyclic())
      throw std::invalid_argument("structure mode fits progressions over the integers");
  }
}

EnumerateResult enumerate_pairs(const RunConfig& cfg) {
  validate_config(cfg, false);
  const Int space = binom(cfg.n, cfg.s1) * binom(cfg.n, cfg.s2);
  if (space > Int(static_cast<long>(cfg.enum_budget)))
    throw std::invalid_argument(
        "pair space " + space.get_str() +
        " exceeds the enumeration budget; use sample mode instead");

  EnumerateResult out;
  out.n = cfg.n;
  out.s1 = cfg.s1;
  out.s2 = cfg.s2;
  out.m = cfg.m;
  out.pair_space = space.get_str();
  const long long span = cfg.group.is_cyclic() ? cfg.group.modulus
                                               : std::max(1LL, 2 * cfg.n - 1);
  out.sumset_size_hist.assign(static_cast<std::size_t>(span) + 1, 0);

  SumsetSizer sizer(cfg.group, cfg.n);
  each_combination(cfg.n, cfg.s1, [&](const std::vector<long long>& x1) {
    each_combination(cfg.n, cfg.s2, [&](const std::vector<long long>& x2) {
      const long long sz = sizer.size(x1, x2);
      out.sumset_size_hist[static_cast<std::size_t>(sz)]++;
      if (sz <= cfg.m) out.admissible++;
    });
  });
  return out;
}

SampleResult sample_pairs(const RunConfig& cfg) {
  validate_config(cfg, false);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be positive");

  SampleResult out;
  out.stats.requested = cfg.trials;
  out.stats.seed = cfg.seed;
  Rng rng(cfg.seed);
  SumsetSizer sizer(cfg.group, cfg.n);

  const auto draw = [&](long long k) { return rng.pick_k_of_n(cfg.n, k); };

  // Pilot run: estimate the acceptance rate and remember one admissible state.
  constexpr long long kPilot = 2000;
  long long hits = 0;
  std::vector<long long> seed1, seed2;
  for (long long i = 0; i < kPilot; ++i) {
    const auto x1 = draw(cfg.s1);
    const auto x2 = draw(cfg.s2);
    if (sizer.size(x1, x2) <= cfg.m) {
      ++hits;
      if (seed1.empty()) {
        seed1 = x1;
        seed2 = x2;
      }
    }
  }
  out.stats.pilot_acceptance = static_cast<double>(hits) / kPilot;

  if (out.stats.pilot_acceptance >= cfg.accept_floor) {
    // Uniform rejection sampling.
    const long long attempt_cap =
        cfg.trials * std::max(10LL, static_cast<long long>(20.0 / cfg.accept_floor)) + 100000;
    long long attempts = 0;
    while (static_cast<long long>(out.pairs.size()) < cfg.trials) {
      if (++attempts > attempt_cap)
        throw std::runtime_error("rejection sampling exceeded its attempt budget");
      const auto x1 = draw(cfg.s1);
      const auto x2 = draw(cfg.s2);
      const long long sz = sizer.size(x1, x2);
      if (sz <= cfg.m) out.pairs.push_back({to_elems(x1), to_elems(x2), sz});
    }
    out.stats.produced = cfg.trials;
    return out;
  }

  // Swap-chain fallback: replace-one-element moves over admissible states.
  if (seed1.empty()) {
    std::vector<long long> i1(cfg.s1), i2(cfg.s2);
    std::iota(i1.begin(), i1.end(), 0LL);
    std::iota(i2.begin(), i2.end(), 0LL);
    if (sizer.size(i1, i2) <= cfg.m) {
      seed1 = i1;
      seed2 = i2;
    } else {
      for (long long i = 0; i < 20000 && seed1.empty(); ++i) {
        const auto x1 = draw(cfg.s1);
        const auto x2 = draw(cfg.s2);
        if (sizer.size(x1, x2) <= cfg.m) {
          seed1 = x1;
          seed2 = x2;
        }
      }
      if (seed1.empty())
        throw std::invalid_argument("no admissible pair found; m looks too small");
    }
  }

  out.stats.approximate = true;
  out.stats.burn_in = cfg.burn_in < 0 ? 50 * (cfg.s1 + cfg.s2) : cfg.burn_in;
  out.stats.stride = cfg.s1 + cfg.s2;

  std::vector<long long> x1 = seed1, x2 = seed2;
  std::vector<char> in1(cfg.n, 0), in2(cfg.n, 0);
  for (long long v : x1) in1[static_cast<std::size_t>(v)] = 1;
  for (long long v : x2) in2[static_cast<std::size_t>(v)] = 1;

  const auto step = [&]() {
    const bool side1 = rng.coin();
    auto& x = side1 ? x1 : x2;
    auto& in = side1 ? in1 : in2;
    const long long k = static_cast<long long>(x.size());
    if (k == cfg.n) return;  // no move possible on a full side
    const std::size_t pos = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)));
    long long add;
    do {
      add = static_cast<long long>(rng.below(static_cast<std::uint64_t>(cfg.n)));
    } while (in[static_cast<std::size_t>(add)]);
    const long long old = x[pos];
    x[pos] = add;
    if (sizer.size(x1, x2) <= cfg.m) {
      in[static_cast<std::size_t>(old)] = 0;
      in[static_cast<std::size_t>(add)] = 1;
      std::sort(x.begin(), x.end());
    } else {
      x[pos] = old;
      std::sort(x.begin(), x.end());
    }
  };

  for (long long i = 0; i < out.stats.burn_in; ++i) step();
  for (long long t = 0; t < cfg.trials; ++t) {
    for (long long i = 0; i < out.stats.stride; ++i) step();
    out.pairs.push_back({to_elems(x1), to_elems(x2), sizer.size(x1, x2)});
  }
  out.stats.produced = cfg.trials;
  return out;
}

StructureReport structure_report(const RunConfig& cfg) {
  validate_config(cfg, true);
  StructureReport rep;
  const double s_total = static_cast<double>(cfg.s1 + cfg.s2);
  rep.slack = 64.0 * std::pow(static_cast<double>(cfg.m), 13.0 / 12.0) *
              std::pow(s_total, -1.0 / 6.0) *
              std::pow(std::log(static_cast<double>(cfg.n)), 0.25);
  rep.cap1 = std::max(1LL, static_cast<long long>(std::floor(
                               static_cast<double>(cfg.s1) * cfg.m / s_total + rep.slack)));
  rep.cap2 = std::max(1LL, static_cast<long long>(std::floor(
                               static_cast<double>(cfg.s2) * cfg.m / s_total + rep.slack)));

  constexpr long long kMaxRows = 100000;
  long long sum_exc1 = 0, sum_exc2 = 0;

  const auto consume = [&](const std::vector<Elem>& e1, const std::vector<Elem>& e2,
                           long long sumset_size) {
    const ElemSet a(cfg.group, e1), b(cfg.group, e2);
    const JointCoverResult j = best_joint_ap_cover(a, b, rep.cap1, rep.cap2);
    StructurePairStat st;
    st.sumset_size = sumset_size;
    st.ap_diff = j.p1.diff;
    st.covered1 = j.covered1;
    st.covered2 = j.covered2;
    st.exceptional1 = cfg.s1 - j.covered1;
    st.exceptional2 = cfg.s2 - j.covered2;
    rep.pairs++;
    if (st.exceptional1 == 0 && st.exceptional2 == 0) rep.fully_covered++;
    rep.max_exceptional1 = std::max(rep.max_exceptional1, st.exceptional1);
    rep.max_exceptional2 = std::max(rep.max_exceptional2, st.exceptional2);
    sum_exc1 += st.exceptional1;
    sum_exc2 += st.exceptional2;
    if (rep.pairs <= kMaxRows) {
      st.x1 = e1;
      st.x2 = e2;
      rep.rows.push_back(std::move(st));
    }
  };

  if (cfg.trials == 0) {
    const Int space = binom(cfg.n, cfg.s1) * binom(cfg.n, cfg.s2);
    if (space > Int(static_cast<long>(cfg.enum_budget)))
      throw std::invalid_argument(
          "pair space too large for an exhaustive structure pass; set trials");
    SumsetSizer sizer(cfg.group, cfg.n);
    each_combination(cfg.n, cfg.s1, [&](const std::vector<long long>& x1) {
      each_combination(cfg.n, cfg.s2, [&](const std::vector<long long>& x2) {
        const long long sz = sizer.size(x1, x2);
        if (sz <= cfg.m) consume(to_elems(x1), to_elems(x2), sz);
      });
    });
  } else {
    rep.source_sampled = true;
    SampleResult s = sample_pairs(cfg);
    rep.sample_stats = s.stats;
    for (const SampledPair& p : s.pairs) consume(p.x1, p.x2, p.sumset_size);
  }

  if (rep.pairs > 0) {
    rep.mean_exceptional1 = static_cast<double>(sum_exc1) / rep.pairs;
    rep.mean_exceptional2 = static_cast<double>(sum_exc2) / rep.pairs;
  }
  return rep;
}

CountReport count_report(const RunConfig& cfg) {
  validate_config(cfg, false);
  const EnumerateResult en = enumerate_pairs(cfg);

  CountReport rep;
  rep.n = cfg.n;
  rep.s1 = cfg.s1;
  rep.s2 = cfg.s2;
  rep.m = cfg.m;
  rep.exact_count = std::to_string(en.admissible);

  const long long s = cfg.s1 + cfg.s2;
  const double ln_s = std::log(static_cast<double>(s));
  rep.lambda = cfg.m > s
                   ? std::min(static_cast<double>(cfg.m) / static_cast<double>(cfg.m - s), ln_s)
                   : ln_s;
  const double correction = 256.0 * std::pow(static_cast<double>(cfg.m), 7.0 / 6.0) *
                            std::pow(static_cast<double>(s), -1.0 / 3.0) *
                            std::pow(rep.lambda, -1.0 / 3.0) *
                            std::sqrt(std::log(static_cast<double>(cfg.n)));
  rep.beta_used = beta(cfg.group, static_cast<double>(cfg.m) + correction);

  const long long top1 = cfg.s1 * (cfg.m + rep.beta_used) / s;
  const long long top2 = cfg.s2 * (cfg.m + rep.beta_used) / s;
  const Int bench = binom(top1, cfg.s1) * binom(top2, cfg.s2);
  rep.benchmark = bench.get_str();
  rep.log_margin = 1024.0 * std::pow(static_cast<double>(cfg.m), 1.0 / 6.0) *
                   std::pow(static_cast<double>(s), 2.0 / 3.0) *
                   std::pow(rep.lambda, 2.0 / 3.0) *
                   std::sqrt(std::log(static_cast<double>(cfg.n)));

  if (en.admissible == 0) {
    rep.bound_ok = true;
  } else if (bench == 0) {
    rep.bound_ok = false;
  } else {
    rep.log_count = std::log(static_cast<double>(en.admissible));
    rep.log_benchmark = ln_of_int(bench);
    rep.bound_ok = rep.log_count <= rep.log_margin + rep.log_benchmark;
  }
  return rep;
}

std::vector<SweepCell> parse_grid(std::istream& in) {
  std::vector<SweepCell> grid;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    SweepCell cell;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("grid tokens must look like key=value, got '" + tok + "'");
      cell.kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (!cell.kv.empty()) grid.push_back(std::move(cell));
  }
  return grid;
}

namespace {

std::string cell_get(const SweepCell& c, const std::string& key, const std::string& def,
                     bool required = false) {
  const auto it = c.kv.find(key);
  if (it != c.kv.end()) return it->second;
  if (required) throw std::invalid_argument("grid cell is missing key '" + key + "'");
  return def;
}

long long cell_ll(const SweepCell& c, const std::string& key, long long def,
                  bool required = false) {
  const std::string s = cell_get(c, key, std::to_string(def), required);
  return std::stoll(s);
}

void sweep_pollard(const SweepCell& cell, CellSummary& sum) {
  const GroupCtx g = parse_group(cell_get(cell, "group", "z"));
  const long long universe = cell_ll(cell, "universe", 0, true);
  const long long max_size = cell_ll(cell, "max_size", universe);
  if (universe < 1 || universe > 20)
    throw std::invalid_argument("pollard sweep supports universe sizes 1..20");

  // All nonempty subsets up to max_size, as reusable ElemSets.
  std::vector<ElemSet> sets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << universe); ++mask) {
    if (__builtin_popcountll(mask) > max_size) continue;
    std::vector<Elem> v;
    for (long long i = 0; i < universe; ++i)
      if (mask >> i & 1) v.push_back(i);
    sets.emplace_back(g, std::move(v));
  }
  for (const ElemSet& u : sets) {
    for (const ElemSet& v : sets) {
      if (v.size() > u.size()) continue;
      for (long long t = 1; t <= static_cast<long long>(v.size()); ++t) {
        const PollardVerdict verdict = pollard_check(u, v, t);
        sum.checks++;
        sum.hypothesis_met++;
        if (!verdict.holds) sum.violations++;
      }
    }
  }
}

void sweep_supersat(const SweepCell& cell, CellSummary& sum) {
  const GroupCtx g = parse_group(cell_get(cell, "group", "z"));
  const long long n = cell_ll(cell, "n", 12);
  const double eps = rat_to_double(parse_rat(cell_get(cell, "eps", "1/8")));
  const long long trials = cell_ll(cell, "trials", 0, true);
  Rng rng(static_cast<std::uint64_t>(cell_ll(cell, "seed", 1)));
  if (g.is_cyclic() && n > g.modulus)
    throw std::invalid_argument("universe cannot exceed the cyclic group");

  for (long long i = 0; i < trials; ++i) {
    const auto pick_set = [&](long long size) {
      return ElemSet(g, to_elems(rng.pick_k_of_n(n, size)));
    };
    const ElemSet a1 = pick_set(rng.range(1, n));
    const ElemSet a2 = pick_set(rng.range(1, n));
    const ElemSet full = sumset(a1, a2);
    // Half the time aim near the hypothesis boundary so it actually fires.
    long long keep;
    const long long sz = static_cast<long long>(full.size());
    if (rng.coin()) {
      const double cap = (static_cast<double>(a1.size() + a2.size())) / (1 + 2 * eps);
      keep = std::max(0LL, std::min(sz, static_cast<long long>(cap) - 2));
    } else {
      keep = rng.range(0, sz);
    }
    std::vector<long long> chosen = rng.pick_k_of_n(sz, keep);
    std::vector<Elem> kept;
    for (long long idx : chosen) kept.push_back(full.elems[static_cast<std::size_t>(idx)]);
    const SupersatVerdict verdict = supersat_check(a1, a2, ElemSet(g, std::move(kept)), eps);
    sum.checks++;
    if (verdict.hypothesis_met) sum.hypothesis_met++;
    if (!verdict.holds) sum.violations++;
  }
}

void sweep_generated(const std::string& oracle, const SweepCell& cell, CellSummary& sum) {
  const long long trials = cell_ll(cell, "trials", 0, true);
  Rng rng(static_cast<std::uint64_t>(cell_ll(cell, "seed", 1)));
  for (long long i = 0; i < trials; ++i) {
    sum.checks++;
    if (oracle == "kneser") {
      const KneserInstance inst = gen_kneser_instance(rng);
      const KneserVerdict v = robust_kneser_check(inst.g, inst.K, inst.s);
      if (v.hypothesis_met) sum.hypothesis_met++;
      if (!v.holds) sum.violations++;
    } else if (oracle == "almost1") {
      const Almost1Instance inst = gen_almost1_instance(rng);
      const Almost1Verdict v = almost1_check(inst.u, inst.v, inst.g, inst.K, inst.s);
      if (v.hypothesis_met) sum.hypothesis_met++;
      if (!v.holds) sum.violations++;
    } else if (oracle == "freiman") {
      const FreimanInstance inst = gen_freiman_instance(rng);
      const StabilityVerdict v = freiman_robust_check(inst.u, inst.v, inst.g, inst.eps);
      if (v.hypothesis_met) {
        sum.hypothesis_met++;
        if (v.conclusion_witnessed) sum.witnessed++;
      }
      if (!v.holds) sum.violations++;
    } else {
      const RelStabInstance inst = gen_relstab_instance(rng);
      const RelStabilityVerdict v =
          relative_stability_check(inst.a1, inst.a2, inst.b, inst.s1, inst.s2, inst.eps);
      if (v.hypothesis_met) {
        sum.hypothesis_met++;
        if (v.conclusion_witnessed) sum.witnessed++;
      }
      if (!v.holds) sum.violations++;
    }
  }
}

void sweep_binom(const SweepCell& cell, CellSummary& sum) {
  const long long m = cell_ll(cell, "m", 0, true);
  const long long s = cell_ll(cell, "s", 0, true);
  const long long t = cell_ll(cell, "t", 0, true);
  const Rat alpha = parse_rat(cell_get(cell, "alpha", "", true));
  Rat eps;
  const std::string window = cell_get(cell, "window", "");
  if (!window.empty()) {
    const long long mn = std::min(s, t);
    const Rat lo = Rat(1024) * Rat(static_cast<long>(mn * mn)) /
                   (Rat(static_cast<long>((s + t) * (s + t))) * Rat(static_cast<long>(m)) *
                    Rat(static_cast<long>(m)));
    const Rat hi = alpha * alpha * Rat(static_cast<long>(mn * mn)) /
                   (Rat(1024) * Rat(static_cast<long>((s + t) * (s + t))));
    if (window == "lo")
      eps = lo;
    else if (window == "hi")
      eps = hi;
    else if (window == "mid")
      eps = (lo + hi) / 2;
    else
      throw std::invalid_argument("window must be lo, mid, or hi");
  } else {
    eps = parse_rat(cell_get(cell, "eps", "", true));
  }
  const BinomVerdict v = binom_lemma_check(m, s, t, alpha, eps);
  sum.checks++;
  sum.hypothesis_met++;
  if (!v.holds) sum.violations++;
}

}  // namespace

SweepOutcome run_sweep(const std::string& oracle, const std::vector<SweepCell>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty verification grid");
  static const std::vector<std::string> known = {"pollard", "supersat", "kneser",
                                                 "almost1", "freiman", "relstab", "binom"};
  if (std::find(known.begin(), known.end(), oracle) == known.end())
    throw std::invalid_argument("unknown oracle '" + oracle + "'");

  SweepOutcome out;
  out.oracle = oracle;
  for (const SweepCell& cell : grid) {
    CellSummary sum;
    sum.params = cell.kv;
    if (oracle == "pollard")
      sweep_pollard(cell, sum);
    else if (oracle == "supersat")
      sweep_supersat(cell, sum);
    else if (oracle == "binom")
      sweep_binom(cell, sum);
    else
      sweep_generated(oracle, cell, sum);
    out.checks += sum.checks;
    out.hypothesis_met += sum.hypothesis_met;
    out.witnessed += sum.witnessed;
    out.violations += sum.violations;
    out.cells.push_back(std::move(sum));
  }
  return out;
}

}  // namespace sumstruct
