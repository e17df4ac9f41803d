// Experiment drivers: config validation, exhaustive pair enumeration against
// an independent std::set census, seeded sampling (rejection uniformity within
// 4 sigma, swap-chain fallback), progression-structure reports, counting
// against the binomial benchmark, grid parsing, verification sweeps, and the
// determinism of the JSON views.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "sumstruct/experiments.hpp"
#include "sumstruct/group.hpp"
#include "sumstruct/json_io.hpp"
#include "sumstruct/oracles.hpp"
#include "test_support.hpp"

using namespace sumstruct;

namespace {

RunConfig base_config(const std::string& group, long long n, long long s1, long long s2,
                      long long m) {
  RunConfig cfg;
  cfg.group = parse_group(group);
  cfg.n = n;
  cfg.s1 = s1;
  cfg.s2 = s2;
  cfg.m = m;
  return cfg;
}

long long brute_sumset_size(const GroupCtx& g, const std::vector<Elem>& x1,
                            const std::vector<Elem>& x2) {
  std::set<long long> sums;
  for (Elem a : x1)
    for (Elem b : x2) sums.insert(g.canon(a + b));
  return static_cast<long long>(sums.size());
}

std::vector<std::vector<long long>> k_subsets(long long n, long long k) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  const std::function<void(long long)> rec = [&](long long from) {
    if (static_cast<long long>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (long long v = from; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void check_sorted_distinct_in_range(const std::vector<Elem>& x, long long size,
                                    long long n) {
  REQUIRE(static_cast<long long>(x.size()) == size);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i] >= 0);
    CHECK(x[i] < n);
    if (i > 0) CHECK(x[i - 1] < x[i]);
  }
}

long long hist_prefix(const std::vector<long long>& hist, long long m) {
  long long total = 0;
  const long long top = std::min<long long>(m, static_cast<long long>(hist.size()) - 1);
  for (long long k = 0; k <= top; ++k) total += hist[static_cast<std::size_t>(k)];
  return total;
}

}  // namespace

TEST_SUITE("experiments") {
  TEST_CASE("config validation rejects inconsistent parameters") {
    CHECK_NOTHROW(validate_config(base_config("z", 6, 2, 3, 4), false));

    CHECK_THROWS_AS(validate_config(base_config("z", 0, 1, 1, 1), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(base_config("z", 6, 0, 3, 4), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(base_config("z", 6, 3, 2, 4), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(base_config("z", 6, 2, 7, 4), false),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_config(base_config("z", 6, 2, 3, 0), false),
                    std::invalid_argument);
    // The ground set must fit inside a cyclic ambient group.
    CHECK_THROWS_AS(validate_config(base_config("zn:5", 6, 2, 3, 4), false),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_config(base_config("zn:5", 5, 2, 3, 5), false));

    // Structure mode: m >= s1 + s2 and an integer group.
    CHECK_THROWS_AS(validate_config(base_config("z", 6, 2, 3, 4), true),
                    std::invalid_argument);
    CHECK_NOTHROW(validate_config(base_config("z", 6, 2, 3, 5), true));
    CHECK_THROWS_AS(validate_config(base_config("zn:12", 6, 2, 3, 6), true),
                    std::invalid_argument);
  }

  TEST_CASE("enumerate matches the set-based census over the integers") {
    RunConfig cfg = base_config("z", 6, 2, 3, 4);
    const EnumerateResult res = enumerate_pairs(cfg);

    CHECK(res.n == 6);
    CHECK(res.s1 == 2);
    CHECK(res.s2 == 3);
    CHECK(res.m == 4);
    CHECK(res.pair_space == "300");  // C(6,2) * C(6,3) = 15 * 20
    CHECK(res.sumset_size_hist.size() == 12);  // spans sizes 0..11

    const std::vector<long long> ref = testref::naive_pair_hist(cfg.group, 6, 2, 3);
    CHECK(res.sumset_size_hist == ref);
    CHECK(res.admissible == hist_prefix(ref, 4));

    // The histogram is independent of m; admissible is its prefix sum.
    cfg.m = 11;
    const EnumerateResult all = enumerate_pairs(cfg);
    CHECK(all.sumset_size_hist == ref);
    CHECK(all.admissible == 300);
  }

  TEST_CASE("enumerate handles cyclic wraparound") {
    RunConfig cfg = base_config("zn:7", 7, 2, 2, 3);
    const EnumerateResult res = enumerate_pairs(cfg);

    const std::vector<long long> ref = testref::naive_pair_hist(cfg.group, 7, 2, 2);
    CHECK(res.sumset_size_hist == ref);
    CHECK(res.sumset_size_hist.size() == 8);  // cyclic span is the modulus
    CHECK(res.pair_space == "441");

    // |X1 + X2| = 3 exactly when the two-element sets share a difference
    // class mod 7: three classes, seven anchors each, per side.
    CHECK(res.sumset_size_hist[3] == 147);
    CHECK(res.sumset_size_hist[4] == 294);
    CHECK(res.admissible == 147);
  }

  TEST_CASE("enumerate covers a partial window of a cyclic group") {
    RunConfig cfg = base_config("zn:12", 5, 2, 2, 4);
    const EnumerateResult res = enumerate_pairs(cfg);
    const std::vector<long long> ref = testref::naive_pair_hist(cfg.group, 5, 2, 2);
    CHECK(res.sumset_size_hist == ref);
    CHECK(res.sumset_size_hist.size() == 13);
    CHECK(res.admissible == hist_prefix(ref, 4));
  }

  TEST_CASE("enumerate one-element boundary") {
    const EnumerateResult res = enumerate_pairs(base_config("z", 1, 1, 1, 1));
    CHECK(res.pair_space == "1");
    CHECK(res.admissible == 1);
    CHECK(res.sumset_size_hist == std::vector<long long>{0, 1});
  }

  TEST_CASE("enumerate enforces its pair-space budget") {
    RunConfig cfg = base_config("z", 10, 2, 2, 3);
    cfg.enum_budget = 10;
    CHECK_THROWS_WITH_AS(
        enumerate_pairs(cfg),
        "pair space 2025 exceeds the enumeration budget; use sample mode instead",
        std::invalid_argument);
    cfg.enum_budget = 2025;  // exactly at the budget is allowed
    CHECK_NOTHROW(enumerate_pairs(cfg));
  }

  TEST_CASE("rejection sampling is uniform over admissible pairs") {
    RunConfig cfg = base_config("z", 10, 2, 2, 3);
    cfg.trials = 100000;
    cfg.seed = 20260814;
    const SampleResult res = sample_pairs(cfg);

    CHECK_FALSE(res.stats.approximate);
    CHECK(res.stats.requested == cfg.trials);
    CHECK(res.stats.produced == cfg.trials);
    CHECK(res.stats.seed == cfg.seed);
    CHECK(res.stats.pilot_acceptance > 0.05);
    REQUIRE(res.pairs.size() == static_cast<std::size_t>(cfg.trials));

    // Ground truth: pairs of two-element subsets of {0..9} whose sumset has
    // at most three elements, i.e. equal differences. There are
    // sum_{d=1..9} (10-d)^2 = 285 such pairs.
    std::set<std::vector<long long>> ground;
    const auto subsets = k_subsets(10, 2);
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        if (brute_sumset_size(cfg.group, {a.begin(), a.end()}, {b.begin(), b.end()}) <= 3)
          ground.insert({a[0], a[1], b[0], b[1]});
      }
    }
    REQUIRE(ground.size() == 285);

    std::map<std::vector<long long>, long long> counts;
    for (const SampledPair& p : res.pairs) {
      check_sorted_distinct_in_range(p.x1, 2, 10);
      check_sorted_distinct_in_range(p.x2, 2, 10);
      CHECK(p.sumset_size == brute_sumset_size(cfg.group, p.x1, p.x2));
      CHECK(p.sumset_size <= 3);
      const std::vector<long long> key = {p.x1[0], p.x1[1], p.x2[0], p.x2[1]};
      REQUIRE(ground.count(key) == 1);
      counts[key]++;
    }

    // Every admissible state is hit, and each count sits within four standard
    // deviations of the uniform expectation.
    CHECK(counts.size() == 285);
    const double p_state = 1.0 / 285.0;
    const double mean = cfg.trials * p_state;
    const double sigma = std::sqrt(cfg.trials * p_state * (1.0 - p_state));
    double worst = 0.0;
    for (const auto& g : ground) {
      const auto it = counts.find(g);
      const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
      worst = std::max(worst, std::abs(c - mean));
    }
    CHECK(worst <= 4.0 * sigma);
  }

  TEST_CASE("sampling is reproducible from the seed") {
    RunConfig cfg = base_config("z", 10, 2, 3, 5);
    cfg.trials = 200;
    cfg.seed = 99;
    const std::string a = json(sample_pairs(cfg)).dump();
    const std::string b = json(sample_pairs(cfg)).dump();
    CHECK(a == b);

    cfg.seed = 100;
    const std::string c = json(sample_pairs(cfg)).dump();
    CHECK(a != c);
  }

  TEST_CASE("swap-chain fallback engages when acceptance is poor") {
    // Three-element sides over {0..11} with m = 5 admit only pairs of
    // progressions sharing a difference: 220 of 48400 pairs, an acceptance
    // rate around 0.0045, well under the 0.02 floor.
    RunConfig cfg = base_config("z", 12, 3, 3, 5);
    cfg.trials = 500;
    cfg.seed = 7;
    const SampleResult res = sample_pairs(cfg);

    CHECK(res.stats.approximate);
    CHECK(res.stats.pilot_acceptance < 0.02);
    CHECK(res.stats.burn_in == 300);  // default 50 * (s1 + s2)
    CHECK(res.stats.stride == 6);
    CHECK(res.stats.produced == 500);
    REQUIRE(res.pairs.size() == 500);

    std::set<std::vector<Elem>> seen_x1;
    for (const SampledPair& p : res.pairs) {
      check_sorted_distinct_in_range(p.x1, 3, 12);
      check_sorted_distinct_in_range(p.x2, 3, 12);
      CHECK(p.sumset_size == brute_sumset_size(cfg.group, p.x1, p.x2));
      CHECK(p.sumset_size <= 5);
      // Size exactly s1 + s2 - 1 forces aligned progressions.
      CHECK(p.x1[1] - p.x1[0] == p.x1[2] - p.x1[1]);
      CHECK(p.x2[1] - p.x2[0] == p.x2[2] - p.x2[1]);
      CHECK(p.x1[1] - p.x1[0] == p.x2[1] - p.x2[0]);
      seen_x1.insert(p.x1);
    }
    CHECK(seen_x1.size() > 1);  // the chain actually moves

    RunConfig custom = cfg;
    custom.burn_in = 17;
    CHECK(sample_pairs(custom).stats.burn_in == 17);
  }

  TEST_CASE("sampling rejects impossible or missing parameters") {
    RunConfig cfg = base_config("z", 12, 3, 3, 4);  // min sumset size is 5
    cfg.trials = 10;
    CHECK_THROWS_WITH_AS(sample_pairs(cfg), "no admissible pair found; m looks too small",
                         std::invalid_argument);

    RunConfig no_trials = base_config("z", 10, 2, 2, 4);
    CHECK_THROWS_WITH_AS(sample_pairs(no_trials), "trials must be positive",
                         std::invalid_argument);
  }

  TEST_CASE("exhaustive structure report fits every pair") {
    RunConfig cfg = base_config("z", 7, 2, 2, 4);
    const StructureReport rep = structure_report(cfg);

    const double slack_ref = 64.0 * std::pow(4.0, 13.0 / 12.0) *
                             std::pow(4.0, -1.0 / 6.0) * std::pow(std::log(7.0), 0.25);
    CHECK(rep.slack == doctest::Approx(slack_ref).epsilon(1e-12));
    CHECK(rep.cap1 == rep.cap2);
    CHECK(rep.cap1 == static_cast<long long>(std::floor(2.0 + rep.slack)));
    CHECK(rep.cap1 >= 7);  // caps exceed the whole window at this scale

    CHECK_FALSE(rep.source_sampled);
    CHECK(rep.pairs == 441);  // every pair admissible: sizes are 3 or 4
    REQUIRE(rep.rows.size() == 441);
    CHECK(rep.fully_covered == 441);
    CHECK(rep.max_exceptional1 == 0);
    CHECK(rep.max_exceptional2 == 0);
    CHECK(rep.mean_exceptional1 == 0.0);
    CHECK(rep.mean_exceptional2 == 0.0);

    for (const StructurePairStat& row : rep.rows) {
      CHECK(row.covered1 == 2);
      CHECK(row.covered2 == 2);
      CHECK(row.exceptional1 == 0);
      CHECK(row.exceptional2 == 0);
      CHECK(row.ap_diff >= 1);
      CHECK(row.sumset_size <= 4);
    }
  }

  TEST_CASE("sampled structure report carries its sampling stats") {
    RunConfig cfg = base_config("z", 10, 2, 3, 5);
    cfg.trials = 400;
    cfg.seed = 3;
    const StructureReport rep = structure_report(cfg);

    CHECK(rep.source_sampled);
    CHECK(rep.sample_stats.requested == 400);
    CHECK(rep.sample_stats.produced == 400);
    CHECK(rep.pairs == 400);
    REQUIRE(rep.rows.size() == 400);
    for (const StructurePairStat& row : rep.rows) {
      CHECK(row.sumset_size <= 5);
      CHECK(row.exceptional1 == 2 - row.covered1);
      CHECK(row.exceptional2 == 3 - row.covered2);
      CHECK(row.exceptional1 >= 0);
      CHECK(row.exceptional2 >= 0);
    }
    // Caps again dwarf the window, so a shared unit-difference progression
    // pair covers everything.
    CHECK(rep.fully_covered == 400);

    CHECK_THROWS_AS(structure_report(base_config("z", 10, 2, 3, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(structure_report(base_config("zn:12", 10, 2, 3, 6)),
                    std::invalid_argument);
  }

  TEST_CASE("count report on a window with no admissible pairs") {
    // Two-element sides over the integers have sumsets of size at least 3.
    const CountReport rep = count_report(base_config("z", 6, 2, 2, 1));
    CHECK(rep.exact_count == "0");
    CHECK(rep.benchmark == "0");  // binomial top below the set size
    CHECK(rep.beta_used == 1);
    CHECK(rep.lambda == doctest::Approx(std::log(4.0)));  // m <= s1 + s2 branch
    CHECK(rep.log_count == 0.0);
    CHECK(rep.log_benchmark == 0.0);
    CHECK(rep.bound_ok);
  }

  TEST_CASE("count report with the ratio branch of lambda") {
    RunConfig cfg = base_config("z", 8, 2, 3, 14);
    const CountReport rep = count_report(cfg);
    // m/(m - s1 - s2) = 14/9 < ln 5.
    CHECK(rep.lambda == doctest::Approx(14.0 / 9.0));
    CHECK(rep.beta_used == 1);
    CHECK(rep.exact_count == "1568");  // C(8,2) * C(8,3), every pair admissible
    // Benchmark tops: 2*15/5 = 6 and 3*15/5 = 9, so C(6,2) * C(9,3).
    CHECK(rep.benchmark == "1260");
    CHECK(rep.log_count == doctest::Approx(std::log(1568.0)));
    CHECK(rep.log_benchmark == doctest::Approx(std::log(1260.0)));
    CHECK(rep.log_margin > 0.0);
    CHECK(rep.bound_ok);
  }

  TEST_CASE("count report uses the subgroup statistic of a cyclic group") {
    RunConfig cfg = base_config("zn:12", 12, 2, 2, 4);
    const CountReport rep = count_report(cfg);
    // The beta correction exceeds the modulus, so the full group enters.
    CHECK(rep.beta_used == 12);
    // Tops: 2 * (4 + 12) / 4 = 8, so C(8,2)^2.
    CHECK(rep.benchmark == "784");
    const EnumerateResult en = enumerate_pairs(cfg);
    CHECK(rep.exact_count == std::to_string(en.admissible));
    CHECK(en.admissible == 4356);  // 2x2 sumsets never exceed four elements
    CHECK(en.sumset_size_hist[2] == 36);   // both sides use the difference 6
    CHECK(en.sumset_size_hist[3] == 720);  // equal differences 1..5
    CHECK(rep.bound_ok);
  }

  TEST_CASE("grid files parse into key=value cells") {
    std::istringstream in(
        "# sweep header comment\n"
        "\n"
        "   \t\n"
        "m=2048 s=64 t=64 alpha=1 window=lo\n"
        "trials=500 seed=9\n"
        "# trailing comment\n");
    const std::vector<SweepCell> grid = parse_grid(in);
    REQUIRE(grid.size() == 2);
    CHECK(grid[0].kv.size() == 5);
    CHECK(grid[0].kv.at("m") == "2048");
    CHECK(grid[0].kv.at("window") == "lo");
    CHECK(grid[1].kv.size() == 2);
    CHECK(grid[1].kv.at("trials") == "500");
    CHECK(grid[1].kv.at("seed") == "9");

    std::istringstream empty("# nothing here\n\n");
    CHECK(parse_grid(empty).empty());

    std::istringstream bad1("foo\n");
    CHECK_THROWS_WITH_AS(parse_grid(bad1),
                         "grid tokens must look like key=value, got 'foo'",
                         std::invalid_argument);
    std::istringstream bad2("=bar\n");
    CHECK_THROWS_AS(parse_grid(bad2), std::invalid_argument);
    std::istringstream bad3("a=b naked\n");
    CHECK_THROWS_AS(parse_grid(bad3), std::invalid_argument);
  }

  TEST_CASE("sweep rejects unknown oracles and empty grids") {
    std::vector<SweepCell> grid(1);
    grid[0].kv = {{"trials", "1"}, {"seed", "1"}};
    CHECK_THROWS_WITH_AS(run_sweep("nonsense", grid), "unknown oracle 'nonsense'",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(run_sweep("kneser", {}), "empty verification grid",
                         std::invalid_argument);
  }

  TEST_CASE("pollard sweep exhausts small subset pairs") {
    std::vector<SweepCell> grid(2);
    grid[0].kv = {{"group", "z"}, {"universe", "5"}};
    grid[1].kv = {{"group", "zn:5"}, {"universe", "5"}};
    const SweepOutcome out = run_sweep("pollard", grid);

    CHECK(out.oracle == "pollard");
    REQUIRE(out.cells.size() == 2);
    // 31 nonempty subsets of {0..4}; summing t = 1..|v| over ordered pairs
    // with |v| <= |u| gives 1280 checks per cell.
    CHECK(out.cells[0].checks == 1280);
    CHECK(out.cells[1].checks == 1280);
    CHECK(out.checks == 2560);
    CHECK(out.hypothesis_met == 2560);
    CHECK(out.violations == 0);
    CHECK(out.cells[0].params.at("universe") == "5");

    std::vector<SweepCell> big(1);
    big[0].kv = {{"universe", "25"}};
    CHECK_THROWS_AS(run_sweep("pollard", big), std::invalid_argument);
    std::vector<SweepCell> missing(1);
    missing[0].kv = {{"group", "z"}};
    CHECK_THROWS_WITH_AS(run_sweep("pollard", missing),
                         "grid cell is missing key 'universe'", std::invalid_argument);
  }

  TEST_CASE("supersaturation sweep stays violation-free") {
    std::vector<SweepCell> grid(1);
    grid[0].kv = {{"group", "zn:12"}, {"n", "12"}, {"eps", "1/8"},
                  {"trials", "300"},  {"seed", "11"}};
    const SweepOutcome out = run_sweep("supersat", grid);
    CHECK(out.checks == 300);
    CHECK(out.violations == 0);
    CHECK(out.hypothesis_met >= 1);
    CHECK(out.hypothesis_met <= 300);

    std::vector<SweepCell> missing(1);
    missing[0].kv = {{"group", "z"}};
    CHECK_THROWS_AS(run_sweep("supersat", missing), std::invalid_argument);
  }

  TEST_CASE("generator-driven sweeps stay violation-free") {
    std::vector<SweepCell> grid(1);

    grid[0].kv = {{"trials", "400"}, {"seed", "3"}};
    const SweepOutcome kn = run_sweep("kneser", grid);
    CHECK(kn.checks == 400);
    CHECK(kn.violations == 0);
    CHECK(kn.hypothesis_met >= 380);

    grid[0].kv = {{"trials", "250"}, {"seed", "4"}};
    const SweepOutcome al = run_sweep("almost1", grid);
    CHECK(al.checks == 250);
    CHECK(al.violations == 0);
    CHECK(al.hypothesis_met == 250);  // instances are regular by construction

    grid[0].kv = {{"trials", "150"}, {"seed", "6"}};
    const SweepOutcome fr = run_sweep("freiman", grid);
    CHECK(fr.checks == 150);
    CHECK(fr.violations == 0);
    CHECK(fr.hypothesis_met >= 135);
    // Zero violations force a witness wherever the hypothesis fired.
    CHECK(fr.witnessed == fr.hypothesis_met);

    grid[0].kv = {{"trials", "200"}, {"seed", "8"}};
    const SweepOutcome rs = run_sweep("relstab", grid);
    CHECK(rs.checks == 200);
    CHECK(rs.violations == 0);
    CHECK(rs.hypothesis_met >= 50);
  }

  TEST_CASE("binomial-product sweep resolves window endpoints") {
    std::vector<SweepCell> grid(4);
    grid[0].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"},
                  {"window", "lo"}};
    grid[1].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"},
                  {"window", "mid"}};
    grid[2].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"},
                  {"window", "hi"}};
    grid[3].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"},
                  {"eps", "1/16384"}};
    const SweepOutcome out = run_sweep("binom", grid);
    CHECK(out.checks == 4);
    CHECK(out.hypothesis_met == 4);
    CHECK(out.violations == 0);

    std::vector<SweepCell> bad(1);
    bad[0].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"},
                 {"window", "bogus"}};
    CHECK_THROWS_WITH_AS(run_sweep("binom", bad), "window must be lo, mid, or hi",
                         std::invalid_argument);
    bad[0].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"}};
    CHECK_THROWS_WITH_AS(run_sweep("binom", bad), "grid cell is missing key 'eps'",
                         std::invalid_argument);
    bad[0].kv = {{"m", "2048"}, {"s", "64"}, {"t", "64"}, {"window", "lo"}};
    CHECK_THROWS_WITH_AS(run_sweep("binom", bad), "grid cell is missing key 'alpha'",
                         std::invalid_argument);
    bad[0].kv = {{"m", "abc"}, {"s", "64"}, {"t", "64"}, {"alpha", "1"},
                 {"window", "lo"}};
    CHECK_THROWS_AS(run_sweep("binom", bad), std::invalid_argument);
  }

  TEST_CASE("JSON views are complete and byte-deterministic") {
    RunConfig cfg = base_config("zn:7", 7, 2, 2, 3);
    const json en = json(enumerate_pairs(cfg));
    for (const char* key :
         {"n", "s1", "s2", "m", "pair_space", "admissible", "sumset_size_hist"})
      CHECK(en.contains(key));
    CHECK(en["pair_space"] == "441");
    CHECK(en["admissible"] == 147);
    CHECK(en.dump(2) == json(enumerate_pairs(cfg)).dump(2));

    const json cr = json(count_report(base_config("z", 8, 2, 3, 14)));
    for (const char* key : {"exact_count", "benchmark", "lambda", "beta_used",
                            "log_margin", "bound_ok"})
      CHECK(cr.contains(key));
    CHECK(cr["bound_ok"] == true);

    // The structure view embeds sampling stats only for sampled sources.
    const json sx = json(structure_report(base_config("z", 7, 2, 2, 4)));
    CHECK_FALSE(sx.contains("sample_stats"));
    RunConfig sampled = base_config("z", 10, 2, 3, 5);
    sampled.trials = 50;
    const json ss = json(structure_report(sampled));
    REQUIRE(ss.contains("sample_stats"));
    CHECK(ss["sample_stats"]["produced"] == 50);

    RunConfig sp = base_config("z", 10, 2, 2, 3);
    sp.trials = 20;
    sp.seed = 5;
    const json sj = json(sample_pairs(sp));
    REQUIRE(sj.contains("pairs"));
    REQUIRE(sj["pairs"].size() == 20);
    for (const char* key : {"x1", "x2", "sumset_size"}) CHECK(sj["pairs"][0].contains(key));
    CHECK(sj["stats"]["seed"] == 5);

    std::vector<SweepCell> grid(1);
    grid[0].kv = {{"trials", "5"}, {"seed", "1"}};
    const json sw = json(run_sweep("kneser", grid));
    CHECK(sw["oracle"] == "kneser");
    REQUIRE(sw["cells"].size() == 1);
    CHECK(sw["cells"][0]["params"]["trials"] == "5");
    CHECK(sw["checks"] == 5);

    const GroupCtx z = parse_group("z");
    const json pv = json(pollard_check(make_interval(z, 0, 4), make_interval(z, 0, 2), 2));
    for (const char* key : {"t", "u_size", "v_size", "alpha", "lhs", "rhs", "holds"})
      CHECK(pv.contains(key));
    CHECK(pv["lhs"] == 12);
    CHECK(pv["rhs"] == 10);
    CHECK(pv["holds"] == true);
  }
}
