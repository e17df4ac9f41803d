// Command-line front end: verification sweeps over the inequality oracles and
// the pair-statistics reports (enumerate / sample / structure / count), plus
// container-family construction with full re-verification. Exit codes:
// 0 = all assertions passed, 2 = a checked bound was violated, 1 = usage or
// runtime error. Output is deterministic byte for byte given config + seed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "sumstruct/experiments.hpp"
#include "sumstruct/family.hpp"
#include "sumstruct/json_io.hpp"

namespace {

using sumstruct::json;

std::string join_elems(const std::vector<sumstruct::Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '|';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_params(const std::map<std::string, std::string>& kv) {
  std::string s;
  for (const auto& [k, val] : kv) {
    if (!s.empty()) s += ';';
    s += k + "=" + val;
  }
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
  f << text;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string csv_enumerate(const sumstruct::EnumerateResult& r) {
  std::string s = "sumset_size,count\n";
  for (std::size_t i = 0; i < r.sumset_size_hist.size(); ++i)
    s += std::to_string(i) + "," + std::to_string(r.sumset_size_hist[i]) + "\n";
  return s;
}

std::string csv_sample(const sumstruct::SampleResult& r) {
  std::string s = "index,sumset_size,x1,x2\n";
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    const auto& p = r.pairs[i];
    s += std::to_string(i) + "," + std::to_string(p.sumset_size) + "," +
         join_elems(p.x1) + "," + join_elems(p.x2) + "\n";
  }
  return s;
}

std::string csv_structure(const sumstruct::StructureReport& r) {
  std::string s =
      "sumset_size,ap_diff,covered1,covered2,exceptional1,exceptional2,x1,x2\n";
  for (const auto& row : r.rows) {
    s += std::to_string(row.sumset_size) + "," + std::to_string(row.ap_diff) + "," +
         std::to_string(row.covered1) + "," + std::to_string(row.covered2) + "," +
         std::to_string(row.exceptional1) + "," + std::to_string(row.exceptional2) +
         "," + join_elems(row.x1) + "," + join_elems(row.x2) + "\n";
  }
  return s;
}

std::string csv_count(const sumstruct::CountReport& r) {
  std::ostringstream s;
  s << "n,s1,s2,m,exact_count,benchmark,lambda,beta_used,log_margin,bound_ok\n"
    << r.n << "," << r.s1 << "," << r.s2 << "," << r.m << "," << r.exact_count << ","
    << r.benchmark << "," << r.lambda << "," << r.beta_used << "," << r.log_margin
    << "," << (r.bound_ok ? 1 : 0) << "\n";
  return s.str();
}

std::string csv_sweep(const sumstruct::SweepOutcome& r) {
  std::string s = "cell,checks,hypothesis_met,witnessed,violations,params\n";
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    const auto& c = r.cells[i];
    s += std::to_string(i) + "," + std::to_string(c.checks) + "," +
         std::to_string(c.hypothesis_met) + "," + std::to_string(c.witnessed) + "," +
         std::to_string(c.violations) + "," + join_params(c.params) + "\n";
  }
  return s;
}

std::string csv_family(const sumstruct::FamilyResult& r) {
  std::string s = "a1,a2,b,leaf_kind\n";
  for (const auto& e : r.family) {
    s += join_elems(e.a1.elems) + "," + join_elems(e.a2.elems) + "," +
         join_elems(e.b.elems) + "," + sumstruct::leaf_kind_name(e.leaf_kind) + "\n";
  }
  return s;
}

std::vector<sumstruct::Elem> ground_set(long long n) {
  std::vector<sumstruct::Elem> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

struct CommonOpts {
  long long n = 0, s1 = 0, s2 = 0, m = 0;
  double eps = 0.0;
  long long trials = 0;
  std::uint64_t seed = 1;
  std::string group = "z";
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool sizes_required) {
  auto* n = cmd->add_option("--n", o.n, "ground sets are {0,...,n-1}");
  auto* s1 = cmd->add_option("--s1", o.s1, "size of X_1");
  auto* s2 = cmd->add_option("--s2", o.s2, "size of X_2");
  auto* m = cmd->add_option("--m", o.m, "sumset size threshold");
  if (sizes_required) {
    n->required();
    s1->required();
    s2->required();
    m->required();
  }
  cmd->add_option("--group", o.group, "ambient group: z or zn:<n>");
  cmd->add_option("--out", o.out, "write output here instead of stdout");
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->set_config("--config", "", "plain key=value lines mirroring the flags");
}

sumstruct::RunConfig to_config(const CommonOpts& o) {
  sumstruct::RunConfig cfg;
  cfg.group = sumstruct::parse_group(o.group);
  cfg.n = o.n;
  cfg.s1 = o.s1;
  cfg.s2 = o.s2;
  cfg.m = o.m;
  cfg.eps = o.eps;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for sumset inequalities and containers"};
  app.require_subcommand(1);

  std::string verify_oracle, verify_grid, verify_alpha, verify_eps;
  CommonOpts vopt, eopt, sopt, topt, copt, fopt;

  auto* verify = app.add_subcommand("verify", "run an oracle over a parameter grid");
  verify->add_option("oracle", verify_oracle,
                     "pollard|supersat|kneser|almost1|freiman|relstab|binom")
      ->required();
  verify->add_option("--grid", verify_grid, "grid file: key=value tokens per line")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--alpha", verify_alpha, "default alpha for cells lacking one");
  verify->add_option("--eps", verify_eps, "default eps for cells lacking one");
  verify->add_option("--out", vopt.out, "write output here instead of stdout");
  verify->add_option("--format", vopt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->set_config("--config", "", "plain key=value lines mirroring the flags");

  auto* enumerate = app.add_subcommand("enumerate", "exact admissible-pair census");
  add_common(enumerate, eopt, true);

  auto* sample = app.add_subcommand("sample", "seeded admissible-pair sampler");
  add_common(sample, sopt, true);
  sample->add_option("--trials", sopt.trials, "number of pairs to emit")->required();
  sample->add_option("--seed", sopt.seed, "RNG seed");

  auto* structure = app.add_subcommand("structure", "progression-fit statistics");
  add_common(structure, topt, true);
  structure->add_option("--trials", topt.trials, "0 = exhaustive, else sampled");
  structure->add_option("--seed", topt.seed, "RNG seed");

  auto* count = app.add_subcommand("count", "exact count vs binomial benchmark");
  add_common(count, copt, true);

  auto* family = app.add_subcommand("family", "build and re-verify a container family");
  add_common(family, fopt, true);
  family->add_option("--eps", fopt.eps, "density parameter in (0,1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    int exit_code = 0;
    if (*verify) {
      std::ifstream gf(verify_grid);
      if (!gf) throw std::runtime_error("cannot open grid file '" + verify_grid + "'");
      auto grid = sumstruct::parse_grid(gf);
      for (auto& cell : grid) {
        if (!verify_alpha.empty()) cell.kv.emplace("alpha", verify_alpha);
        if (!verify_eps.empty()) cell.kv.emplace("eps", verify_eps);
      }
      const auto outcome = sumstruct::run_sweep(verify_oracle, grid);
      emit(vopt.format == "csv" ? csv_sweep(outcome) : dump_json(json(outcome)),
           vopt.out);
      if (outcome.violations > 0) exit_code = 2;
    } else if (*enumerate) {
      const auto r = sumstruct::enumerate_pairs(to_config(eopt));
      emit(eopt.format == "csv" ? csv_enumerate(r) : dump_json(json(r)), eopt.out);
    } else if (*sample) {
      const auto r = sumstruct::sample_pairs(to_config(sopt));
      emit(sopt.format == "csv" ? csv_sample(r) : dump_json(json(r)), sopt.out);
    } else if (*structure) {
      const auto r = sumstruct::structure_report(to_config(topt));
      emit(topt.format == "csv" ? csv_structure(r) : dump_json(json(r)), topt.out);
    } else if (*count) {
      const auto r = sumstruct::count_report(to_config(copt));
      emit(copt.format == "csv" ? csv_count(r) : dump_json(json(r)), copt.out);
      if (!r.bound_ok) exit_code = 2;
    } else if (*family) {
      const auto g = sumstruct::parse_group(fopt.group);
      const sumstruct::ElemSet f1(g, ground_set(fopt.n)), f2(g, ground_set(fopt.n));
      const auto built =
          sumstruct::build_family(g, f1, f2, fopt.s1, fopt.s2, fopt.m, fopt.eps);
      const auto report = sumstruct::verify_family(built.family, g, f1, f2, fopt.s1,
                                                   fopt.s2, fopt.m, fopt.eps);
      json j = built;
      j["report"] = report;
      emit(fopt.format == "csv" ? csv_family(built) : dump_json(j), fopt.out);
      if (!report.ok() || !built.stats.height_ok || !built.stats.children_bound_ok ||
          !built.stats.family_size_ok)
        exit_code = 2;
    }
    return exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
