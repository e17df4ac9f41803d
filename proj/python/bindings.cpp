// Python bindings: thin wrappers over the C++ toolkit. Inputs are plain
// Python scalars/lists plus group specs ("z" or "zn:<n>"); structured results
// come back as dicts/lists mirroring the JSON output of the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sumstruct/containers.hpp"
#include "sumstruct/json_io.hpp"
#include "sumstruct/setops.hpp"

namespace py = pybind11;
using namespace sumstruct;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      throw std::runtime_error("unsupported JSON value");
  }
}

template <typename T>
py::object as_py(const T& v) {
  return json_to_py(json(v));
}

ElemSet make_set(const std::string& group, const std::vector<Elem>& v) {
  return ElemSet(parse_group(group), v);
}

RunConfig make_cfg(const std::string& group, long long n, long long s1, long long s2,
                   long long m, long long trials, std::uint64_t seed) {
  RunConfig cfg;
  cfg.group = parse_group(group);
  cfg.n = n;
  cfg.s1 = s1;
  cfg.s2 = s2;
  cfg.m = m;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Verification toolkit for sumset inequalities, hypergraph containers, "
      "and admissible-pair statistics.";

  mod.def(
      "beta",
      [](const std::string& group, double t) { return beta(parse_group(group), t); },
      py::arg("group"), py::arg("t"),
      "Largest finite subgroup size <= t (0 when t < 1).");

  mod.def(
      "subgroup_sizes",
      [](const std::string& group) { return subgroup_sizes(parse_group(group)); },
      py::arg("group"), "Ascending sizes of the finite subgroups.");

  mod.def(
      "sumset",
      [](const std::string& group, const std::vector<Elem>& a,
         const std::vector<Elem>& b) {
        return sumset(make_set(group, a), make_set(group, b)).elems;
      },
      py::arg("group"), py::arg("a"), py::arg("b"),
      "All pairwise sums, sorted and deduplicated.");

  mod.def(
      "alpha",
      [](const std::string& group, const std::vector<Elem>& u,
         const std::vector<Elem>& v) {
        return alpha(make_set(group, u), make_set(group, v));
      },
      py::arg("group"), py::arg("u"), py::arg("v"),
      "Subgroup statistic entering the minimum-representation bound.");

  mod.def(
      "pollard",
      [](const std::string& group, const std::vector<Elem>& u,
         const std::vector<Elem>& v, long long t) {
        return as_py(pollard_check(make_set(group, u), make_set(group, v), t));
      },
      py::arg("group"), py::arg("u"), py::arg("v"), py::arg("t"),
      "Minimum-representation lower bound; requires 1 <= t <= |v| <= |u|.");

  mod.def(
      "supersat",
      [](const std::string& group, const std::vector<Elem>& a1,
         const std::vector<Elem>& a2, const std::vector<Elem>& b, double eps) {
        return as_py(supersat_check(make_set(group, a1), make_set(group, a2),
                                    make_set(group, b), eps));
      },
      py::arg("group"), py::arg("a1"), py::arg("a2"), py::arg("b"), py::arg("eps"),
      "Counts pairs summing outside b against the eps^2 |a1||a2| threshold.");

  mod.def(
      "binom_lemma",
      [](long long m, long long s, long long t, const std::string& alpha_p,
         const std::string& eps) {
        return as_py(binom_lemma_check(m, s, t, parse_rat(alpha_p), parse_rat(eps)));
      },
      py::arg("m"), py::arg("s"), py::arg("t"), py::arg("alpha"), py::arg("eps"),
      "Exact binomial-product inequality check; rationals given as strings.");

  mod.def(
      "best_ap_cover",
      [](const std::vector<Elem>& x, long long max_len) {
        return as_py(best_ap_cover(ElemSet(make_group(GroupKind::Integers), x), max_len));
      },
      py::arg("x"), py::arg("max_len"),
      "Best arithmetic progression of bounded length covering x.");

  mod.def(
      "best_joint_ap_cover",
      [](const std::vector<Elem>& x1, const std::vector<Elem>& x2, long long cap1,
         long long cap2) {
        const GroupCtx z = make_group(GroupKind::Integers);
        return as_py(best_joint_ap_cover(ElemSet(z, x1), ElemSet(z, x2), cap1, cap2));
      },
      py::arg("x1"), py::arg("x2"), py::arg("cap1"), py::arg("cap2"),
      "Best pair of progressions sharing one difference covering x1 and x2.");

  mod.def(
      "enumerate_pairs",
      [](const std::string& group, long long n, long long s1, long long s2,
         long long m) {
        return as_py(enumerate_pairs(make_cfg(group, n, s1, s2, m, 0, 1)));
      },
      py::arg("group"), py::arg("n"), py::arg("s1"), py::arg("s2"), py::arg("m"),
      "Exact census of pairs with |X_1 + X_2| <= m.");

  mod.def(
      "sample_pairs",
      [](const std::string& group, long long n, long long s1, long long s2,
         long long m, long long trials, std::uint64_t seed) {
        return as_py(sample_pairs(make_cfg(group, n, s1, s2, m, trials, seed)));
      },
      py::arg("group"), py::arg("n"), py::arg("s1"), py::arg("s2"), py::arg("m"),
      py::arg("trials"), py::arg("seed") = 1,
      "Seeded sampler over admissible pairs.");

  mod.def(
      "structure_report",
      [](const std::string& group, long long n, long long s1, long long s2,
         long long m, long long trials, std::uint64_t seed) {
        return as_py(structure_report(make_cfg(group, n, s1, s2, m, trials, seed)));
      },
      py::arg("group"), py::arg("n"), py::arg("s1"), py::arg("s2"), py::arg("m"),
      py::arg("trials") = 0, py::arg("seed") = 1,
      "Progression-fit statistics over admissible pairs (trials=0: exhaustive).");

  mod.def(
      "count_report",
      [](const std::string& group, long long n, long long s1, long long s2,
         long long m) {
        return as_py(count_report(make_cfg(group, n, s1, s2, m, 0, 1)));
      },
      py::arg("group"), py::arg("n"), py::arg("s1"), py::arg("s2"), py::arg("m"),
      "Exact admissible-pair count against the binomial benchmark.");

  mod.def(
      "run_sweep",
      [](const std::string& oracle, const std::string& grid_text) {
        std::istringstream in(grid_text);
        return as_py(run_sweep(oracle, parse_grid(in)));
      },
      py::arg("oracle"), py::arg("grid_text"),
      "Runs the named oracle over key=value grid lines.");

  mod.def(
      "build_family",
      [](const std::string& group, long long n, long long s1, long long s2,
         long long m, double eps) {
        const GroupCtx g = parse_group(group);
        std::vector<Elem> f(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = i;
        const ElemSet f1(g, f), f2(g, f);
        const FamilyResult built = build_family(g, f1, f2, s1, s2, m, eps);
        json j = built;
        j["report"] = verify_family(built.family, g, f1, f2, s1, s2, m, eps);
        return json_to_py(j);
      },
      py::arg("group"), py::arg("n"), py::arg("s1"), py::arg("s2"), py::arg("m"),
      py::arg("eps"),
      "Builds the container family over {0..n-1} and re-verifies every guarantee.");

  mod.def(
      "canonical_hypergraph",
      [](const std::string& text) { return hypergraph_to_string(parse_hypergraph(text)); },
      py::arg("text"), "Parses and re-serializes a hypergraph description.");

  mod.def(
      "check_degree_condition",
      [](const std::string& text, long long m, long long b, long long q,
         const std::string& R) {
        const PartedHypergraph h = parse_hypergraph(text);
        return as_py(check_degree_condition(h, make_params(h, m, b, q, parse_rat(R))));
      },
      py::arg("text"), py::arg("m"), py::arg("b"), py::arg("q"), py::arg("R"),
      "Codegree allowance check for the container parameters.");

  mod.def(
      "build_container",
      [](const std::string& text, const std::vector<int>& I, long long m, long long b,
         long long q, const std::string& R) {
        const PartedHypergraph h = parse_hypergraph(text);
        return as_py(build_container(h, I, make_params(h, m, b, q, parse_rat(R))));
      },
      py::arg("text"), py::arg("independent_set"), py::arg("m"), py::arg("b"),
      py::arg("q"), py::arg("R"),
      "Container and fingerprint of one admissible independent set.");

  mod.def(
      "verify_containers",
      [](const std::string& text, long long m, long long b, long long q,
         const std::string& R, const std::vector<std::vector<int>>& sample) {
        const PartedHypergraph h = parse_hypergraph(text);
        return as_py(
            verify_container_properties(h, make_params(h, m, b, q, parse_rat(R)), sample));
      },
      py::arg("text"), py::arg("m"), py::arg("b"), py::arg("q"), py::arg("R"),
      py::arg("sample"),
      "Builds containers for each sampled independent set and checks the guarantees.");
}
