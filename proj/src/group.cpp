#include "sumstruct/group.hpp"

#include <limits>
#include <stdexcept>

namespace sumstruct {

namespace {
// Large enough for every experiment; small enough that canon() sums never wrap.
constexpr Elem kMaxModulus = Elem(1) << 31;
}  // namespace

Elem GroupCtx::add(Elem a, Elem b) const {
  if (is_cyclic()) return canon(canon(a) + canon(b));
  Elem out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("element addition overflows");
  return out;
}

Elem GroupCtx::neg(Elem a) const {
  if (is_cyclic()) return canon(-canon(a));
  if (a == std::numeric_limits<Elem>::min()) throw std::overflow_error("element negation overflows");
  return -a;
}

std::string GroupCtx::describe() const {
  return is_cyclic() ? "zn:" + std::to_string(modulus) : "z";
}

GroupCtx make_group(GroupKind kind, Elem n) {
  GroupCtx g;
  g.kind = kind;
  if (kind == GroupKind::Cyclic) {
    if (n < 1) throw std::invalid_argument("cyclic group requires modulus >= 1");
    if (n > kMaxModulus) throw std::invalid_argument("cyclic modulus too large");
    g.modulus = n;
  }
  return g;
}

GroupCtx parse_group(const std::string& spec) {
  if (spec == "z" || spec == "Z") return make_group(GroupKind::Integers);
  if (spec.rfind("zn:", 0) == 0 || spec.rfind("Zn:", 0) == 0) {
    const std::string num = spec.substr(3);
    size_t used = 0;
    long long n = 0;
    try {
      n = std::stoll(num, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad group spec: " + spec);
    }
    if (used != num.size()) throw std::invalid_argument("bad group spec: " + spec);
    return make_group(GroupKind::Cyclic, n);
  }
  throw std::invalid_argument("bad group spec (want z or zn:<n>): " + spec);
}

std::vector<Elem> subgroup_sizes(const GroupCtx& g) {
  if (!g.is_cyclic()) return {1};
  std::vector<Elem> small, large;
  for (Elem d = 1; d * d <= g.modulus; ++d) {
    if (g.modulus % d != 0) continue;
    small.push_back(d);
    if (d != g.modulus / d) large.push_back(g.modulus / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Elem beta(const GroupCtx& g, double t) {
  if (t < 1.0) return 0;
  Elem best = 0;
  for (Elem h : subgroup_sizes(g))
    if (static_cast<double>(h) <= t && h > best) best = h;
  return best;
}

}  // namespace sumstruct
