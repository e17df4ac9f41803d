#pragma once
// Ambient group abstraction: the integers Z, or a single cyclic group Z/nZ.
// Owns element arithmetic (checked against overflow in Z), the list of finite
// subgroup sizes, and the statistic beta(t) = largest finite subgroup size <= t.

#include <cstdint>
#include <string>
#include <vector>

namespace sumstruct {

using Elem = std::int64_t;

enum class GroupKind { Integers, Cyclic };

struct GroupCtx {
  GroupKind kind = GroupKind::Integers;
  Elem modulus = 0;  // n for Cyclic; unused for Integers

  bool is_cyclic() const { return kind == GroupKind::Cyclic; }

  // Canonical representative: values in [0, n) for cyclic groups, identity on Z.
  Elem canon(Elem a) const {
    if (!is_cyclic()) return a;
    Elem r = a % modulus;
    return r < 0 ? r + modulus : r;
  }

  // Checked addition: overflow in Z is an error, never a silent wrap.
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;

  bool operator==(const GroupCtx& o) const {
    return kind == o.kind && (kind == GroupKind::Integers || modulus == o.modulus);
  }
  bool operator!=(const GroupCtx& o) const { return !(*this == o); }

  std::string describe() const;  // "z" or "zn:<n>"
};

// Constructors reject an empty group (n = 0) and moduli beyond the supported range.
GroupCtx make_group(GroupKind kind, Elem n = 0);
// Parses "z" or "zn:<n>".
GroupCtx parse_group(const std::string& spec);

// Ascending sizes of the finite subgroups: all divisors of n for Z/nZ, {1} for Z.
std::vector<Elem> subgroup_sizes(const GroupCtx& g);

// beta(t): largest finite subgroup size <= t; 0 when t < 1.
Elem beta(const GroupCtx& g, double t);

}  // namespace sumstruct
