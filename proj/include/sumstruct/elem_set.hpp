#pragma once
// Finite subsets of the ambient group. Elements are kept sorted, distinct and
// canonical; a dense bit vector is cached at construction whenever the ambient
// universe (cyclic order, or integer span) fits the cutoff, giving O(1)
// membership for the hot enumeration loops.

#include <iosfwd>
#include <string>
#include <vector>

#include "sumstruct/bits.hpp"
#include "sumstruct/group.hpp"

namespace sumstruct {

struct ElemSet {
  // Universes up to this many bits get a dense membership cache.
  static constexpr std::int64_t kBitsetCutoff = std::int64_t(1) << 16;

  GroupCtx group;
  std::vector<Elem> elems;  // sorted, distinct, canonical
  BitVec cache;             // dense membership cache (may be empty)
  Elem cache_base = 0;      // value represented by bit 0

  ElemSet() = default;
  ElemSet(const GroupCtx& g, std::vector<Elem> v);

  std::size_t size() const { return elems.size(); }
  bool empty() const { return elems.empty(); }
  Elem min() const;  // throws on empty
  Elem max() const;
  bool contains(Elem e) const;

  bool operator==(const ElemSet& o) const { return group == o.group && elems == o.elems; }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }
};

ElemSet make_set(const GroupCtx& g, std::vector<Elem> v);

// Interval {lo, lo+1, ..., hi} (canonicalised for cyclic groups).
ElemSet make_interval(const GroupCtx& g, Elem lo, Elem hi);
// Arithmetic progression {start + k*diff : 0 <= k < len}.
ElemSet make_ap(const GroupCtx& g, Elem start, Elem diff, long long len);
// The full group (cyclic only).
ElemSet full_set(const GroupCtx& g);

// Text form: one integer per line. A leading '[' switches to a JSON array.
ElemSet parse_elemset(const std::string& text, const GroupCtx& g);
ElemSet read_elemset(std::istream& in, const GroupCtx& g);
void write_elemset(std::ostream& out, const ElemSet& s);

}  // namespace sumstruct
