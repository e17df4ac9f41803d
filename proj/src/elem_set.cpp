#include "sumstruct/elem_set.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sumstruct {

ElemSet::ElemSet(const GroupCtx& g, std::vector<Elem> v) : group(g) {
  for (Elem& e : v) e = g.canon(e);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  elems = std::move(v);
  if (elems.empty()) return;
  const Elem span = group.is_cyclic() ? group.modulus : elems.back() - elems.front() + 1;
  if (span <= kBitsetCutoff) {
    cache_base = group.is_cyclic() ? 0 : elems.front();
    cache = BitVec(static_cast<std::size_t>(span));
    for (Elem e : elems) cache.set(static_cast<std::size_t>(e - cache_base));
  }
}

Elem ElemSet::min() const {
  if (elems.empty()) throw std::invalid_argument("empty set has no minimum");
  return elems.front();
}

Elem ElemSet::max() const {
  if (elems.empty()) throw std::invalid_argument("empty set has no maximum");
  return elems.back();
}

bool ElemSet::contains(Elem e) const {
  e = group.canon(e);
  if (cache.nbits) {
    if (e < cache_base || e - cache_base >= static_cast<Elem>(cache.nbits)) return false;
    return cache.test(static_cast<std::size_t>(e - cache_base));
  }
  return std::binary_search(elems.begin(), elems.end(), e);
}

ElemSet make_set(const GroupCtx& g, std::vector<Elem> v) { return ElemSet(g, std::move(v)); }

ElemSet make_interval(const GroupCtx& g, Elem lo, Elem hi) {
  std::vector<Elem> v;
  for (Elem e = lo; e <= hi; ++e) v.push_back(e);
  return ElemSet(g, std::move(v));
}

ElemSet make_ap(const GroupCtx& g, Elem start, Elem diff, long long len) {
  if (len < 1) throw std::invalid_argument("progression length must be >= 1");
  std::vector<Elem> v;
  v.reserve(static_cast<std::size_t>(len));
  Elem cur = start;
  for (long long k = 0; k < len; ++k) {
    v.push_back(cur);
    if (k + 1 < len) cur = g.add(cur, diff);
  }
  return ElemSet(g, std::move(v));
}

ElemSet full_set(const GroupCtx& g) {
  if (!g.is_cyclic()) throw std::invalid_argument("full set only exists for cyclic groups");
  return make_interval(g, 0, g.modulus - 1);
}

ElemSet parse_elemset(const std::string& text, const GroupCtx& g) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::vector<Elem> v;
  if (i < text.size() && text[i] == '[') {
    const nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& x : j) v.push_back(x.get<Elem>());
    return ElemSet(g, std::move(v));
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Elem e;
    if (ls >> e) v.push_back(e);
  }
  return ElemSet(g, std::move(v));
}

ElemSet read_elemset(std::istream& in, const GroupCtx& g) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_elemset(buf.str(), g);
}

void write_elemset(std::ostream& out, const ElemSet& s) {
  for (Elem e : s.elems) out << e << '\n';
}

}  // namespace sumstruct
