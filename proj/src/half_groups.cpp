#include "hiso/half_groups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hiso/principal.hpp"

namespace hiso {

namespace {

using PermSet = std::set<Permutation>;

PermSet to_set(const std::vector<Permutation>& v) {
  return PermSet(v.begin(), v.end());
}

bool closed_under_composition(const PermSet& s) {
  for (const auto& f : s)
    for (const auto& g : s)
      if (!s.count(compose(f, g))) return false;
  return true;
}

bool closed_under_inverse(const PermSet& s) {
  return std::all_of(s.begin(), s.end(),
                     [&](const Permutation& f) { return s.count(f.inverse()); });
}

bool is_perm_group(const PermSet& s, int n) {
  return s.count(Permutation::identity(n)) && closed_under_composition(s) &&
         closed_under_inverse(s);
}

}  // namespace

HalfAutomorphismGroups half_groups(const CayleyTable& t, int cap) {
  HalfAutomorphismGroups g;
  g.half = search_half_isomorphisms(t, t, SearchMode::All, cap);
  for (const auto& f : g.half) {
    const auto v = specialness(t, t, f);
    if (v.is_special) g.half_s.push_back(f);
    if (v.is_isomorphism) g.aut.push_back(f);
    if (v.is_anti_isomorphism) g.ant.push_back(f);
  }
  if (g.aut.empty() || g.half_s.size() % g.aut.size() != 0)
    throw std::logic_error("special half-automorphism count not a multiple of "
                           "the automorphism count");
  g.index_mi = static_cast<long long>(g.half_s.size() / g.aut.size());
  return g;
}

bool verify_half_group_structure(const CayleyTable& t,
                                 const HalfAutomorphismGroups& g) {
  const int n = t.order();
  const PermSet aut = to_set(g.aut), ant = to_set(g.ant);
  const PermSet half_s = to_set(g.half_s), half = to_set(g.half);

  if (!is_perm_group(half_s, n)) return false;

  PermSet trivial = aut;
  trivial.insert(ant.begin(), ant.end());
  if (!closed_under_composition(trivial)) return false;

  for (const auto& f : aut)
    for (const auto& gmap : trivial)
      if (!aut.count(compose(gmap.inverse(), compose(f, gmap)))) return false;

  const bool half_is_group = is_perm_group(half, n);
  return half_is_group == (half == half_s);
}

AntiStatus anti_automorphism_exists(const CayleyTable& t, int cap) {
  if (is_commutative(t)) return AntiStatus::CommutativeInput;
  if (t.order() <= cap) {
    const auto g = half_groups(t, cap);
    if (g.ant.empty()) return AntiStatus::No;
    if (g.ant.size() != g.aut.size())
      throw std::logic_error("anti-automorphism count differs from the "
                             "automorphism count");
    return AntiStatus::Yes;
  }
  return find_isomorphism(t, transpose(t)) ? AntiStatus::Yes : AntiStatus::No;
}

bool conjugation_invariance_check(const CayleyTable& a, const CayleyTable& b,
                                  const Permutation& f, int cap) {
  const auto v = specialness(a, b, f);
  if (!v.is_half_iso || !v.is_special)
    throw std::invalid_argument("mapping is not a special half-isomorphism");

  const auto ga = half_groups(a, cap), gb = half_groups(b, cap);
  if (ga.half.size() != gb.half.size() ||
      ga.half_s.size() != gb.half_s.size())
    return false;

  const PermSet bh = to_set(gb.half), bhs = to_set(gb.half_s);
  const Permutation finv = f.inverse();
  for (const auto& g : ga.half)
    if (!bh.count(compose(f, compose(g, finv)))) return false;
  for (const auto& g : ga.half_s)
    if (!bhs.count(compose(f, compose(g, finv)))) return false;
  return true;
}

}  // namespace hiso
