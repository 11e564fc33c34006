#include "hiso/halfiso.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hiso {

namespace {

void require_same_order(const CayleyTable& a, const CayleyTable& b,
                        const Permutation& f) {
  if (a.order() != b.order() || a.order() != f.degree())
    throw std::invalid_argument("table and permutation orders differ");
}

void require_half_iso(const CayleyTable& a, const CayleyTable& b,
                      const Permutation& f) {
  require_same_order(a, b, f);
  if (!is_half_isomorphism(a, b, f))
    throw std::invalid_argument("mapping is not a half-isomorphism");
}

bool inverse_violates_at(const CayleyTable& a, const CayleyTable& b,
                         const Permutation& finv, int u, int v) {
  const int w = finv(b.at(u, v));
  const int p = finv(u), q = finv(v);
  return w != a.at(p, q) && w != a.at(q, p);
}

}  // namespace

CommutingSet::CommutingSet(int n)
    : n_(n), count_(0),
      bits_((static_cast<size_t>(n) * n + 63) / 64, 0) {}

bool CommutingSet::contains(int x, int y) const {
  const size_t k = static_cast<size_t>(x - 1) * n_ + (y - 1);
  return (bits_[k / 64] >> (k % 64)) & 1;
}

void CommutingSet::insert(int x, int y) {
  const size_t k = static_cast<size_t>(x - 1) * n_ + (y - 1);
  if (!((bits_[k / 64] >> (k % 64)) & 1)) {
    bits_[k / 64] |= uint64_t{1} << (k % 64);
    ++count_;
  }
}

std::vector<std::pair<int, int>> CommutingSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(count_));
  for (int x = 1; x <= n_; ++x)
    for (int y = 1; y <= n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

CommutingSet commuting_set(const CayleyTable& t) {
  const int n = t.order();
  CommutingSet k(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (t.at(x, y) == t.at(y, x)) k.insert(x, y);
  return k;
}

bool is_half_isomorphism(const CayleyTable& a, const CayleyTable& b,
                         const Permutation& f) {
  require_same_order(a, b, f);
  const int n = a.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const int w = f(a.at(x, y));
      if (w != b.at(f(x), f(y)) && w != b.at(f(y), f(x))) return false;
    }
  return true;
}

HalfIsoVerdict specialness(const CayleyTable& a, const CayleyTable& b,
                           const Permutation& f) {
  require_same_order(a, b, f);
  HalfIsoVerdict v;
  v.is_half_iso = is_half_isomorphism(a, b, f);
  if (!v.is_half_iso) return v;

  const int n = a.order();
  v.is_isomorphism = true;
  v.is_anti_isomorphism = true;
  v.is_special = true;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const int w = f(a.at(x, y));
      if (w != b.at(f(x), f(y))) v.is_isomorphism = false;
      if (w != b.at(f(y), f(x))) v.is_anti_isomorphism = false;
      if (a.at(x, y) == a.at(y, x) && b.at(f(x), f(y)) != b.at(f(y), f(x)))
        v.is_special = false;
    }

  if (!v.is_special) {
    const Permutation finv = f.inverse();
    for (int u = 1; u <= n && !v.nonspecial_witness; ++u)
      for (int w = u + 1; w <= n; ++w)
        if (inverse_violates_at(a, b, finv, u, w)) {
          v.nonspecial_witness = {u, w};
          break;
        }
    for (int u = 1; u <= n && !v.nonspecial_witness; ++u)
      if (inverse_violates_at(a, b, finv, u, u)) v.nonspecial_witness = {u, u};
    for (int u = 1; u <= n && !v.nonspecial_witness; ++u)
      for (int w = 1; w < u; ++w)
        if (inverse_violates_at(a, b, finv, u, w)) {
          v.nonspecial_witness = {u, w};
          break;
        }
    if (!v.nonspecial_witness)
      throw std::logic_error("non-special verdict without an inverse violation");
  }
  return v;
}

bool specialness_criteria_agree(const CayleyTable& a, const CayleyTable& b,
                                const Permutation& f) {
  require_half_iso(a, b, f);
  const int n = a.order();
  const Permutation finv = f.inverse();

  const bool inverse_is_half_iso = is_half_isomorphism(b, a, finv);

  bool product_sets_equal = true;
  for (int x = 1; x <= n && product_sets_equal; ++x)
    for (int y = 1; y <= n && product_sets_equal; ++y) {
      const int p1 = f(a.at(x, y)), p2 = f(a.at(y, x));
      const int q1 = b.at(f(x), f(y)), q2 = b.at(f(y), f(x));
      const auto lo = std::minmax({p1, p2}), hi = std::minmax({q1, q2});
      product_sets_equal = lo == hi;
    }

  bool commuting_preserved = true;
  for (int x = 1; x <= n && commuting_preserved; ++x)
    for (int y = 1; y <= n && commuting_preserved; ++y)
      if (a.at(x, y) == a.at(y, x) && b.at(f(x), f(y)) != b.at(f(y), f(x)))
        commuting_preserved = false;

  // The pullback is always injective into K(a); bijectivity reduces to
  // covering K(a) exactly.
  std::set<std::pair<int, int>> image;
  for (auto [u, w] : commuting_set(b).pairs()) image.insert({finv(u), finv(w)});
  std::set<std::pair<int, int>> ka;
  for (auto pr : commuting_set(a).pairs()) ka.insert(pr);
  const bool pullback_bijective = image == ka;

  return inverse_is_half_iso == product_sets_equal &&
         product_sets_equal == commuting_preserved &&
         commuting_preserved == pullback_bijective;
}

std::vector<std::pair<int, int>> commuting_pullback(const CayleyTable& a,
                                                    const CayleyTable& b,
                                                    const Permutation& f) {
  require_half_iso(a, b, f);
  const Permutation finv = f.inverse();
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : commuting_set(b).pairs()) out.emplace_back(finv(u), finv(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct SearchState {
  const CayleyTable& a;
  const CayleyTable& b;
  SearchMode mode;
  int n;
  std::vector<int> order;       // domain elements, most-constrained first
  std::vector<int> deg_a;       // commutation degree per element, 1-based
  std::vector<int> deg_b;
  std::vector<int> image;       // 0 = unassigned
  std::vector<char> used;
  std::vector<Permutation> found;

  bool leaf_accepts(const Permutation& f) const {
    if (!is_half_isomorphism(a, b, f)) return false;
    if (mode != SearchMode::SpecialOnly) return true;
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (a.at(x, y) == a.at(y, x) && b.at(f(x), f(y)) != b.at(f(y), f(x)))
          return false;
    return true;
  }

  // Checks the constraints the assignment of x creates against one already
  // assigned element y (y may equal x for the diagonal). Products whose image
  // is not fixed yet only prune when no unused candidate value remains.
  bool consistent_with(int x, int y) const {
    const int p = a.at(y, x), q = a.at(x, y);
    const int c1 = b.at(image[y], image[x]), c2 = b.at(image[x], image[y]);
    if (p == q) {
      if (mode == SearchMode::SpecialOnly && c1 != c2) return false;
      const int fp = image[p];
      if (fp != 0) return fp == c1 || fp == c2;
      return !used[c1] || !used[c2];
    }
    // Distinct products need distinct images inside a two-element set.
    if (c1 == c2) return false;
    const int fp = image[p], fq = image[q];
    if (fp != 0 && fp != c1 && fp != c2) return false;
    if (fq != 0 && fq != c1 && fq != c2) return false;
    if (fp != 0 && fq != 0) return true;
    if (fp != 0) {
      const int other = fp == c1 ? c2 : c1;
      return !used[other];
    }
    if (fq != 0) {
      const int other = fq == c1 ? c2 : c1;
      return !used[other];
    }
    return !used[c1] && !used[c2];
  }

  bool extend(size_t pos) {
    if (pos == order.size()) {
      std::vector<int> images(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i) images[static_cast<size_t>(i - 1)] = image[i];
      Permutation f(std::move(images));
      if (leaf_accepts(f)) {
        found.push_back(std::move(f));
        if (mode == SearchMode::First) return true;
      }
      return false;
    }
    const int x = order[pos];
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (deg_b[v] > deg_a[x]) continue;
      if (mode == SearchMode::SpecialOnly && deg_b[v] != deg_a[x]) continue;
      image[x] = v;
      used[v] = 1;
      bool ok = true;
      for (size_t i = 0; i <= pos && ok; ++i) ok = consistent_with(x, order[i]);
      if (ok && extend(pos + 1)) return true;
      image[x] = 0;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<Permutation> search_half_isomorphisms(const CayleyTable& a,
                                                  const CayleyTable& b,
                                                  SearchMode mode, int cap) {
  if (a.order() != b.order())
    throw std::invalid_argument("tables have different orders");
  const int n = a.order();
  if (n > cap)
    throw cap_exceeded_error("order " + std::to_string(n) +
                             " exceeds the search cap " + std::to_string(cap));

  SearchState st{a, b, mode, n, {}, {}, {}, {}, {}, {}};
  st.deg_a.assign(static_cast<size_t>(n) + 1, 0);
  st.deg_b.assign(static_cast<size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (a.at(x, y) == a.at(y, x)) ++st.deg_a[x];
      if (b.at(x, y) == b.at(y, x)) ++st.deg_b[x];
    }
  st.order.resize(static_cast<size_t>(n));
  std::iota(st.order.begin(), st.order.end(), 1);
  std::stable_sort(st.order.begin(), st.order.end(),
                   [&](int x, int y) { return st.deg_a[x] > st.deg_a[y]; });
  st.image.assign(static_cast<size_t>(n) + 1, 0);
  st.used.assign(static_cast<size_t>(n) + 1, 0);

  st.extend(0);
  std::sort(st.found.begin(), st.found.end());
  return st.found;
}

}  // namespace hiso
