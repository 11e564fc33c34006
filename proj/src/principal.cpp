#include "hiso/principal.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hiso/halfiso.hpp"

namespace hiso {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
  }
};

bool is_latin(const CayleyTable& t) {
  const int n = t.order();
  std::vector<char> seen(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 1; y <= n; ++y) {
      const int v = t.at(x, y);
      if (seen[static_cast<size_t>(v - 1)]) return false;
      seen[static_cast<size_t>(v - 1)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 1; y <= n; ++y) {
      const int v = t.at(y, x);
      if (seen[static_cast<size_t>(v - 1)]) return false;
      seen[static_cast<size_t>(v - 1)] = 1;
    }
  }
  return true;
}

}  // namespace

bool is_principal_h_groupoid(const CayleyTable& base, const CayleyTable& cand) {
  if (base.order() != cand.order())
    throw std::invalid_argument("tables have different orders");
  const int n = base.order();
  for (int x = 1; x <= n; ++x)
    for (int y = x; y <= n; ++y) {
      const auto s = std::minmax({base.at(x, y), base.at(y, x)});
      const auto c = std::minmax({cand.at(x, y), cand.at(y, x)});
      if (s != c) return false;
    }
  return true;
}

PrincipalCount principal_count(const CayleyTable& t) {
  if (is_commutative(t))
    throw std::invalid_argument("commutative table: the swap family is trivial");
  const int n = t.order();
  const int k = commuting_set(t).size();
  PrincipalCount c;
  c.log2_M = (static_cast<long long>(n) * n - k) / 2;
  c.r = pair_partition(t).r();
  c.log2_N = c.r;
  return c;
}

PairPartition pair_partition(const CayleyTable& t) {
  if (is_commutative(t))
    throw std::invalid_argument("commutative table: no noncommuting pairs");
  const int n = t.order();
  const auto k = commuting_set(t);

  PairPartition p;
  p.n = n;
  p.quasigroup = is_latin(t);
  p.class_index.assign(static_cast<size_t>(n) * n, -1);

  UnionFind uf(n * n);
  auto id = [n](int x, int y) { return (x - 1) * n + (y - 1); };

  // Swap rule: a pair and its reverse always flip together.
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (!k.contains(x, y)) uf.unite(id(x, y), id(y, x));

  // Shared-value rules: two noncommuting pairs with the same left (resp.
  // right) element are linked when their product sets {x∘y, y∘x} intersect.
  // Bucketing pairs by each of the two products finds every intersection.
  for (int x = 1; x <= n; ++x) {
    std::map<int, int> bucket;  // product value -> representative pair id
    for (int y = 1; y <= n; ++y) {
      if (k.contains(x, y)) continue;
      for (int v : {t.at(x, y), t.at(y, x)}) {
        auto [it, inserted] = bucket.try_emplace(v, id(x, y));
        if (!inserted) uf.unite(it->second, id(x, y));
      }
    }
  }
  for (int y = 1; y <= n; ++y) {
    std::map<int, int> bucket;
    for (int x = 1; x <= n; ++x) {
      if (k.contains(x, y)) continue;
      for (int v : {t.at(x, y), t.at(y, x)}) {
        auto [it, inserted] = bucket.try_emplace(v, id(x, y));
        if (!inserted) uf.unite(it->second, id(x, y));
      }
    }
  }

  std::map<int, int> root_to_class;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (k.contains(x, y)) continue;
      const int root = uf.find(id(x, y));
      auto [it, inserted] =
          root_to_class.try_emplace(root, static_cast<int>(p.reps.size()));
      if (inserted) p.reps.emplace_back(x, y);
      p.class_index[static_cast<size_t>(id(x, y))] = it->second;
    }
  return p;
}

CayleyTable sigma_table(const CayleyTable& t, const PairPartition& p,
                        const SigmaVector& s) {
  if (p.n != t.order())
    throw std::invalid_argument("partition does not match the table");
  if (static_cast<int>(s.size()) != p.r())
    throw std::invalid_argument("sigma length differs from the class count");
  const int n = t.order();
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const int c = p.class_of(x, y);
      const bool swap = c >= 0 && s[static_cast<size_t>(c)] != 0;
      e[static_cast<size_t>(x - 1) * n + (y - 1)] =
          swap ? t.at(y, x) : t.at(x, y);
    }
  return CayleyTable(n, std::move(e));
}

std::vector<CayleyTable> enumerate_principal_quasigroups(
    const CayleyTable& t, std::optional<long long> limit, int r_cap) {
  if (!is_latin(t)) throw std::invalid_argument("table is not a quasigroup");
  const PairPartition p = pair_partition(t);  // rejects commutative input
  const int r = p.r();
  if (!limit && r > r_cap)
    throw cap_exceeded_error("2^" + std::to_string(r) +
                             " sigma tables exceed the enumeration cap; pass "
                             "an explicit limit to truncate");

  long long count;
  if (r < 62) {
    count = 1LL << r;
    if (limit) count = std::min(count, std::max<long long>(*limit, 0));
  } else {
    count = limit ? std::max<long long>(*limit, 0) : 0;
  }

  std::vector<CayleyTable> out;
  out.reserve(static_cast<size_t>(count));
  SigmaVector s(static_cast<size_t>(r));
  for (long long k = 0; k < count; ++k) {
    for (int i = 0; i < r; ++i) {
      const int bit = r - 1 - i;
      s[static_cast<size_t>(i)] =
          bit < 62 ? static_cast<uint8_t>((k >> bit) & 1) : 0;
    }
    CayleyTable q = sigma_table(t, p, s);
    if (!is_latin(q))
      throw std::logic_error("sigma table failed the Latin check");
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<CayleyTable> enumerate_isomorphic_family(const CayleyTable& t,
                                                     int cap) {
  const auto all = search_half_isomorphisms(t, t, SearchMode::All, cap);
  std::set<std::vector<int>> seen;
  std::vector<CayleyTable> out;
  size_t aut = 0, half_s = 0;
  for (const auto& f : all) {
    const auto v = specialness(t, t, f);
    if (!v.is_special) continue;
    ++half_s;
    if (v.is_isomorphism) ++aut;
    CayleyTable m = apply_iso(t, f);
    if (seen.insert(m.entries()).second) out.push_back(std::move(m));
  }
  if (aut == 0 || out.size() != half_s / aut)
    throw std::logic_error("family size differs from the subgroup index");
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Permutation> find_special_half_isomorphism(const CayleyTable& a,
                                                         const CayleyTable& b,
                                                         int cap) {
  if (a.order() != b.order())
    throw std::invalid_argument("tables have different orders");
  if (commuting_set(a).size() != commuting_set(b).size())
    return std::nullopt;  // a special half-iso preserves the commuting count
  if (is_commutative(a)) {
    // With every pair commuting on both sides, a special half-iso is forced
    // to multiply straight, i.e. it is an isomorphism.
    return find_isomorphism(a, b);
  }
  if (is_latin(a) && is_latin(b)) {
    const PairPartition p = pair_partition(a);
    const int r = p.r();
    if (r <= 20) {
      SigmaVector s(static_cast<size_t>(r));
      for (long long k = 0; k < (1LL << r); ++k) {
        for (int i = 0; i < r; ++i)
          s[static_cast<size_t>(i)] =
              static_cast<uint8_t>((k >> (r - 1 - i)) & 1);
        // The identity is a special half-iso from a onto each sigma table,
        // so any isomorphism from there onto b composes to a special
        // half-iso a -> b.
        if (auto g = find_isomorphism(sigma_table(a, p, s), b)) return g;
      }
      return std::nullopt;
    }
  }
  if (a.order() <= cap) {
    auto found = search_half_isomorphisms(a, b, SearchMode::SpecialOnly, cap);
    if (found.empty()) return std::nullopt;
    return found.front();
  }
  throw cap_exceeded_error("order " + std::to_string(a.order()) +
                           " exceeds the special search cap");
}

namespace {

// Iterated color refinement over both tables with one shared dictionary:
// seeds are label-free per-element invariants, then each round folds in the
// colors of x∘x and the multiset of (color y, color x∘y, color y∘x).
struct Refinement {
  std::vector<int> color_a, color_b;  // 1-based
  bool comparable = true;

  Refinement(const CayleyTable& a, const CayleyTable& b) {
    const int n = a.order();
    auto seed = [n](const CayleyTable& t, int x) {
      std::array<int, 6> s{};
      s[0] = t.at(x, x) == x;
      for (int y = 1; y <= n; ++y) {
        s[1] += t.at(x, y) == t.at(y, x);
        s[2] += t.at(x, y) == x;
        s[3] += t.at(y, x) == x;
        s[4] += t.at(x, y) == y;
        s[5] += t.at(y, x) == y;
      }
      return s;
    };
    color_a.assign(static_cast<size_t>(n) + 1, 0);
    color_b.assign(static_cast<size_t>(n) + 1, 0);
    {
      std::map<std::array<int, 6>, int> dict;
      for (int x = 1; x <= n; ++x) {
        color_a[static_cast<size_t>(x)] =
            dict.try_emplace(seed(a, x), static_cast<int>(dict.size()))
                .first->second;
        color_b[static_cast<size_t>(x)] =
            dict.try_emplace(seed(b, x), static_cast<int>(dict.size()))
                .first->second;
      }
    }
    using Sig = std::tuple<int, int, std::vector<std::array<int, 3>>>;
    for (int round = 0; round < n; ++round) {
      std::map<Sig, int> dict;
      std::vector<int> next_a(color_a.size()), next_b(color_b.size());
      auto signature = [n](const CayleyTable& t, const std::vector<int>& col,
                           int x) {
        std::vector<std::array<int, 3>> rows;
        rows.reserve(static_cast<size_t>(n));
        for (int y = 1; y <= n; ++y)
          rows.push_back({col[static_cast<size_t>(y)],
                          col[static_cast<size_t>(t.at(x, y))],
                          col[static_cast<size_t>(t.at(y, x))]});
        std::sort(rows.begin(), rows.end());
        return Sig{col[static_cast<size_t>(x)],
                   col[static_cast<size_t>(t.at(x, x))], std::move(rows)};
      };
      for (int x = 1; x <= n; ++x) {
        next_a[static_cast<size_t>(x)] =
            dict.try_emplace(signature(a, color_a, x),
                             static_cast<int>(dict.size()))
                .first->second;
        next_b[static_cast<size_t>(x)] =
            dict.try_emplace(signature(b, color_b, x),
                             static_cast<int>(dict.size()))
                .first->second;
      }
      const bool stable = next_a == color_a && next_b == color_b;
      color_a.swap(next_a);
      color_b.swap(next_b);
      if (stable) break;
    }
    std::map<int, int> ha, hb;
    for (int x = 1; x <= n; ++x) {
      ++ha[color_a[static_cast<size_t>(x)]];
      ++hb[color_b[static_cast<size_t>(x)]];
    }
    comparable = ha == hb;
  }
};

struct IsoSearch {
  const CayleyTable& a;
  const CayleyTable& b;
  int n;
  const std::vector<int>& color_a;
  const std::vector<int>& color_b;
  std::vector<int> order;
  std::vector<int> image;
  std::vector<char> used;

  // The pairwise pruning cannot see that an element forced as some product
  // image may later be assigned elsewhere, so a full leaf check decides.
  bool leaf_ok() const {
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        if (image[a.at(x, y)] != b.at(image[x], image[y])) return false;
    return true;
  }

  bool extend(size_t pos) {
    if (pos == order.size()) return leaf_ok();
    const int x = order[pos];
    for (int v = 1; v <= n; ++v) {
      if (used[v] ||
          color_b[static_cast<size_t>(v)] != color_a[static_cast<size_t>(x)])
        continue;
      image[x] = v;
      used[v] = 1;
      bool ok = true;
      for (size_t i = 0; i <= pos && ok; ++i) {
        const int y = order[i];
        for (auto [p, c] : {std::pair{a.at(x, y), b.at(v, image[y])},
                            std::pair{a.at(y, x), b.at(image[y], v)}}) {
          const int fp = image[p];
          if (fp != 0 ? fp != c : used[c]) {
            ok = false;
            break;
          }
        }
      }
      if (ok && extend(pos + 1)) return true;
      image[x] = 0;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> find_isomorphism(const CayleyTable& a,
                                            const CayleyTable& b, int cap) {
  if (a.order() != b.order())
    throw std::invalid_argument("tables have different orders");
  const int n = a.order();
  if (n > cap)
    throw cap_exceeded_error("order " + std::to_string(n) +
                             " exceeds the isomorphism search cap " +
                             std::to_string(cap));

  const Refinement ref(a, b);
  if (!ref.comparable) return std::nullopt;

  std::map<int, int> class_size;
  for (int x = 1; x <= n; ++x) ++class_size[ref.color_a[static_cast<size_t>(x)]];

  IsoSearch st{a, b, n, ref.color_a, ref.color_b, {}, {}, {}};
  st.order.resize(static_cast<size_t>(n));
  std::iota(st.order.begin(), st.order.end(), 1);
  std::stable_sort(st.order.begin(), st.order.end(), [&](int x, int y) {
    return class_size[ref.color_a[static_cast<size_t>(x)]] <
           class_size[ref.color_a[static_cast<size_t>(y)]];
  });
  st.image.assign(static_cast<size_t>(n) + 1, 0);
  st.used.assign(static_cast<size_t>(n) + 1, 0);

  if (!st.extend(0)) return std::nullopt;
  std::vector<int> images(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<size_t>(x - 1)] = st.image[x];
  Permutation f{std::move(images)};
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (f(a.at(x, y)) != b.at(f(x), f(y)))
        throw std::logic_error("isomorphism candidate failed verification");
  return f;
}

}  // namespace hiso
