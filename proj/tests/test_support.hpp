// Shared helpers for the unit and acceptance suites. The brute-force
// routines spell out every condition inline so they stay independent of the
// library implementations they are used to cross-check.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hiso/magma.hpp"

namespace hiso::testing {

// f is given as a 1-based image vector of length n.
inline bool raw_half_iso(const CayleyTable& a, const CayleyTable& b,
                         const std::vector<int>& img) {
  const int n = a.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      const int lhs = img[static_cast<size_t>(a.at(x, y) - 1)];
      const int u = img[static_cast<size_t>(x - 1)];
      const int v = img[static_cast<size_t>(y - 1)];
      if (lhs != b.at(u, v) && lhs != b.at(v, u)) return false;
    }
  return true;
}

inline bool raw_iso(const CayleyTable& a, const CayleyTable& b,
                    const std::vector<int>& img) {
  const int n = a.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (img[static_cast<size_t>(a.at(x, y) - 1)] !=
          b.at(img[static_cast<size_t>(x - 1)], img[static_cast<size_t>(y - 1)]))
        return false;
  return true;
}

inline bool raw_anti_iso(const CayleyTable& a, const CayleyTable& b,
                         const std::vector<int>& img) {
  const int n = a.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (img[static_cast<size_t>(a.at(x, y) - 1)] !=
          b.at(img[static_cast<size_t>(y - 1)], img[static_cast<size_t>(x - 1)]))
        return false;
  return true;
}

// Special means the inverse bijection also satisfies the two-sided condition.
inline bool raw_special(const CayleyTable& a, const CayleyTable& b,
                        const std::vector<int>& img) {
  if (!raw_half_iso(a, b, img)) return false;
  const int n = a.order();
  std::vector<int> inv(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) inv[static_cast<size_t>(img[static_cast<size_t>(x - 1)] - 1)] = x;
  return raw_half_iso(b, a, inv);
}

// Every bijection domain -> codomain passing pred, in lexicographic order.
template <typename Pred>
std::vector<std::vector<int>> brute_bijections(int n, Pred pred) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<std::vector<int>> hits;
  do {
    if (pred(img)) hits.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return hits;
}

inline std::vector<std::vector<int>> brute_half_isos(const CayleyTable& a,
                                                     const CayleyTable& b) {
  return brute_bijections(a.order(), [&](const std::vector<int>& img) {
    return raw_half_iso(a, b, img);
  });
}

inline bool latin_oracle(const CayleyTable& t) {
  const int n = t.order();
  for (int x = 1; x <= n; ++x) {
    std::vector<char> row(static_cast<size_t>(n) + 1, 0),
        col(static_cast<size_t>(n) + 1, 0);
    for (int y = 1; y <= n; ++y) {
      if (row[static_cast<size_t>(t.at(x, y))]++) return false;
      if (col[static_cast<size_t>(t.at(y, x))]++) return false;
    }
  }
  return true;
}

inline std::vector<int> random_images(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(img[static_cast<size_t>(i)],
              img[rng() % static_cast<std::uint64_t>(i + 1)]);
  return img;
}

// Isotopy scramble of the cyclic table; rejects commutative outcomes so the
// swap-family machinery always has something to act on.
inline CayleyTable random_quasigroup(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::vector<int> al = random_images(n, rng), be = random_images(n, rng),
                           ga = random_images(n, rng);
    std::vector<int> e(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y) {
        const int base = (al[static_cast<size_t>(x - 1)] + be[static_cast<size_t>(y - 1)]) % n + 1;
        e[static_cast<size_t>((x - 1) * n + (y - 1))] = ga[static_cast<size_t>(base - 1)];
      }
    CayleyTable t(n, std::move(e));
    if (!is_commutative(t)) return t;
  }
  throw std::logic_error("no noncommutative isotope found");
}

// Q8 from the sign rules: 1,-1,i,-i,j,-j,k,-k as 1..8.
inline CayleyTable quaternion_table() {
  // index -> (axis, sign): 0:(0,+) 1:(0,-) 2:(1,+) 3:(1,-) ...
  auto mul = [](int p, int q) {
    const int ax = (p - 1) / 2, bx = (q - 1) / 2;
    int sign = ((p - 1) % 2 ? -1 : 1) * ((q - 1) % 2 ? -1 : 1);
    int axis;
    if (ax == 0) axis = bx;
    else if (bx == 0) axis = ax;
    else if (ax == bx) {
      axis = 0;
      sign = -sign;  // i*i = j*j = k*k = -1
    } else {
      axis = 6 - ax - bx;  // {1,2,3} are i,j,k
      if ((ax % 3) + 1 != bx) sign = -sign;  // j*i = -k and the two cycles
    }
    return 2 * axis + (sign > 0 ? 1 : 2);
  };
  std::vector<int> e;
  e.reserve(64);
  for (int x = 1; x <= 8; ++x)
    for (int y = 1; y <= 8; ++y) e.push_back(mul(x, y));
  return CayleyTable(8, std::move(e), "q8");
}

}  // namespace hiso::testing
