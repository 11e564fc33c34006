#include "hiso/corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hiso {

namespace {

CayleyTable fixed(const std::string& name, int n, std::vector<int> e) {
  return CayleyTable(n, std::move(e), name);
}

const std::vector<CayleyTable>& fixed_corpus() {
  static const std::vector<CayleyTable> tables = {
      fixed("ex1-c6", 6,
            {1, 2, 3, 4, 5, 6,
             2, 3, 4, 5, 6, 1,
             3, 4, 5, 6, 1, 2,
             4, 5, 6, 1, 2, 3,
             5, 6, 1, 2, 3, 4,
             6, 1, 2, 3, 4, 5}),
      fixed("ex1-L", 6,
            {1, 2, 3, 4, 5, 6,
             2, 3, 4, 5, 6, 1,
             3, 1, 5, 6, 4, 2,
             4, 5, 6, 1, 2, 3,
             5, 6, 1, 2, 3, 4,
             6, 4, 2, 3, 1, 5}),
      fixed("ex41-star", 8,
            {1, 2, 3, 4, 6, 5, 7, 8,
             2, 1, 4, 3, 5, 6, 8, 7,
             4, 3, 1, 2, 7, 8, 5, 6,
             3, 4, 2, 1, 8, 7, 6, 5,
             5, 6, 8, 7, 1, 2, 4, 3,
             6, 5, 7, 8, 2, 1, 3, 4,
             8, 7, 6, 5, 3, 4, 1, 2,
             7, 8, 5, 6, 4, 3, 2, 1}),
      fixed("ex41-dot", 8,
            {1, 2, 4, 3, 6, 5, 7, 8,
             2, 1, 3, 4, 5, 6, 8, 7,
             3, 4, 1, 2, 7, 8, 5, 6,
             4, 3, 2, 1, 8, 7, 6, 5,
             5, 6, 8, 7, 1, 2, 4, 3,
             6, 5, 7, 8, 2, 1, 3, 4,
             8, 7, 6, 5, 3, 4, 1, 2,
             7, 8, 5, 6, 4, 3, 2, 1}),
      fixed("ex61-bol", 8,
            {1, 2, 3, 4, 5, 6, 7, 8,
             2, 1, 4, 6, 3, 5, 8, 7,
             3, 4, 1, 2, 7, 8, 5, 6,
             4, 3, 2, 8, 1, 7, 6, 5,
             5, 6, 7, 1, 8, 2, 3, 4,
             6, 5, 8, 7, 2, 1, 4, 3,
             7, 8, 5, 3, 6, 4, 1, 2,
             8, 7, 6, 5, 4, 3, 2, 1}),
      fixed("ex61-d8", 8,
            {1, 2, 3, 4, 5, 6, 7, 8,
             2, 1, 4, 3, 6, 5, 8, 7,
             3, 4, 1, 2, 7, 8, 5, 6,
             4, 3, 2, 1, 8, 7, 6, 5,
             5, 7, 6, 8, 1, 3, 2, 4,
             6, 8, 5, 7, 2, 4, 1, 3,
             7, 5, 8, 6, 3, 1, 4, 2,
             8, 6, 7, 5, 4, 2, 3, 1}),
  };
  return tables;
}

// All permutations of 1..n in lexicographic image order (index 1 = identity),
// optionally restricted to the even ones.
CayleyTable permutation_group_table(int n, bool even_only, const std::string& name) {
  if (n < 1 || n > 5)
    throw std::invalid_argument(name + ": supported degrees are 1..5");
  std::vector<std::vector<int>> elems;
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  do {
    if (even_only) {
      int inversions = 0;
      for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2 != 0) continue;
    }
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const int m = static_cast<int>(elems.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[elems[static_cast<size_t>(i)]] = i + 1;

  std::vector<int> e(static_cast<size_t>(m) * m);
  std::vector<int> prod(static_cast<size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // (p_i . p_j)(x) = p_i(p_j(x))
      for (int x = 0; x < n; ++x)
        prod[static_cast<size_t>(x)] =
            elems[static_cast<size_t>(i)][static_cast<size_t>(
                elems[static_cast<size_t>(j)][static_cast<size_t>(x)] - 1)];
      e[static_cast<size_t>(i) * m + j] = index.at(prod);
    }
  return CayleyTable(m, std::move(e), name);
}

}  // namespace

const std::vector<CayleyTable>& corpus() { return fixed_corpus(); }

bool is_builtin_key(const std::string& key) {
  for (const auto& t : fixed_corpus())
    if (t.name() == key) return true;
  auto colon = key.find(':');
  if (colon == std::string::npos) return false;
  const std::string family = key.substr(0, colon);
  if (family != "cyclic" && family != "dihedral" && family != "symmetric" &&
      family != "alternating")
    return false;
  const std::string arg = key.substr(colon + 1);
  if (arg.empty()) return false;
  return std::all_of(arg.begin(), arg.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

CayleyTable builtin(const std::string& key) {
  for (const auto& t : fixed_corpus())
    if (t.name() == key) return t;
  auto colon = key.find(':');
  if (colon != std::string::npos) {
    const std::string family = key.substr(0, colon);
    int arg;
    try {
      size_t used = 0;
      arg = std::stoi(key.substr(colon + 1), &used);
      if (used != key.size() - colon - 1) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator argument in key '" + key + "'");
    }
    if (family == "cyclic") return cyclic_table(arg);
    if (family == "dihedral") return dihedral_table(arg);
    if (family == "symmetric") return symmetric_table(arg);
    if (family == "alternating") return alternating_table(arg);
  }
  throw std::invalid_argument("unknown builtin table key '" + key + "'");
}

CayleyTable cyclic_table(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be >= 1");
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      e[static_cast<size_t>(x) * n + y] = (x + y) % n + 1;
  return CayleyTable(n, std::move(e), "cyclic:" + std::to_string(n));
}

CayleyTable dihedral_table(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("dihedral: order must be even and >= 2");
  const int m = order / 2;
  // Element i encodes s^eps r^a: rotations (eps=0) at 1..m, reflections at
  // m+1..2m.  s r^a s = r^-a gives the four product cases below.
  auto idx = [m](int eps, int a) { return eps * m + ((a % m) + m) % m + 1; };
  std::vector<int> e(static_cast<size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const int ei = i / m, ai = i % m;
      const int ej = j / m, aj = j % m;
      // s^ei r^ai . s^ej r^aj = s^(ei^ej) r^(aj + (ej ? -ai : ai))
      const int a = ej ? aj - ai : aj + ai;
      e[static_cast<size_t>(i) * order + j] = idx(ei ^ ej, a);
    }
  return CayleyTable(order, std::move(e), "dihedral:" + std::to_string(order));
}

CayleyTable symmetric_table(int n) {
  return permutation_group_table(n, false, "symmetric:" + std::to_string(n));
}

CayleyTable alternating_table(int n) {
  return permutation_group_table(n, true, "alternating:" + std::to_string(n));
}

}  // namespace hiso
