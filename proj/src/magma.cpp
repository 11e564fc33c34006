#include "hiso/magma.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hiso {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  require(n >= 1, "permutation must have degree >= 1");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    require(v >= 1 && v <= n, "permutation image out of range 1..n");
    require(!seen[static_cast<size_t>(v - 1)], "permutation repeats an image");
    seen[static_cast<size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) im[static_cast<size_t>(i - 1)] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= degree(); ++i)
    im[static_cast<size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require(f.degree() == g.degree(), "compose: degree mismatch");
  std::vector<int> im(static_cast<size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i)
    im[static_cast<size_t>(i - 1)] = f(g(i));
  return Permutation(std::move(im));
}

Permutation parse_permutation(const std::string& s, int n) {
  require(n >= 1, "permutation degree must be >= 1");
  const bool cycle_form = s.find('(') != std::string::npos;
  if (!cycle_form) {
    std::string spaced = s;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<int> im;
    int v;
    while (in >> v) im.push_back(v);
    std::string rest;
    in.clear();
    require(!(in >> rest), "permutation: unexpected token '" + rest + "'");
    require(static_cast<int>(im.size()) == n,
            "permutation: expected " + std::to_string(n) + " images, got " +
                std::to_string(im.size()));
    return Permutation(std::move(im));  // validates bijectivity
  }

  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) im[static_cast<size_t>(i - 1)] = i;
  std::vector<char> moved(static_cast<size_t>(n), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  while (pos < s.size()) {
    require(s[pos] == '(', "permutation: expected '('");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      require(pos < s.size(), "permutation: unterminated cycle");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) ++pos;
      require(pos > start, "permutation: expected number in cycle");
      int v = std::stoi(s.substr(start, pos - start));
      require(v >= 1 && v <= n, "permutation: point " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n));
      require(!moved[static_cast<size_t>(v - 1)],
              "permutation: point " + std::to_string(v) + " appears twice");
      moved[static_cast<size_t>(v - 1)] = 1;
      cyc.push_back(v);
      skip_ws();
      if (pos < s.size() && s[pos] == ',') ++pos;
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      im[static_cast<size_t>(cyc[i] - 1)] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) out << ' ';
    out << p(i);
  }
  return out.str();
}

CayleyTable::CayleyTable(int n, std::vector<int> entries, std::string name)
    : n_(n), entries_(std::move(entries)), name_(std::move(name)) {
  require(n_ >= 1, "table order must be >= 1");
  require(entries_.size() == static_cast<size_t>(n_) * static_cast<size_t>(n_),
          "table needs n*n entries");
  for (int v : entries_)
    require(v >= 1 && v <= n_, "table entry out of range 1..n");
}

const char* to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Groupoid: return "groupoid";
    case AlgebraKind::Quasigroup: return "quasigroup";
    case AlgebraKind::Loop: return "loop";
  }
  return "groupoid";
}

AlgebraClass classify(const CayleyTable& t) {
  const int n = t.order();
  std::vector<char> seen(static_cast<size_t>(n));
  auto is_perm = [&](auto&& get) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 1; i <= n; ++i) {
      int v = get(i);
      if (seen[static_cast<size_t>(v - 1)]) return false;
      seen[static_cast<size_t>(v - 1)] = 1;
    }
    return true;
  };
  for (int x = 1; x <= n; ++x) {
    if (!is_perm([&](int y) { return t.at(x, y); })) return {};
    if (!is_perm([&](int y) { return t.at(y, x); })) return {};
  }
  for (int e = 1; e <= n; ++e) {
    bool ok = true;
    for (int x = 1; x <= n && ok; ++x)
      ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) return {AlgebraKind::Loop, e};
  }
  return {AlgebraKind::Quasigroup, std::nullopt};
}

bool is_associative(const CayleyTable& t) {
  const int n = t.order();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) return false;
  return true;
}

bool is_commutative(const CayleyTable& t) {
  const int n = t.order();
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      if (t.at(x, y) != t.at(y, x)) return false;
  return true;
}

CayleyTable transpose(const CayleyTable& t) {
  const int n = t.order();
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      e[static_cast<size_t>(x - 1) * n + (y - 1)] = t.at(y, x);
  return CayleyTable(n, std::move(e));
}

CayleyTable apply_iso(const CayleyTable& t, const Permutation& f) {
  require(f.degree() == t.order(), "apply_iso: degree mismatch");
  const int n = t.order();
  const Permutation finv = f.inverse();
  std::vector<int> e(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      e[static_cast<size_t>(x - 1) * n + (y - 1)] = finv(t.at(f(x), f(y)));
  return CayleyTable(n, std::move(e));
}

std::optional<int> solve_right(const CayleyTable& t, int a, int b) {
  for (int x = 1; x <= t.order(); ++x)
    if (t.at(a, x) == b) return x;
  return std::nullopt;
}

std::optional<int> solve_left(const CayleyTable& t, int a, int b) {
  for (int y = 1; y <= t.order(); ++y)
    if (t.at(y, a) == b) return y;
  return std::nullopt;
}

}  // namespace hiso
