// Finite binary operations as Cayley tables, permutations of {1..n}, and the
// basic table transforms. Everything is 1-based and immutable after
// construction; row index is the left operand: at(r,c) = r∘c.
#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hiso {

// Thrown when an operation would exceed its configured search/enumeration cap.
class cap_exceeded_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Permutation {
public:
  // images[i-1] = f(i); must be a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Lexicographic by image list.
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// (f∘g)(x) = f(g(x))
Permutation compose(const Permutation& f, const Permutation& g);

// Accepts either a space-separated image list of length n, or disjoint-cycle
// notation like "(3 5 7)(4 6 8)"; omitted points are fixed.
Permutation parse_permutation(const std::string& s, int n);

std::string to_string(const Permutation& p);  // image list, space-separated

class CayleyTable {
public:
  // entries is row-major, n*n values in 1..n.
  CayleyTable(int n, std::vector<int> entries, std::string name = {});

  int order() const { return n_; }
  int at(int x, int y) const { return entries_[(x - 1) * n_ + (y - 1)]; }
  const std::vector<int>& entries() const { return entries_; }
  const std::string& name() const { return name_; }

  // Same operation on the same carrier; the label does not participate.
  bool operator==(const CayleyTable& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }
  bool operator<(const CayleyTable& o) const {
    return entries_ < o.entries_;
  }

private:
  int n_;
  std::vector<int> entries_;
  std::string name_;
};

enum class AlgebraKind { Groupoid, Quasigroup, Loop };

const char* to_string(AlgebraKind k);

struct AlgebraClass {
  AlgebraKind kind = AlgebraKind::Groupoid;
  std::optional<int> identity;  // present iff kind == Loop
};

// Quasigroup iff every row and column is a permutation of 1..n; Loop
// additionally iff some e has e∘x = x∘e = x for all x.
AlgebraClass classify(const CayleyTable& t);

bool is_associative(const CayleyTable& t);
bool is_commutative(const CayleyTable& t);

// entry(r,c) -> entry(c,r)
CayleyTable transpose(const CayleyTable& t);

// u with u(x,y) = f^-1(t(f(x), f(y))); f is an isomorphism u -> t.
CayleyTable apply_iso(const CayleyTable& t, const Permutation& f);

// Least x with a∘x = b resp. y∘a = b; unique for quasigroups.
std::optional<int> solve_right(const CayleyTable& t, int a, int b);
std::optional<int> solve_left(const CayleyTable& t, int a, int b);

}  // namespace hiso
