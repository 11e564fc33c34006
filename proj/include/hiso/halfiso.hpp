// Half-isomorphism analysis: a bijection f between groupoids is a half-iso
// when f(x*y) always lands in {f(x)f(y), f(y)f(x)}, and special when f^-1 is
// a half-iso too. Provides the commuting-pair set K, verdicts, the pullback
// of K along f^-1, and exhaustive search for all half-isos between tables.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hiso/magma.hpp"

namespace hiso {

// Ordered pairs (x,y) with x∘y = y∘x, as a bit-set keyed (x-1)*n + (y-1).
class CommutingSet {
public:
  explicit CommutingSet(int n);

  int order() const { return n_; }
  bool contains(int x, int y) const;
  int size() const { return count_; }
  std::vector<std::pair<int, int>> pairs() const;  // sorted lexicographically

  void insert(int x, int y);

private:
  int n_;
  int count_;
  std::vector<uint64_t> bits_;
};

CommutingSet commuting_set(const CayleyTable& t);

struct HalfIsoVerdict {
  bool is_half_iso = false;
  bool is_special = false;
  bool is_isomorphism = false;
  bool is_anti_isomorphism = false;
  // Codomain pair (u,v) with f^-1(u·v) outside {f^-1(u)*f^-1(v),
  // f^-1(v)*f^-1(u)}; present iff half-iso and not special. Scan order:
  // pairs with u < v first, then the diagonal, then u > v, each
  // lexicographically.
  std::optional<std::pair<int, int>> nonspecial_witness;
};

bool is_half_isomorphism(const CayleyTable& a, const CayleyTable& b,
                         const Permutation& f);

// Full verdict for f: a -> b. Specialness is decided by the commuting-pair
// criterion: every commuting pair of a must have commuting images in b.
HalfIsoVerdict specialness(const CayleyTable& a, const CayleyTable& b,
                           const Permutation& f);

// Evaluates the four equivalent specialness characterizations independently
// (inverse is a half-iso; product-set equality; commuting pairs map to
// commuting pairs; the commuting pullback is a bijection onto K(a)) and
// reports whether they agree. Requires f to be a half-isomorphism.
bool specialness_criteria_agree(const CayleyTable& a, const CayleyTable& b,
                                const Permutation& f);

// {(f^-1(u), f^-1(v)) : (u,v) ∈ K(b)}, sorted; always a subset of K(a) of
// size |K(b)|. Requires f to be a half-isomorphism.
std::vector<std::pair<int, int>> commuting_pullback(const CayleyTable& a,
                                                    const CayleyTable& b,
                                                    const Permutation& f);

enum class SearchMode { All, SpecialOnly, First };

// Backtracking enumeration of the half-isomorphisms a -> b. Images are
// assigned in descending order of commutation degree; partial assignments are
// pruned as soon as a fully determined product violates the membership
// condition in either orientation. Output sorted lexicographically.
// Throws cap_exceeded_error when the order exceeds cap.
std::vector<Permutation> search_half_isomorphisms(const CayleyTable& a,
                                                  const CayleyTable& b,
                                                  SearchMode mode,
                                                  int cap = 10);

}  // namespace hiso
