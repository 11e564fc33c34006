// Families built on one base table t by swapping products of noncommuting
// pairs: M(t) swaps each unordered pair independently (the identity map stays
// a special half-iso), N(t) keeps only the Latin members, described exactly
// by one 0/1 choice per linked class of noncommuting pairs, and M_I(t) keeps
// the members isomorphic to t. Also hosts the isomorphism and
// special-half-iso decision procedures built on these families.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hiso/magma.hpp"

namespace hiso {

// Partition of the noncommuting ordered pairs into the classes whose product
// choices must flip together for the table to stay Latin. Classes are
// numbered by their lexicographically least member.
struct PairPartition {
  int n = 0;
  bool quasigroup = false;                // carrier passed the Latin test
  std::vector<int> class_index;           // (x-1)*n+(y-1) -> class, -1 if commuting
  std::vector<std::pair<int, int>> reps;  // least member per class, sorted

  int r() const { return static_cast<int>(reps.size()); }
  int class_of(int x, int y) const {
    return class_index[static_cast<size_t>(x - 1) * n + (y - 1)];
  }
};

// One 0/1 choice per class: 0 keeps x∘y, 1 swaps in y∘x.
using SigmaVector = std::vector<uint8_t>;

struct PrincipalCount {
  long long log2_M = 0;  // = (n² - |K|) / 2
  int r = 0;
  long long log2_N = 0;  // = r
};

// True iff {x∘y, y∘x} agrees between base and cand for every pair -
// equivalently, the identity map is a special half-isomorphism base -> cand.
bool is_principal_h_groupoid(const CayleyTable& base, const CayleyTable& cand);

// Exponents only; the counts themselves can be astronomically large.
// Throws std::invalid_argument for commutative input.
PrincipalCount principal_count(const CayleyTable& t);

// Links pairs by the swap rule and by shared product values with a fixed
// left or right element, then takes the transitive closure (union-find).
// Throws std::invalid_argument for commutative input. Non-quasigroup input
// is accepted (quasigroup flag false); class-size guarantees then lapse.
PairPartition pair_partition(const CayleyTable& t);

CayleyTable sigma_table(const CayleyTable& t, const PairPartition& p,
                        const SigmaVector& s);

// All 2^r sigma tables in lexicographic sigma order (first class = most
// significant). Every output is verified Latin. Without an explicit limit,
// r above r_cap throws cap_exceeded_error; a limit truncates the same order.
std::vector<CayleyTable> enumerate_principal_quasigroups(
    const CayleyTable& t, std::optional<long long> limit = std::nullopt,
    int r_cap = 20);

// M_I(t): the distinct tables f applied to t over all special
// half-automorphisms f, sorted by entries; size = |half_s| / |aut|.
std::vector<CayleyTable> enumerate_isomorphic_family(const CayleyTable& t,
                                                     int cap = 10);

// A special half-isomorphism a -> b if one exists. Noncommutative quasigroup
// inputs route through the sigma family (isomorphism onto some member);
// otherwise falls back to direct search within the brute cap.
std::optional<Permutation> find_special_half_isomorphism(const CayleyTable& a,
                                                         const CayleyTable& b,
                                                         int cap = 10);

// Isomorphism search with iterated color refinement (commutation degree and
// fixed-point counts seed the colors) and color-respecting backtracking.
std::optional<Permutation> find_isomorphism(const CayleyTable& a,
                                            const CayleyTable& b,
                                            int cap = 64);

}  // namespace hiso
