// Sequence loop over a pair of finite loops: coordinatewise product with the
// first table at odd indices and the second at even ones, restricted to
// finitely supported sequences (identity almost everywhere), plus the shift
// map that feeds coordinate 1 through a fixed non-special half-isomorphism
// into coordinate 2.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "hiso/magma.hpp"

namespace hiso {

// A sequence equal to the identity outside `support`; keys are 1-based
// indices, values are elements in 2..n (1 is encoded by absence).
struct FinSuppElement {
  std::map<int, int> support;

  bool operator==(const FinSuppElement&) const = default;
};

// Two loops on one carrier with a fixed non-special half-isomorphism between
// them. Construction relabels both identities to element 1 (conjugating f to
// match) and rejects anything but a non-special half-isomorphism, storing the
// codomain pair witnessing that the inverse fails.
class LoopPair {
public:
  LoopPair(CayleyTable star, CayleyTable dot, Permutation f);

  int order() const { return star_.order(); }
  const CayleyTable& star() const { return star_; }
  const CayleyTable& dot() const { return dot_; }
  const Permutation& f() const { return f_; }
  std::pair<int, int> witness() const { return witness_; }

private:
  CayleyTable star_;
  CayleyTable dot_;
  Permutation f_;
  std::pair<int, int> witness_;
};

FinSuppElement product(const LoopPair& p, const FinSuppElement& a,
                       const FinSuppElement& b);

// Index 1 feeds through f into index 2; other odd indices shift down by two,
// even indices shift up by two. Bijective with phi_inverse as inverse.
FinSuppElement phi(const LoopPair& p, const FinSuppElement& a);
FinSuppElement phi_inverse(const LoopPair& p, const FinSuppElement& a);

// Draws `samples` seeded pairs of elements supported on indices 1..12 and
// checks phi(a∙b) ∈ {phi(a)∙phi(b), phi(b)∙phi(a)} for each; true iff all
// pass. Same seed, same verdict.
bool verify_half_automorphism(const LoopPair& p, long long samples,
                              uint64_t seed);

// The first sampled pair failing the membership check above, if any, drawn
// from the same seeded stream verify_half_automorphism uses.
std::optional<std::pair<FinSuppElement, FinSuppElement>>
find_half_automorphism_violation(const LoopPair& p, long long samples,
                                 uint64_t seed);

// Single-coordinate elements at index 2 carrying the stored witness pair;
// phi_inverse fails the membership condition on them, which is re-verified
// before returning.
std::pair<FinSuppElement, FinSuppElement> nonspecial_witness_infinite(
    const LoopPair& p);

}  // namespace hiso
