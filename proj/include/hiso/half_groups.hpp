// The nested families of self-maps of one table: automorphisms inside
// anti-automorphisms' trivial union, inside the special half-automorphisms,
// inside all half-automorphisms, with the structural checks relating them.
#pragma once

#include <vector>

#include "hiso/halfiso.hpp"
#include "hiso/magma.hpp"

namespace hiso {

struct HalfAutomorphismGroups {
  std::vector<Permutation> aut;     // isomorphisms t -> t
  std::vector<Permutation> ant;     // anti-isomorphisms t -> t
  std::vector<Permutation> half_s;  // special half-automorphisms
  std::vector<Permutation> half;    // all half-automorphisms
  long long index_mi = 0;           // |half_s| / |aut|
};

// Exhaustive computation via search_half_isomorphisms(t, t, All); all lists
// sorted lexicographically. Throws cap_exceeded_error above the cap.
HalfAutomorphismGroups half_groups(const CayleyTable& t, int cap = 10);

// Structural checks on a computed family: half_s is a group; the trivial
// part (aut and ant) is closed under composition with aut normal in it; and
// half is a group exactly when it coincides with half_s.
bool verify_half_group_structure(const CayleyTable& t,
                                 const HalfAutomorphismGroups& g);

enum class AntiStatus {
  No,
  Yes,
  // Commutative tables get a dedicated status: there every automorphism is
  // an anti-automorphism and the noncommutative counting identities do not
  // apply.
  CommutativeInput,
};

// For noncommutative t, decides whether an anti-automorphism exists. Within
// the search cap this also asserts |ant| = |aut|; for larger tables it falls
// back to an isomorphism test against the transpose.
AntiStatus anti_automorphism_exists(const CayleyTable& t, int cap = 10);

// For a special half-isomorphism f: a -> b, checks that conjugation
// g -> f∘g∘f⁻¹ carries the half-automorphisms of a onto those of b and the
// special ones onto the special ones, with matching counts.
bool conjugation_invariance_check(const CayleyTable& a, const CayleyTable& b,
                                  const Permutation& f, int cap = 10);

}  // namespace hiso
