// Built-in example tables and small generated families. Keys resolve before
// file paths in the CLI; generator keys take the form cyclic:n, dihedral:2n,
// symmetric:n, alternating:n.
#pragma once

#include <string>
#include <vector>

#include "hiso/magma.hpp"

namespace hiso {

// Fixed example tables: ex1-c6, ex1-L, ex41-star, ex41-dot, ex61-bol, ex61-d8.
const std::vector<CayleyTable>& corpus();

bool is_builtin_key(const std::string& key);

// Resolves fixed keys and generator keys; throws std::invalid_argument for
// anything unknown or out of the generators' supported range.
CayleyTable builtin(const std::string& key);

// Z_n under addition, elements 1..n with 1 as the identity.
CayleyTable cyclic_table(int n);

// Dihedral group of the given (even, >= 2) order: rotations first, then
// reflections.
CayleyTable dihedral_table(int order);

// All n! permutations in lexicographic image order, index 1 = identity; n <= 5.
CayleyTable symmetric_table(int n);

// Even permutations in lexicographic image order; n <= 5.
CayleyTable alternating_table(int n);

}  // namespace hiso
