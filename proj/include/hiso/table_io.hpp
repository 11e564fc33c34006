// Plain-text Cayley table format: first non-comment line is the order n,
// followed by n rows of n whitespace-separated values in 1..n. Lines starting
// with '#' and blank lines are ignored anywhere.
#pragma once

#include <stdexcept>
#include <string>

#include "hiso/magma.hpp"

namespace hiso {

class table_parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// name labels the table in error messages and reports (file path or key).
CayleyTable parse_table(const std::string& text, const std::string& name);
CayleyTable load_table(const std::string& path);

// Canonical form: "n\n" then one single-space-separated row per line, each
// ending in '\n'. parse_table(serialize(t)) reproduces t exactly.
std::string serialize(const CayleyTable& t);

}  // namespace hiso
