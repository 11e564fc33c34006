// Ordered key/value report with two renderings: "key: value" lines, or one
// flat JSON object with the same keys in the same order. Identical inputs
// must produce byte-identical output in either mode.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hiso/magma.hpp"

namespace hiso {

class Report {
public:
  void add_text(const std::string& key, const std::string& value);
  void add_int(const std::string& key, long long value);
  void add_bool(const std::string& key, bool value);
  void add_perm(const std::string& key, const Permutation& p);
  void add_pair(const std::string& key, std::pair<int, int> pr);  // "(x,y)"
  void add_pow2(const std::string& key, long long exponent);      // "2^e"
  // Row-major table entries: space-separated in text, an array in JSON.
  void add_table(const std::string& key, const CayleyTable& t);
  void add_support(const std::string& key,
                   const std::vector<std::pair<int, int>>& index_value);

  void print(std::ostream& out, bool as_json) const;

private:
  struct Entry {
    std::string key;
    std::string text;
    nlohmann::ordered_json json;
  };
  std::vector<Entry> entries_;
};

}  // namespace hiso
