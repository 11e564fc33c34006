#include "hiso/report.hpp"

#include <ostream>
#include <sstream>

namespace hiso {

void Report::add_text(const std::string& key, const std::string& value) {
  entries_.push_back({key, value, value});
}

void Report::add_int(const std::string& key, long long value) {
  entries_.push_back({key, std::to_string(value), value});
}

void Report::add_bool(const std::string& key, bool value) {
  entries_.push_back({key, value ? "true" : "false", value});
}

void Report::add_perm(const std::string& key, const Permutation& p) {
  entries_.push_back({key, to_string(p), p.images()});
}

void Report::add_pair(const std::string& key, std::pair<int, int> pr) {
  std::ostringstream text;
  text << '(' << pr.first << ',' << pr.second << ')';
  entries_.push_back({key, text.str(),
                      nlohmann::ordered_json::array({pr.first, pr.second})});
}

void Report::add_pow2(const std::string& key, long long exponent) {
  const std::string text = "2^" + std::to_string(exponent);
  entries_.push_back({key, text, text});
}

void Report::add_table(const std::string& key, const CayleyTable& t) {
  std::ostringstream text;
  for (size_t i = 0; i < t.entries().size(); ++i) {
    if (i > 0) text << ' ';
    text << t.entries()[i];
  }
  entries_.push_back({key, text.str(), t.entries()});
}

void Report::add_support(const std::string& key,
                         const std::vector<std::pair<int, int>>& index_value) {
  std::ostringstream text;
  auto arr = nlohmann::ordered_json::array();
  if (index_value.empty()) text << "id";
  for (size_t i = 0; i < index_value.size(); ++i) {
    if (i > 0) text << ' ';
    text << index_value[i].first << ':' << index_value[i].second;
    arr.push_back(
        nlohmann::ordered_json::array({index_value[i].first,
                                       index_value[i].second}));
  }
  entries_.push_back({key, text.str(), std::move(arr)});
}

void Report::print(std::ostream& out, bool as_json) const {
  if (as_json) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& e : entries_) obj[e.key] = e.json;
    out << obj.dump(2) << '\n';
    return;
  }
  for (const auto& e : entries_) out << e.key << ": " << e.text << '\n';
}

}  // namespace hiso
