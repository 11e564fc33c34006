#include "hiso/table_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hiso {

namespace {

struct Token {
  int value;
  int line;  // 1-based, counted over the raw input
};

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  std::ostringstream out;
  out << name << ":" << line << ": " << what;
  throw table_parse_error(out.str());
}

std::vector<Token> tokenize(const std::string& text, const std::string& name) {
  std::vector<Token> toks;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view sv(raw);
    if (auto h = sv.find('#'); h != std::string_view::npos) sv = sv.substr(0, h);
    std::istringstream ls{std::string(sv)};
    std::string word;
    while (ls >> word) {
      try {
        size_t used = 0;
        int v = std::stoi(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
        toks.push_back({v, line});
      } catch (const std::exception&) {
        fail(name, line, "expected an integer, got '" + word + "'");
      }
    }
  }
  return toks;
}

}  // namespace

CayleyTable parse_table(const std::string& text, const std::string& name) {
  const auto toks = tokenize(text, name);
  if (toks.empty()) fail(name, 1, "empty input, expected table order");
  const int n = toks[0].value;
  if (n < 1) fail(name, toks[0].line, "table order must be >= 1, got " + std::to_string(n));
  const size_t need = 1 + static_cast<size_t>(n) * static_cast<size_t>(n);
  if (toks.size() < need)
    fail(name, toks.back().line,
         "expected " + std::to_string(need - 1) + " entries for order " +
             std::to_string(n) + ", got " + std::to_string(toks.size() - 1));
  if (toks.size() > need)
    fail(name, toks[need].line,
         "trailing content after " + std::to_string(need - 1) + " entries");
  std::vector<int> entries;
  entries.reserve(need - 1);
  for (size_t i = 1; i < need; ++i) {
    const auto& t = toks[i];
    if (t.value < 1 || t.value > n)
      fail(name, t.line,
           "entry " + std::to_string(t.value) + " out of range 1.." + std::to_string(n));
    entries.push_back(t.value);
  }
  return CayleyTable(n, std::move(entries), name);
}

CayleyTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw table_parse_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), path);
}

std::string serialize(const CayleyTable& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (int x = 1; x <= t.order(); ++x) {
    for (int y = 1; y <= t.order(); ++y) {
      if (y > 1) out << ' ';
      out << t.at(x, y);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hiso
