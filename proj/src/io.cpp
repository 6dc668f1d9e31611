#include "tng/io.hpp"

#include <cctype>
#include <sstream>

namespace tng {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

[[noreturn]] void fail_at(int line, int col, const std::string& what) {
  throw input_error("parse error at line " + std::to_string(line) + ", col " +
                    std::to_string(col) + ": " + what);
}

bool is_header(const std::string& s, int& k, int& n) {
  std::istringstream is(s);
  if (!(is >> k >> n)) return false;
  std::string rest;
  if (is >> rest) return false;
  return true;
}

}  // namespace

LeDiagram parse_le_diagram(const std::string& text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw input_error("parse error at line 1, col 1: empty input");
  LeDiagram d;
  size_t first = 0;
  int hk, hn;
  if (is_header(lines[0], hk, hn)) {
    d.k = hk;
    d.n = hn;
    first = 1;
  } else {
    d.k = (int)lines.size();
    d.n = d.k + (int)lines[0].size();
  }
  for (size_t li = first; li < lines.size(); ++li) {
    const std::string& s = lines[li];
    std::vector<char> row;
    for (size_t c = 0; c < s.size(); ++c) {
      if (s[c] == 'D')
        row.push_back(1);
      else if (s[c] == '.')
        row.push_back(0);
      else
        fail_at((int)li + 1, (int)c + 1,
                std::string("expected 'D' or '.', got '") + s[c] + "'");
    }
    d.rows.push_back((int)row.size());
    d.dot.push_back(std::move(row));
  }
  while ((int)d.rows.size() < d.k) {
    d.rows.push_back(0);
    d.dot.push_back({});
  }
  validate_le(d);
  return d;
}

std::string render_le_diagram(const LeDiagram& d) {
  std::ostringstream os;
  os << d.k << ' ' << d.n << '\n';
  for (int x = 1; x <= d.k; ++x) {
    for (int y = 1; y <= d.rows[x - 1]; ++y) os << (d.has_dot(x, y) ? 'D' : '.');
    os << '\n';
  }
  return os.str();
}

DecoratedPermutation parse_decperm(const std::string& text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw input_error("parse error at line 1, col 1: empty input");
  DecoratedPermutation dp;
  {
    std::istringstream is(lines[0]);
    int v;
    while (is >> v) dp.pi.push_back(v);
    if (dp.pi.empty()) fail_at(1, 1, "expected permutation values");
  }
  int n = (int)dp.pi.size();
  Subset check = sorted(dp.pi);
  for (int i = 1; i <= n; ++i)
    if (check[i - 1] != i) fail_at(1, 1, "not a permutation of [n]");
  std::map<int, int> given;
  if (lines.size() > 1) {
    const std::string& s = lines[1];
    size_t p = s.find("col:");
    if (p == std::string::npos) fail_at(2, 1, "expected 'col:' clause");
    size_t lb = s.find('{', p), rb = s.find('}', p);
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
      fail_at(2, (int)p + 1, "expected '{...}' after col:");
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t colon = tok.find(':');
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      if (colon == std::string::npos) fail_at(2, (int)lb + 1, "expected i:c pairs");
      int i = std::stoi(tok.substr(0, colon));
      int c = std::stoi(tok.substr(colon + 1));
      if (c != 1 && c != -1) fail_at(2, (int)lb + 1, "color must be 1 or -1");
      given[i] = c;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (dp.pi[i - 1] == i) {
      auto it = given.find(i);
      if (it == given.end())
        throw input_error("parse error at line 2, col 1: missing color for fixed point " +
                          std::to_string(i));
      dp.col[i] = it->second;
      given.erase(it);
    }
  }
  if (!given.empty())
    throw input_error("parse error at line 2, col 1: color given for non-fixed point " +
                      std::to_string(given.begin()->first));
  return dp;
}

std::string render_decperm(const DecoratedPermutation& dp) {
  std::ostringstream os;
  os << perm_str(dp.pi) << '\n' << "col: {";
  bool fst = true;
  for (const auto& [i, c] : dp.col) {
    if (!fst) os << ", ";
    os << i << ':' << c;
    fst = false;
  }
  os << "}\n";
  return os.str();
}

GrassmannNecklace parse_necklace(const std::string& text) {
  GrassmannNecklace neck;
  size_t p = 0;
  int col = 1;
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace((unsigned char)text[p])) ++p;
  };
  skip_ws();
  while (p < text.size()) {
    if (text[p] != '{') fail_at(1, (int)p + 1, "expected '{'");
    ++p;
    Subset s;
    skip_ws();
    while (p < text.size() && text[p] != '}') {
      size_t q = p;
      while (q < text.size() && std::isdigit((unsigned char)text[q])) ++q;
      if (q == p) fail_at(1, (int)p + 1, "expected digit");
      s.push_back(std::stoi(text.substr(p, q - p)));
      p = q;
      skip_ws();
      if (p < text.size() && text[p] == ',') {
        ++p;
        skip_ws();
      }
    }
    if (p >= text.size()) fail_at(1, (int)p, "unterminated '{'");
    ++p;
    neck.I.push_back(sorted(s));
    skip_ws();
  }
  (void)col;
  if (neck.I.empty()) fail_at(1, 1, "empty necklace");
  neck.n = (int)neck.I.size();
  neck.k = (int)neck.I[0].size();
  validate_necklace(neck);
  return neck;
}

std::string render_necklace(const GrassmannNecklace& neck) {
  std::ostringstream os;
  for (size_t i = 0; i < neck.I.size(); ++i) {
    if (i) os << ' ';
    os << subset_str(neck.I[i]);
  }
  return os.str();
}

json le_diagram_to_json(const LeDiagram& d) {
  json rows = json::array();
  for (int x = 1; x <= d.k; ++x) {
    json r = json::array();
    for (int y = 1; y <= d.rows[x - 1]; ++y) r.push_back(d.has_dot(x, y) ? 1 : 0);
    rows.push_back(r);
  }
  return json{{"type", "le-diagram"}, {"k", d.k}, {"n", d.n}, {"dots", rows}};
}

LeDiagram le_diagram_from_json(const json& j) {
  LeDiagram d;
  d.k = j.at("k").get<int>();
  d.n = j.at("n").get<int>();
  for (const auto& r : j.at("dots")) {
    std::vector<char> row;
    for (const auto& v : r) row.push_back(v.get<int>() ? 1 : 0);
    d.rows.push_back((int)row.size());
    d.dot.push_back(std::move(row));
  }
  while ((int)d.rows.size() < d.k) {
    d.rows.push_back(0);
    d.dot.push_back({});
  }
  validate_le(d);
  return d;
}

json decperm_to_json(const DecoratedPermutation& dp) {
  json col = json::object();
  for (const auto& [i, c] : dp.col) col[std::to_string(i)] = c;
  return json{{"type", "decperm"}, {"pi", dp.pi}, {"col", col}};
}

DecoratedPermutation decperm_from_json(const json& j) {
  DecoratedPermutation dp;
  dp.pi = j.at("pi").get<std::vector<int>>();
  for (const auto& [key, v] : j.at("col").items())
    dp.col[std::stoi(key)] = v.get<int>();
  return dp;
}

json necklace_to_json(const GrassmannNecklace& neck) {
  return json{{"type", "necklace"}, {"n", neck.n}, {"k", neck.k}, {"I", neck.I}};
}

GrassmannNecklace necklace_from_json(const json& j) {
  GrassmannNecklace neck;
  neck.n = j.at("n").get<int>();
  neck.k = j.at("k").get<int>();
  for (const auto& s : j.at("I")) neck.I.push_back(sorted(s.get<Subset>()));
  validate_necklace(neck);
  return neck;
}

json plucker_to_json(const PluckerIndex& idx) {
  return json{{"X", idx.X}, {"Y", idx.Y}};
}

PluckerIndex plucker_from_json(const json& j) {
  return PluckerIndex{sorted(j.at("X").get<Subset>()),
                      sorted(j.at("Y").get<Subset>())};
}

}  // namespace tng
