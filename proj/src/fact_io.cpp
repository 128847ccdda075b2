#include "ontofit/fact_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "ontofit/errors.hpp"

namespace ontofit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

PointedInstance parse_pointed_instance(std::string_view text) {
  PointedInstance out;
  std::unordered_map<std::string, int> arity;
  bool have_point = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '@') {
      if (line.substr(0, 6) != "@point") throw ParseError("unknown directive", line_no);
      if (have_point) throw ParseError("duplicate @point header", line_no);
      have_point = true;
      std::string_view rest = trim(line.substr(6));
      if (!rest.empty()) {
        for (auto tok : split_commas(rest)) {
          if (!is_identifier(tok)) throw ParseError("bad point value '" + std::string(tok) + "'", line_no);
          out.point.push_back(Value::atom(tok));
        }
      }
      continue;
    }
    const auto open = line.find('(');
    if (open == std::string_view::npos || line.size() < 2 || line.back() != '.') {
      throw ParseError("expected a fact of the form R(a,b).", line_no);
    }
    std::string_view body = trim(line.substr(0, line.size() - 1));
    if (body.back() != ')') throw ParseError("missing ')'", line_no);
    std::string_view name = trim(body.substr(0, open));
    if (!is_identifier(name)) throw ParseError("bad relation name '" + std::string(name) + "'", line_no);
    std::string_view inner = body.substr(open + 1, body.size() - open - 2);
    if (inner.find('(') != std::string_view::npos || inner.find(')') != std::string_view::npos) {
      throw ParseError("nested parentheses", line_no);
    }
    auto args = split_commas(inner);
    for (auto a : args) {
      if (!is_identifier(a)) throw ParseError("bad value '" + std::string(a) + "'", line_no);
    }
    const int k = static_cast<int>(args.size());
    auto [it, inserted] = arity.emplace(std::string(name), k);
    if (!inserted && it->second != k) {
      throw ParseError("relation " + std::string(name) + " used with arities " + std::to_string(it->second) +
                           " and " + std::to_string(k),
                       line_no);
    }
    Fact f{intern_symbol(name, k), {}};
    for (auto a : args) f.args.push_back(Value::atom(a));
    out.instance.add(f);
  }
  return out;
}

Instance parse_instance(std::string_view text) { return parse_pointed_instance(text).instance; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PointedInstance read_pointed_instance(const std::string& path) {
  return parse_pointed_instance(read_text_file(path));
}

Instance read_instance(const std::string& path) { return read_pointed_instance(path).instance; }

std::string format_instance(const Instance& instance) {
  std::string out;
  for (const Fact& f : instance.facts()) out += f.to_string() + ".\n";
  return out;
}

std::string format_pointed_instance(const PointedInstance& p) {
  std::string out = "@point";
  for (std::size_t i = 0; i < p.point.size(); ++i) out += (i ? ", " : " ") + p.point[i].to_string();
  return out + "\n" + format_instance(p.instance);
}

}  // namespace ontofit
