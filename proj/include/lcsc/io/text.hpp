#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "lcsc/io/doc.hpp"

namespace lcsc {

//! Canonical serialization of a category description. Documents produced by
//! the fixture generators round-trip byte-identically through parse_doc.
inline std::string serialize_doc(CategoryDoc const& d) {
  std::ostringstream os;
  os << "# lcsc fixture\n";
  os << "[category]\n";
  os << "name = " << d.name << "\n";
  if (d.horizon) os << "horizon = " << *d.horizon << "\n";
  os << "monoid = " << d.monoid << "\n";
  os << "[objects]\n";
  for (auto const& o : d.objects) os << o << "\n";
  if (!d.generators.empty()) {
    os << "[generators]\n";
    for (auto const& g : d.generators)
      os << g.name << " : " << g.src << " -> " << g.rng << " : " << g.length << "\n";
  }
  if (!d.relations.empty()) {
    os << "[relations]\n";
    for (auto const& [l, r] : d.relations) os << l << " = " << r << "\n";
  }
  if (!d.morphisms.empty()) {
    os << "[morphisms]\n";
    for (auto const& m : d.morphisms)
      os << m.name << " : " << m.src << " -> " << m.rng << " : " << m.length << "\n";
    os << "[compose]\n";
    for (auto const& e : d.compose) os << e.a << " " << e.b << " = " << e.c << "\n";
  }
  if (d.with_groupoid) {
    os << "[groupoid]\n";
    for (auto const& m : d.g_morphisms)
      os << m.name << " : " << m.src << " -> " << m.rng << "\n";
    if (!d.g_compose.empty()) {
      os << "[g-compose]\n";
      for (auto const& e : d.g_compose) os << e.a << " " << e.b << " = " << e.c << "\n";
    }
    if (!d.action.empty() || !d.cocycle.empty()) {
      os << "[action]\n";
      for (auto const& a : d.action)
        os << "act " << a.g << " " << a.x << " = " << a.value << "\n";
      for (auto const& a : d.cocycle)
        os << "coc " << a.g << " " << a.x << " = " << a.value << "\n";
    }
  }
  return os.str();
}

namespace detail {

inline std::string trim(std::string s) {
  auto issp = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

inline std::vector<std::string> tokens(std::string const& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

[[noreturn]] inline void parse_fail(int line, std::string const& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace detail

//! Parse the line-oriented `.lcsc` description format.
inline CategoryDoc parse_doc(std::string const& text) {
  CategoryDoc d;
  d.monoid = "N";
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') detail::parse_fail(lineno, "malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section == "groupoid") d.with_groupoid = true;
      continue;
    }
    if (section == "category") {
      auto eq = line.find('=');
      if (eq == std::string::npos) detail::parse_fail(lineno, "expected key = value");
      std::string key = detail::trim(line.substr(0, eq));
      std::string val = detail::trim(line.substr(eq + 1));
      if (key == "name") d.name = val;
      else if (key == "horizon") d.horizon = std::stol(val);
      else if (key == "monoid") d.monoid = val;
      else detail::parse_fail(lineno, "unknown key '" + key + "'");
    } else if (section == "objects") {
      auto ts = detail::tokens(line);
      if (ts.size() != 1) detail::parse_fail(lineno, "expected one object name");
      d.objects.push_back(ts[0]);
    } else if (section == "generators" || section == "morphisms") {
      // name : src -> rng : length
      auto ts = detail::tokens(line);
      if (ts.size() != 7 || ts[1] != ":" || ts[3] != "->" || ts[5] != ":")
        detail::parse_fail(lineno, "expected 'name : src -> rng : length'");
      CategoryDoc::GenLine g{ts[0], ts[2], ts[4], ts[6]};
      (section == "generators" ? d.generators : d.morphisms).push_back(g);
    } else if (section == "relations") {
      auto eq = line.find('=');
      if (eq == std::string::npos) detail::parse_fail(lineno, "expected word = word");
      d.relations.push_back({detail::trim(line.substr(0, eq)),
                             detail::trim(line.substr(eq + 1))});
    } else if (section == "compose" || section == "g-compose") {
      auto ts = detail::tokens(line);
      if (ts.size() != 4 || ts[2] != "=")
        detail::parse_fail(lineno, "expected 'a b = c'");
      CategoryDoc::CompLine e{ts[0], ts[1], ts[3]};
      (section == "compose" ? d.compose : d.g_compose).push_back(e);
    } else if (section == "groupoid") {
      auto ts = detail::tokens(line);
      if (ts.size() != 5 || ts[1] != ":" || ts[3] != "->")
        detail::parse_fail(lineno, "expected 'name : src -> rng'");
      d.g_morphisms.push_back({ts[0], ts[2], ts[4], ""});
    } else if (section == "action") {
      auto ts = detail::tokens(line);
      if (ts.size() != 5 || ts[4].empty() || ts[3] != "=")
        detail::parse_fail(lineno, "expected 'act|coc g x = value'");
      CategoryDoc::ActLine a{ts[1], ts[2], ts[4]};
      if (ts[0] == "act") d.action.push_back(a);
      else if (ts[0] == "coc") d.cocycle.push_back(a);
      else detail::parse_fail(lineno, "expected 'act' or 'coc'");
    } else {
      detail::parse_fail(lineno, section.empty() ? "content before any section"
                                                 : "unknown section '" + section + "'");
    }
  }
  if (d.objects.empty()) throw ParseError("document declares no objects");
  return d;
}

inline CategoryDoc load_doc(std::string const& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_doc(ss.str());
}

//! Load and compile a description file into a validated bundle.
inline Bundle load(std::string const& path) { return compile(load_doc(path)); }

inline void save_doc(CategoryDoc const& d, std::string const& path) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << serialize_doc(d);
}

}  // namespace lcsc
