#include "ga3ph/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "ga3ph/errors.hpp"

namespace ga3ph {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool parse_number(const std::string& tok, double& out) {
  std::size_t pos = 0;
  try {
    out = std::stod(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

Netlist parse_netlist(const std::string& text) {
  Netlist nl;
  bool have_inputs = false, have_outputs = false, have_ground = false;
  std::unordered_set<std::string> names;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;

    if (toks[0][0] == '.') {
      const std::string directive = lower(toks[0]);
      if (directive == ".inputs") {
        if (toks.size() != 4)
          throw ParseError(".inputs expects exactly 3 labels at line " +
                               std::to_string(lineno),
                           lineno);
        nl.inputs = {lower(toks[1]), lower(toks[2]), lower(toks[3])};
        have_inputs = true;
      } else if (directive == ".outputs") {
        if (toks.size() != 4)
          throw ParseError(".outputs expects exactly 3 node ids at line " +
                               std::to_string(lineno),
                           lineno);
        nl.outputs = {lower(toks[1]), lower(toks[2]), lower(toks[3])};
        have_outputs = true;
      } else if (directive == ".ground") {
        if (toks.size() != 2)
          throw ParseError(".ground expects one node id at line " +
                               std::to_string(lineno),
                           lineno);
        nl.ground = lower(toks[1]);
        have_ground = true;
      } else {
        throw ParseError("unknown directive '" + toks[0] + "' at line " +
                             std::to_string(lineno),
                         lineno);
      }
      continue;
    }

    if (toks.size() != 4)
      throw ParseError("element line expects 4 fields at line " +
                           std::to_string(lineno),
                       lineno);
    Element el;
    el.name = toks[0];
    const char k = static_cast<char>(std::toupper(static_cast<unsigned char>(toks[0][0])));
    switch (k) {
      case 'R': el.kind = Element::Kind::R; break;
      case 'L': el.kind = Element::Kind::L; break;
      case 'C': el.kind = Element::Kind::C; break;
      case 'V': el.kind = Element::Kind::V; break;
      default:
        throw ParseError(std::string("unknown element kind '") + toks[0][0] +
                             "' at line " + std::to_string(lineno),
                         lineno);
    }
    if (!names.insert(lower(el.name)).second)
      throw ParseError("duplicate element name '" + el.name + "' at line " +
                           std::to_string(lineno),
                       lineno);
    el.node_plus = lower(toks[1]);
    el.node_minus = lower(toks[2]);

    double v = 0.0;
    if (parse_number(toks[3], v)) {
      el.value = v;
      if (el.kind != Element::Kind::V && !(v > 0.0))
        throw ParseError("element value must be positive at line " +
                             std::to_string(lineno),
                         lineno);
    } else if (el.kind == Element::Kind::V) {
      el.source_label = lower(toks[3]);
    } else {
      throw ParseError("bad numeric value '" + toks[3] + "' at line " +
                           std::to_string(lineno),
                       lineno);
    }
    nl.elements.push_back(std::move(el));
  }

  if (!have_inputs)
    throw ParseError("missing .inputs directive", lineno);
  if (!have_outputs)
    throw ParseError("missing .outputs directive", lineno);
  (void)have_ground;  // ground defaults to node "0"

  // every labeled source must be declared
  for (const auto& el : nl.elements) {
    if (el.kind == Element::Kind::V && !el.source_label.empty()) {
      if (std::find(nl.inputs.begin(), nl.inputs.end(), el.source_label) ==
          nl.inputs.end())
        throw ParseError("source label '" + el.source_label +
                             "' not declared in .inputs",
                         lineno);
    }
  }
  return nl;
}

}  // namespace ga3ph
