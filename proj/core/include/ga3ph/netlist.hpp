#pragma once

#include <string>
#include <vector>

namespace ga3ph {

/// One parsed circuit element. Kind is the leading letter of the name:
/// R (ohm), L (henry), C (farad) or V (ideal source). Sources carry either a
/// numeric value or the label of a declared input.
struct Element {
  enum class Kind { R, L, C, V };
  Kind kind;
  std::string name;
  std::string node_plus;
  std::string node_minus;
  double value = 0.0;       // R/L/C value, or fixed source value
  std::string source_label; // nonempty for labeled V elements
};

/// Line-oriented netlist:
///   <Name> <node+> <node-> <value|label>
///   .inputs a b c      (source labels, in column order)
///   .outputs n1 n2 n3  (output node ids, in row order)
///   .ground n0         (optional; defaults to node "0")
/// '#' starts a comment; node ids are case-insensitive; LF or CRLF.
struct Netlist {
  std::vector<Element> elements;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string ground = "0";
};

/// Parse netlist text. Errors (unknown element kind, arity, duplicate names,
/// bad numbers, missing directives) throw ParseError with the line number.
Netlist parse_netlist(const std::string& text);

}  // namespace ga3ph
