#include "arthurlab/dot.hpp"

#include <string>

#include "arthurlab/dsl.hpp"
#include "arthurlab/operators.hpp"

namespace arthurlab {

namespace {

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string poset_dot(const std::vector<LocalArthurParameter>& list,
                      OrderKind kind) {
  std::string out = "digraph poset {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  out += "  label=\"order " + std::string(order_kind_name(kind)) + "\";\n";
  for (size_t k = 0; k < list.size(); ++k) {
    out += "  n" + std::to_string(k) + " [label=\"" +
           escaped(print_parameter(list[k])) + "\"];\n";
  }
  for (auto [lower, upper] : poset_edges(list, kind)) {
    std::string attrs;
    if (kind == OrderKind::O) {
      LocalArthurParameter target = list[upper];
      target.canonicalize();
      for (const auto& move : enumerate_raising(list[lower])) {
        if (move.result == target) {
          attrs = " [label=\"" +
                  escaped(std::string(operator_kind_name(move.op.kind))) + "\"]";
          break;
        }
      }
    }
    out += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper) +
           attrs + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace arthurlab
