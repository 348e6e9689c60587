#pragma once

#include <string>
#include <vector>

namespace fungal {

enum class GateKind { Nand, And, Or, Not };

struct Gate {
  std::string id;
  GateKind kind;
  std::vector<std::string> args;  // input or earlier-gate names; 1 for NOT
};

// A single-output Boolean circuit in the text form
//   in x1 x2 ... xn
//   g1 = NAND(x1, x2)
//   ...
//   out gK
// Gates are listed in topological order: every argument names an input or a
// gate defined on an earlier line.
struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::string output;
};

Circuit parse_netlist(const std::string& text);

// The same circuit with every gate a two-input NAND: NOT(a) becomes
// NAND(a,a), AND costs two gates, OR three. Fresh gate ids never collide
// with existing names.
Circuit lower_to_nand(const Circuit& c);

bool eval_circuit(const Circuit& c, const std::vector<bool>& bits);

std::string format_netlist(const Circuit& c);

}  // namespace fungal
