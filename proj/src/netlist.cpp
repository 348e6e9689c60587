#include "fungal/netlist.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fungal/errors.hpp"

namespace fungal {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      return false;
  return s != "in" && s != "out";
}

GateKind parse_kind(const std::string& s) {
  if (s == "NAND") return GateKind::Nand;
  if (s == "AND") return GateKind::And;
  if (s == "OR") return GateKind::Or;
  if (s == "NOT") return GateKind::Not;
  throw UnknownGateKind(s);
}

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::Nand: return "NAND";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Not: return "NOT";
  }
  return "?";
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Circuit parse_netlist(const std::string& text) {
  Circuit c;
  std::unordered_set<std::string> input_names;
  std::unordered_set<std::string> gate_ids;

  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto hash = raw.find('#'); hash != std::string::npos)
        raw.erase(hash);
      raw = trim(raw);
      if (!raw.empty()) lines.emplace_back(no, raw);
    }
  }

  bool saw_in = false;
  bool saw_out = false;
  for (const auto& [no, line] : lines) {
    auto tokens = split_ws(line);
    if (tokens.front() == "in") {
      if (saw_in)
        throw NetlistError("line " + std::to_string(no) +
                           ": duplicate input declaration");
      if (!c.gates.empty() || saw_out)
        throw NetlistError("line " + std::to_string(no) +
                           ": input declaration must come first");
      saw_in = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& name = tokens[i];
        if (!valid_name(name))
          throw NetlistError("line " + std::to_string(no) + ": '" + name +
                             "' is not a valid input name");
        if (!input_names.insert(name).second)
          throw NetlistError("line " + std::to_string(no) +
                             ": duplicate input '" + name + "'");
        c.inputs.push_back(name);
      }
      continue;
    }
    if (tokens.front() == "out") {
      if (saw_out)
        throw MultipleOutputs();
      if (tokens.size() != 2)
        throw NetlistError("line " + std::to_string(no) +
                           ": expected 'out <gate>'");
      saw_out = true;
      c.output = tokens[1];
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw NetlistError("line " + std::to_string(no) +
                         ": expected 'id = KIND(a, b)'");
    if (!saw_in)
      throw NetlistError("line " + std::to_string(no) +
                         ": netlist must start with an input declaration");
    std::string id = trim(line.substr(0, eq));
    if (!valid_name(id))
      throw NetlistError("line " + std::to_string(no) + ": '" + id +
                         "' is not a valid gate id");
    if (input_names.count(id))
      throw NetlistError("line " + std::to_string(no) + ": '" + id +
                         "' is already an input name");
    if (gate_ids.count(id))
      throw NetlistError("line " + std::to_string(no) + ": gate '" + id +
                         "' redefined");

    std::string rhs = trim(line.substr(eq + 1));
    auto open = rhs.find('(');
    auto close = rhs.rfind(')');
    if (open == std::string::npos || close == std::string::npos ||
        close < open || trim(rhs.substr(close + 1)) != "")
      throw NetlistError("line " + std::to_string(no) +
                         ": expected 'id = KIND(a, b)'");
    GateKind kind = parse_kind(trim(rhs.substr(0, open)));

    std::vector<std::string> args;
    std::string inner = rhs.substr(open + 1, close - open - 1);
    std::istringstream argstream(inner);
    std::string piece;
    while (std::getline(argstream, piece, ',')) args.push_back(trim(piece));
    if (args.size() == 1 && args[0].empty()) args.clear();

    if (args.size() > 2)
      throw FanInExceeded(id);
    std::size_t want = kind == GateKind::Not ? 1 : 2;
    if (args.size() != want)
      throw NetlistError("line " + std::to_string(no) + ": " +
                         kind_name(kind) + " takes " + std::to_string(want) +
                         (want == 1 ? " argument" : " arguments"));
    for (const std::string& a : args) {
      if (input_names.count(a) || gate_ids.count(a)) continue;
      throw ForwardReference(a);
    }

    gate_ids.insert(id);
    c.gates.push_back(Gate{std::move(id), kind, std::move(args)});
  }

  if (!saw_in) throw NetlistError("missing input declaration");
  if (!saw_out) throw NetlistError("missing output declaration");
  if (c.gates.empty()) throw NetlistError("a netlist needs at least one gate");
  if (!gate_ids.count(c.output)) {
    if (input_names.count(c.output))
      throw NetlistError("output '" + c.output + "' must be a gate");
    throw NetlistError("output gate '" + c.output + "' is not defined");
  }
  return c;
}

Circuit lower_to_nand(const Circuit& c) {
  std::unordered_set<std::string> used(c.inputs.begin(), c.inputs.end());
  for (const Gate& g : c.gates) used.insert(g.id);

  int counter = 0;
  auto fresh = [&] {
    std::string name;
    do {
      name = "t" + std::to_string(++counter);
    } while (used.count(name));
    used.insert(name);
    return name;
  };
  auto nand = [](std::string id, std::string a, std::string b) {
    return Gate{std::move(id), GateKind::Nand, {std::move(a), std::move(b)}};
  };

  Circuit out;
  out.inputs = c.inputs;
  out.output = c.output;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Nand:
        out.gates.push_back(g);
        break;
      case GateKind::Not:
        out.gates.push_back(nand(g.id, g.args[0], g.args[0]));
        break;
      case GateKind::And: {
        std::string t = fresh();
        out.gates.push_back(nand(t, g.args[0], g.args[1]));
        out.gates.push_back(nand(g.id, t, t));
        break;
      }
      case GateKind::Or: {
        std::string ta = fresh();
        std::string tb = fresh();
        out.gates.push_back(nand(ta, g.args[0], g.args[0]));
        out.gates.push_back(nand(tb, g.args[1], g.args[1]));
        out.gates.push_back(nand(g.id, ta, tb));
        break;
      }
    }
  }
  return out;
}

bool eval_circuit(const Circuit& c, const std::vector<bool>& bits) {
  if (bits.size() != c.inputs.size())
    throw ArityMismatch("circuit has " + std::to_string(c.inputs.size()) +
                        " inputs but " + std::to_string(bits.size()) +
                        " bits were given");
  std::unordered_map<std::string, bool> value;
  for (std::size_t i = 0; i < c.inputs.size(); ++i)
    value.emplace(c.inputs[i], bits[i]);
  auto get = [&value](const std::string& name) {
    auto it = value.find(name);
    if (it == value.end())
      throw Error("circuit references undefined name '" + name + "'");
    return it->second;
  };
  for (const Gate& g : c.gates) {
    bool r = false;
    switch (g.kind) {
      case GateKind::Nand: r = !(get(g.args[0]) && get(g.args[1])); break;
      case GateKind::And: r = get(g.args[0]) && get(g.args[1]); break;
      case GateKind::Or: r = get(g.args[0]) || get(g.args[1]); break;
      case GateKind::Not: r = !get(g.args[0]); break;
    }
    value[g.id] = r;
  }
  return get(c.output);
}

std::string format_netlist(const Circuit& c) {
  std::ostringstream out;
  out << "in";
  for (const std::string& name : c.inputs) out << ' ' << name;
  out << '\n';
  for (const Gate& g : c.gates) {
    out << g.id << " = " << kind_name(g.kind) << '(';
    for (std::size_t i = 0; i < g.args.size(); ++i) {
      if (i) out << ", ";
      out << g.args[i];
    }
    out << ")\n";
  }
  out << "out " << c.output << '\n';
  return out.str();
}

}  // namespace fungal
