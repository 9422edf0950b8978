/*
 * Copyright (C) 2026 The flipcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "flipcheck/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <fstream>
#include <sstream>

#include "flipcheck/field.hpp"
#include "flipcheck/rng.hpp"

namespace flipcheck {

std::string_view regime_name(Regime r) { return r == Regime::Size ? "size" : "bitsize"; }

Regime parse_regime(std::string_view text) {
  if (text == "size") return Regime::Size;
  if (text == "bitsize") return Regime::BitSize;
  throw ConfigError("regime must be 'size' or 'bitsize', got '" + std::string(text) + "'");
}

Circuit::Circuit(std::size_t num_inputs, std::vector<Node> nodes, std::size_t output)
    : num_inputs_(num_inputs), nodes_(std::move(nodes)), output_(output) {
  if (nodes_.empty()) throw ConfigError("circuit has no nodes");
  if (output_ >= nodes_.size()) throw ConfigError("output references a missing node");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.op == Op::Input && n.a >= num_inputs_) {
      throw ConfigError("node " + std::to_string(i) + " reads variable " + std::to_string(n.a) +
                        " but the circuit has " + std::to_string(num_inputs_) + " inputs");
    }
    if (!n.is_leaf() && (n.a >= i || n.b >= i)) {
      throw DagViolation(0, "node " + std::to_string(i) + " references a later node");
    }
  }
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Parses `g<digits>`; returns false on anything else.
bool parse_gate_id(const std::string& tok, std::uint64_t& id) {
  if (tok.size() < 2 || tok[0] != 'g') return false;
  id = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    if (id > (UINT64_MAX - 9) / 10) return false;
    id = id * 10 + static_cast<std::uint64_t>(tok[i] - '0');
  }
  return true;
}

bool parse_count(const std::string& tok, std::uint64_t& out) {
  if (tok.empty() || tok.size() > 18) return false;
  out = 0;
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    out = out * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return true;
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  std::optional<std::uint64_t> ninputs;
  std::optional<std::uint32_t> output;
  std::map<std::uint64_t, std::uint32_t> index_of;  // gate id -> dense index
  std::optional<std::uint64_t> last_id;
  std::vector<Node> nodes;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto toks = split_ws(line);

    if (toks[0] == "ninputs") {
      std::uint64_t n = 0;
      if (toks.size() != 2 || !parse_count(toks[1], n)) throw ParseError(line_no, "expected `ninputs <n>`");
      if (ninputs) throw ParseError(line_no, "duplicate ninputs");
      if (!nodes.empty()) throw ParseError(line_no, "ninputs must precede all gates");
      ninputs = n;
    } else if (toks[0] == "output") {
      std::uint64_t id = 0;
      if (toks.size() != 2 || !parse_gate_id(toks[1], id)) throw ParseError(line_no, "expected `output g<i>`");
      if (output) throw ParseError(line_no, "duplicate output");
      auto it = index_of.find(id);
      if (it == index_of.end()) throw DagViolation(line_no, "output references undefined gate " + toks[1]);
      output = it->second;
    } else {
      std::uint64_t id = 0;
      if (!parse_gate_id(toks[0], id)) throw ParseError(line_no, "unrecognized line '" + line + "'");
      if (!ninputs) throw ParseError(line_no, "gate before `ninputs`");
      if (output) throw ParseError(line_no, "gate after `output`");
      if (toks.size() < 3 || toks[1] != "=") throw ParseError(line_no, "expected `g<i> = <op> ...`");
      if (last_id && id <= *last_id) throw ParseError(line_no, "gate ids must be declared in increasing order");
      const std::string& op = toks[2];
      const std::size_t nargs = toks.size() - 3;
      auto operand = [&](const std::string& tok) -> std::uint32_t {
        std::uint64_t ref = 0;
        if (!parse_gate_id(tok, ref)) throw ParseError(line_no, "expected a gate reference, got '" + tok + "'");
        auto it = index_of.find(ref);
        if (it == index_of.end()) {
          if (ref >= id) throw DagViolation(line_no, "forward reference to " + tok);
          throw ParseError(line_no, "reference to undefined gate " + tok);
        }
        return it->second;
      };
      Node node;
      if (op == "input") {
        if (nargs != 1) throw BadArity(line_no, "`input` takes one variable index");
        std::uint64_t var = 0;
        if (!parse_count(toks[3], var)) throw ParseError(line_no, "bad variable index '" + toks[3] + "'");
        if (var >= *ninputs) throw ParseError(line_no, "variable index " + toks[3] + " >= ninputs");
        node = Node::input(static_cast<std::uint32_t>(var));
      } else if (op == "const") {
        if (nargs != 1) throw BadArity(line_no, "`const` takes one integer");
        try {
          node = Node::constant(parse_bigint(toks[3]));
        } catch (const ConfigError&) {
          throw ParseError(line_no, "bad constant '" + toks[3] + "'");
        }
      } else if (op == "add" || op == "sub" || op == "mul") {
        if (nargs != 2) throw BadArity(line_no, "`" + op + "` takes two operands");
        const auto a = operand(toks[3]);
        const auto b = operand(toks[4]);
        node = op == "add" ? Node::add(a, b) : op == "sub" ? Node::sub(a, b) : Node::mul(a, b);
      } else {
        throw ParseError(line_no, "unknown gate '" + op + "'");
      }
      index_of[id] = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back(std::move(node));
      last_id = id;
    }
    if (end == text.size()) break;
  }
  if (!ninputs) throw ParseError(line_no, "missing `ninputs`");
  if (!output) throw ParseError(line_no, "missing `output`");
  return Circuit(*ninputs, std::move(nodes), *output);
}

Circuit Circuit::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open circuit file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Circuit::serialize() const {
  std::string out = "ninputs " + std::to_string(num_inputs_) + "\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    out += "g" + std::to_string(i) + " = ";
    switch (n.op) {
      case Op::Input: out += "input " + std::to_string(n.a); break;
      case Op::Const: out += "const " + n.value.get_str(); break;
      case Op::Add: out += "add g" + std::to_string(n.a) + " g" + std::to_string(n.b); break;
      case Op::Sub: out += "sub g" + std::to_string(n.a) + " g" + std::to_string(n.b); break;
      case Op::Mul: out += "mul g" + std::to_string(n.a) + " g" + std::to_string(n.b); break;
    }
    out += "\n";
  }
  out += "output g" + std::to_string(output_) + "\n";
  return out;
}

std::size_t Circuit::bitsize() const {
  std::size_t total = nodes_.size();
  for (const Node& n : nodes_) {
    if (n.op == Op::Const) total += bitlength(n.value);
  }
  return total;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

}  // namespace

std::uint64_t Circuit::formal_degree() const {
  std::vector<std::uint64_t> deg(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::Input: deg[i] = 1; break;
      case Op::Const: deg[i] = 0; break;
      case Op::Add:
      case Op::Sub: deg[i] = std::max(deg[n.a], deg[n.b]); break;
      case Op::Mul: deg[i] = sat_add(deg[n.a], deg[n.b]); break;
    }
  }
  return deg[output_];
}

std::vector<std::uint64_t> Circuit::variable_degrees() const {
  std::vector<std::vector<std::uint64_t>> deg(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    auto& d = deg[i];
    d.assign(num_inputs_, 0);
    switch (n.op) {
      case Op::Input: d[n.a] = 1; break;
      case Op::Const: break;
      case Op::Add:
      case Op::Sub:
        for (std::size_t v = 0; v < num_inputs_; ++v) d[v] = std::max(deg[n.a][v], deg[n.b][v]);
        break;
      case Op::Mul:
        for (std::size_t v = 0; v < num_inputs_; ++v) d[v] = sat_add(deg[n.a][v], deg[n.b][v]);
        break;
    }
  }
  return deg[output_];
}

std::uint32_t CircuitBuilder::input(std::uint32_t var) {
  if (auto it = inputs_.find(var); it != inputs_.end()) return it->second;
  const auto idx = push(Node::input(var));
  inputs_[var] = idx;
  return idx;
}

std::uint32_t CircuitBuilder::constant(const BigInt& v) { return push(Node::constant(v)); }

std::uint32_t CircuitBuilder::push(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

BigInt evaluate(const Circuit& c, std::span<const BigInt> point) {
  return evaluate<IntegerRing>(c, point, IntegerRing{});
}

std::uint64_t evaluate_mod(const Circuit& c, std::span<const BigInt> point, std::uint64_t p) {
  const PrimeField fp(p);
  std::vector<std::uint64_t> reduced;
  reduced.reserve(point.size());
  for (const auto& x : point) reduced.push_back(fp.from_bigint(x));
  return evaluate<PrimeField>(c, reduced, fp);
}

std::uint64_t random_prime(std::size_t bits, std::uint64_t seed) {
  if (bits < 16 || bits > 62) throw ConfigError("prime bit length must be in [16, 62]");
  Rng rng(seed);
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  for (;;) {
    const std::uint64_t candidate = (lo + rng.below(lo)) | 1;
    if (is_prime_u64(candidate)) return candidate;
  }
}

ModularEvaluation evaluate_mod_random_prime(const Circuit& c, std::span<const BigInt> point,
                                            std::size_t prime_bits, std::uint64_t rng_seed) {
  if (point.size() != c.num_inputs()) throw ArityMismatch("point has wrong number of coordinates");
  const std::uint64_t p = random_prime(prime_bits, rng_seed);
  return {evaluate_mod(c, point, p), p};
}

Circuit specialize(const Circuit& c, const std::map<std::size_t, BigInt>& bindings) {
  for (const auto& [idx, v] : bindings) {
    if (idx >= c.num_inputs()) {
      throw IndexOutOfRange("binding for input " + std::to_string(idx) + " but circuit has " +
                            std::to_string(c.num_inputs()) + " inputs");
    }
  }
  std::vector<std::uint32_t> renumber(c.num_inputs(), 0);
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < c.num_inputs(); ++v) {
    if (!bindings.count(v)) renumber[v] = next++;
  }
  std::vector<Node> nodes = c.nodes();
  for (Node& n : nodes) {
    if (n.op != Op::Input) continue;
    if (auto it = bindings.find(n.a); it != bindings.end()) {
      n = Node::constant(it->second);
    } else {
      n.a = renumber[n.a];
    }
  }
  return Circuit(next, std::move(nodes), c.output());
}

Circuit embed_lower_right(const Circuit& c, std::size_t n, std::size_t i) {
  if (c.num_inputs() != n * n) throw ArityMismatch("expected an n x n permanent circuit");
  if (i < 1 || i > n) throw IndexOutOfRange("block size must be in [1, n]");
  const std::size_t off = n - i;
  std::map<std::size_t, BigInt> bindings;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      if (r >= off && col >= off) continue;
      bindings[r * n + col] = (r == col) ? 1 : 0;
    }
  }
  return specialize(c, bindings);
}

SparsePoly expand_to_polynomial(const Circuit& c, std::size_t max_terms) {
  const std::size_t nv = c.num_inputs();
  std::vector<SparsePoly> polys;
  polys.reserve(c.size());
  auto check = [&](const SparsePoly& p) {
    if (p.num_terms() > max_terms) {
      throw TermBudgetExceeded("expansion exceeds " + std::to_string(max_terms) + " terms");
    }
  };
  for (const Node& n : c.nodes()) {
    switch (n.op) {
      case Op::Input: polys.push_back(SparsePoly::variable(nv, n.a)); break;
      case Op::Const: polys.push_back(SparsePoly::constant(nv, n.value)); break;
      case Op::Add: polys.push_back(polys[n.a] + polys[n.b]); break;
      case Op::Sub: polys.push_back(polys[n.a] - polys[n.b]); break;
      case Op::Mul: polys.push_back(polys[n.a].multiply(polys[n.b], max_terms)); break;
    }
    check(polys.back());
  }
  return polys[c.output()];
}

}  // namespace flipcheck
