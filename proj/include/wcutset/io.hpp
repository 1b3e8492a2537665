#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wcutset/errors.hpp"
#include "wcutset/graph.hpp"
#include "wcutset/smc.hpp"

namespace wcutset {

namespace detail {

// Whitespace tokenizer that remembers which line each token started on, so
// parse errors can point somewhere useful.
class Tokenizer {
public:
  explicit Tokenizer(const std::string& text) : s_(text) {}

  std::optional<std::string> next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= s_.size()) return std::nullopt;
    size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  long long require_int(const std::string& what) {
    auto tok = next();
    if (!tok) throw ParseError(line_, "expected " + what + ", got end of input");
    return to_int(*tok, what);
  }

  long long to_int(const std::string& tok, const std::string& what) const {
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line_, "expected " + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
      throw ParseError(line_, "expected " + what + ", got '" + tok + "'");
    return value;
  }

  int line() const { return line_; }

private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
};

// One content line of a '#'-commented, line-oriented format, already split
// into tokens.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline long long line_int(const Line& l, size_t i, const std::string& what) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(l.tokens[i], &used);
  } catch (const std::exception&) {
    throw ParseError(l.number, "expected " + what + ", got '" + l.tokens[i] + "'");
  }
  if (used != l.tokens[i].size())
    throw ParseError(l.number, "expected " + what + ", got '" + l.tokens[i] + "'");
  return value;
}

inline double line_double(const Line& l, size_t i, const std::string& what) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(l.tokens[i], &used);
  } catch (const std::exception&) {
    throw ParseError(l.number, "expected " + what + ", got '" + l.tokens[i] + "'");
  }
  if (used != l.tokens[i].size())
    throw ParseError(l.number, "expected " + what + ", got '" + l.tokens[i] + "'");
  return value;
}

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // trim to the shortest form that still round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof probe, "%.*g", prec, x);
    if (std::stod(probe) == x) return probe;
  }
  return buf;
}

}  // namespace detail

// Edge-list format:
//   n <count>          header, required first
//   e <u> <v>          undirected edge, 0-based ids below count
//   d <u> <size>       domain size (default 2)
//   c <u> <cost>       cost (default 1)
// '#' starts a comment anywhere on a line.
inline Graph parse_graph(const std::string& text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n' header");

  const auto& head = lines.front();
  if (head.tokens[0] != "n")
    throw ParseError(head.number, "first line must be the 'n' header");
  if (head.tokens.size() != 2)
    throw ParseError(head.number, "'n' takes exactly one value");
  long long count = detail::line_int(head, 1, "node count");
  if (count < 0 || count > 1000000)
    throw ParseError(head.number, "node count out of range");
  Graph g(static_cast<int>(count));

  auto node_at = [&g](const detail::Line& l, size_t i) {
    long long v = detail::line_int(l, i, "node id");
    if (v < 0 || v >= g.universe())
      throw ParseError(l.number, "node id " + std::to_string(v) +
                                     " out of range, count is " +
                                     std::to_string(g.universe()));
    return static_cast<NodeId>(v);
  };

  Bitset has_domain(g.universe());
  Bitset has_cost(g.universe());
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    const std::string& tag = l.tokens[0];
    if (tag == "n") {
      throw ParseError(l.number, "duplicate 'n' header");
    } else if (tag == "e") {
      if (l.tokens.size() != 3) throw ParseError(l.number, "'e' takes two node ids");
      NodeId u = node_at(l, 1);
      NodeId v = node_at(l, 2);
      if (u == v) throw ParseError(l.number, "self-loop on node " + std::to_string(u));
      if (g.has_edge(u, v))
        throw ParseError(l.number, "duplicate edge " + std::to_string(u) + " " +
                                       std::to_string(v));
      g.add_edge(u, v);
    } else if (tag == "d") {
      if (l.tokens.size() != 3) throw ParseError(l.number, "'d' takes a node id and a size");
      NodeId u = node_at(l, 1);
      long long d = detail::line_int(l, 2, "domain size");
      if (d < 1) throw ParseError(l.number, "domain size must be >= 1");
      if (has_domain.test(u))
        throw ParseError(l.number, "duplicate domain for node " + std::to_string(u));
      has_domain.set(u);
      g.set_domain_size(u, static_cast<int>(d));
    } else if (tag == "c") {
      if (l.tokens.size() != 3) throw ParseError(l.number, "'c' takes a node id and a cost");
      NodeId u = node_at(l, 1);
      double c = detail::line_double(l, 2, "cost");
      if (!(c > 0)) throw ParseError(l.number, "cost must be positive");
      if (has_cost.test(u))
        throw ParseError(l.number, "duplicate cost for node " + std::to_string(u));
      has_cost.set(u);
      g.set_cost(u, c);
    } else {
      throw ParseError(l.number, "unknown line tag '" + tag + "'");
    }
  }
  return g;
}

// Writes the present nodes compacted to 0..k-1 (id order preserved), so a
// graph that had nodes removed still round-trips structurally.
inline std::string write_graph(const Graph& g) {
  std::vector<NodeId> nodes = g.node_list();
  std::vector<int> compact(static_cast<size_t>(g.universe()), -1);
  for (size_t i = 0; i < nodes.size(); ++i) compact[static_cast<size_t>(nodes[i])] = static_cast<int>(i);

  std::string out = "n " + std::to_string(nodes.size()) + "\n";
  for (auto [u, v] : g.edge_list())
    out += "e " + std::to_string(compact[static_cast<size_t>(u)]) + " " +
           std::to_string(compact[static_cast<size_t>(v)]) + "\n";
  for (NodeId v : nodes)
    if (g.domain_size(v) != 2)
      out += "d " + std::to_string(compact[static_cast<size_t>(v)]) + " " +
             std::to_string(g.domain_size(v)) + "\n";
  for (NodeId v : nodes)
    if (g.cost(v) != 1.0)
      out += "c " + std::to_string(compact[static_cast<size_t>(v)]) + " " +
             detail::format_double(g.cost(v)) + "\n";
  return out;
}

// UAI-style structure: optional "BAYES" type token, variable count, domain
// sizes, function count, then one scope per function with the child variable
// last. Anything after the scopes (the tables) is ignored.
inline BayesNetStructure parse_uai(const std::string& text) {
  detail::Tokenizer tok(text);
  auto first = tok.next();
  if (!first) throw ParseError(1, "empty input");

  long long n;
  if (!first->empty() && (std::isdigit(static_cast<unsigned char>((*first)[0])) ||
                          (*first)[0] == '-')) {
    n = tok.to_int(*first, "variable count");
  } else if (*first == "BAYES") {
    n = tok.require_int("variable count");
  } else {
    throw ParseError(tok.line(), "expected BAYES header or a variable count, got '" +
                                     *first + "'");
  }
  if (n < 0 || n > 1000000) throw ParseError(tok.line(), "variable count out of range");

  BayesNetStructure bn;
  bn.parents.resize(static_cast<size_t>(n));
  bn.domain_size.resize(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) {
    long long d = tok.require_int("domain size");
    if (d < 1) throw ParseError(tok.line(), "domain size must be >= 1");
    bn.domain_size[static_cast<size_t>(i)] = static_cast<int>(d);
  }

  long long fns = tok.require_int("function count");
  if (fns < 0) throw ParseError(tok.line(), "negative function count");
  std::vector<bool> has_fn(static_cast<size_t>(n), false);
  for (long long f = 0; f < fns; ++f) {
    long long k = tok.require_int("scope size");
    if (k < 1) throw ParseError(tok.line(), "scope must name at least the child");
    std::vector<NodeId> scope;
    for (long long i = 0; i < k; ++i) {
      long long v = tok.require_int("variable index");
      if (v < 0 || v >= n)
        throw ParseError(tok.line(), "variable index " + std::to_string(v) +
                                         " out of range");
      scope.push_back(static_cast<NodeId>(v));
    }
    NodeId child = scope.back();
    scope.pop_back();
    if (has_fn[static_cast<size_t>(child)])
      throw ParseError(tok.line(),
                       "two functions for variable " + std::to_string(child));
    has_fn[static_cast<size_t>(child)] = true;
    for (size_t i = 0; i < scope.size(); ++i) {
      if (scope[i] == child)
        throw ParseError(tok.line(), "variable " + std::to_string(child) +
                                         " appears in its own parent list");
      for (size_t j = i + 1; j < scope.size(); ++j)
        if (scope[i] == scope[j])
          throw ParseError(tok.line(), "parent " + std::to_string(scope[i]) +
                                           " repeated in one scope");
    }
    bn.parents[static_cast<size_t>(child)] = std::move(scope);
  }
  return bn;
}

// Structure-only counterpart of parse_uai: one function per variable, child
// last in each scope, no tables.
inline std::string write_uai(const BayesNetStructure& bn) {
  const int n = bn.variable_count();
  std::string out = "BAYES\n" + std::to_string(n) + "\n";
  for (int v = 0; v < n; ++v) {
    if (v) out += ' ';
    out += std::to_string(bn.domain_size[static_cast<size_t>(v)]);
  }
  out += '\n';
  out += std::to_string(n);
  out += '\n';
  for (int v = 0; v < n; ++v) {
    const auto& ps = bn.parents[static_cast<size_t>(v)];
    out += std::to_string(ps.size() + 1);
    for (NodeId p : ps) out += ' ' + std::to_string(p);
    out += ' ' + std::to_string(v) + '\n';
  }
  return out;
}

// Cover-instance format:
//   u <count>              header: number of elements
//   r <elem> <req>         element declaration with its requirement
//   s <id> <cost> <e...>   a set, its cost, and the elements it covers
inline SMCInstance parse_smc(const std::string& text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'u' header");
  const auto& head = lines.front();
  if (head.tokens[0] != "u")
    throw ParseError(head.number, "first line must be the 'u' header");
  if (head.tokens.size() != 2)
    throw ParseError(head.number, "'u' takes exactly one value");
  long long declared = detail::line_int(head, 1, "element count");
  if (declared < 0) throw ParseError(head.number, "negative element count");

  SMCInstance inst;
  std::vector<ElementId> known;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    const std::string& tag = l.tokens[0];
    if (tag == "r") {
      if (l.tokens.size() != 3)
        throw ParseError(l.number, "'r' takes an element id and a requirement");
      long long e = detail::line_int(l, 1, "element id");
      long long r = detail::line_int(l, 2, "requirement");
      if (r < 1) throw ParseError(l.number, "requirement must be >= 1");
      for (const auto& known_e : inst.elements)
        if (known_e.id == e)
          throw ParseError(l.number, "duplicate element " + std::to_string(e));
      inst.elements.push_back({static_cast<ElementId>(e), static_cast<int>(r)});
    } else if (tag == "s") {
      if (l.tokens.size() < 3)
        throw ParseError(l.number, "'s' takes a set id, a cost, and elements");
      long long id = detail::line_int(l, 1, "set id");
      double cost = detail::line_double(l, 2, "cost");
      if (!(cost > 0)) throw ParseError(l.number, "cost must be positive");
      SMCSet s;
      s.id = static_cast<SetId>(id);
      s.cost = cost;
      for (size_t i = 3; i < l.tokens.size(); ++i) {
        long long e = detail::line_int(l, i, "element id");
        s.elements.push_back(static_cast<ElementId>(e));
      }
      for (const auto& other : inst.sets)
        if (other.id == s.id)
          throw ParseError(l.number, "duplicate set " + std::to_string(s.id));
      inst.sets.push_back(std::move(s));
    } else {
      throw ParseError(l.number, "unknown line tag '" + tag + "'");
    }
  }
  if (static_cast<long long>(inst.elements.size()) != declared)
    throw ParseError(head.number,
                     "header declares " + std::to_string(declared) +
                         " elements, found " + std::to_string(inst.elements.size()));

  std::sort(inst.elements.begin(), inst.elements.end(),
            [](const SMCElement& a, const SMCElement& b) { return a.id < b.id; });
  std::sort(inst.sets.begin(), inst.sets.end(),
            [](const SMCSet& a, const SMCSet& b) { return a.id < b.id; });
  for (auto& s : inst.sets) std::sort(s.elements.begin(), s.elements.end());
  try {
    detail::check_smc(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(head.number, e.what());
  }
  return inst;
}

inline std::string write_smc(const SMCInstance& inst) {
  std::string out = "u " + std::to_string(inst.elements.size()) + "\n";
  for (const auto& e : inst.elements)
    out += "r " + std::to_string(e.id) + " " + std::to_string(e.requirement) + "\n";
  for (const auto& s : inst.sets) {
    out += "s " + std::to_string(s.id) + " " + detail::format_double(s.cost);
    for (ElementId e : s.elements) out += ' ' + std::to_string(e);
    out += '\n';
  }
  return out;
}

// Random layered network in the style used for cutset benchmarks: the first
// layer has roots only, every node in a later layer draws a fixed number of
// distinct parents from the previous layer.
struct LayeredNetSpec {
  int layers = 2;
  int nodes_per_layer = 1;
  int parents_per_node = 1;
  int domain_size = 2;
  std::uint64_t seed = 0;
};

inline BayesNetStructure gen_layered(const LayeredNetSpec& spec) {
  if (spec.layers < 2) throw std::invalid_argument("need at least two layers");
  if (spec.nodes_per_layer < 1) throw std::invalid_argument("need at least one node per layer");
  if (spec.parents_per_node < 0) throw std::invalid_argument("negative parent count");
  if (spec.parents_per_node > spec.nodes_per_layer)
    throw std::invalid_argument("more parents than nodes in the previous layer");
  if (spec.domain_size < 1) throw std::invalid_argument("domain size must be >= 1");

  const int per = spec.nodes_per_layer;
  const int n = spec.layers * per;
  BayesNetStructure bn;
  bn.parents.resize(static_cast<size_t>(n));
  bn.domain_size.assign(static_cast<size_t>(n), spec.domain_size);

  std::mt19937_64 rng(spec.seed);
  std::vector<NodeId> pool(static_cast<size_t>(per));
  for (int layer = 1; layer < spec.layers; ++layer) {
    for (int i = 0; i < per; ++i) {
      NodeId v = layer * per + i;
      for (int p = 0; p < per; ++p) pool[static_cast<size_t>(p)] = (layer - 1) * per + p;
      std::vector<NodeId> parents;
      parents.reserve(static_cast<size_t>(spec.parents_per_node));
      for (int p = 0; p < spec.parents_per_node; ++p) {
        int j = p + static_cast<int>(rng() % static_cast<std::uint64_t>(per - p));
        std::swap(pool[static_cast<size_t>(p)], pool[static_cast<size_t>(j)]);
        parents.push_back(pool[static_cast<size_t>(p)]);
      }
      std::sort(parents.begin(), parents.end());
      bn.parents[static_cast<size_t>(v)] = std::move(parents);
    }
  }
  return bn;
}

}  // namespace wcutset
