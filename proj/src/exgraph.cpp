#include "exbound/exgraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "exbound/error.hpp"

namespace exbound::graph {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t all_bits(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

void require_index(const ExclusivityGraph& g, std::size_t i) {
  if (i >= g.n()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(i) + " in graph of " + std::to_string(g.n()));
  }
}

std::string escape_label(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

ExclusivityGraph::ExclusivityGraph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adj_(n, 0) {
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices (max 64)");
  }
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw Error(ErrorKind::InvariantViolation, "self-loop at " + std::to_string(a));
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adj_[i] & bit(j)) edges_.emplace_back(i, j);
    }
  }
}

bool ExclusivityGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, "adjacency query");
  return (adj_[i] & bit(j)) != 0;
}

std::size_t ExclusivityGraph::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(adj_.at(i)));
}

std::vector<std::size_t> ExclusivityGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (adj_.at(i) & bit(j)) out.push_back(j);
  }
  return out;
}

std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t n) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

ExclusivityGraph circulant(const CirculantSpec& spec) {
  if (spec.distances.empty()) throw Error(ErrorKind::InvalidDistance, "empty distance set");
  for (auto d : spec.distances) {
    if (d == 0 || d > spec.n / 2) {
      throw Error(ErrorKind::InvalidDistance,
                  "distance " + std::to_string(d) + " for n = " + std::to_string(spec.n));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = i + 1; j < spec.n; ++j) {
      if (spec.distances.contains(circular_distance(i, j, spec.n))) edges.emplace_back(i, j);
    }
  }
  return ExclusivityGraph(spec.n, edges);
}

ExclusivityGraph complement(const ExclusivityGraph& g) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = i + 1; j < g.n(); ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return ExclusivityGraph(g.n(), edges);
}

ExclusivityGraph edgeless(std::size_t n) { return ExclusivityGraph(n, {}); }

ExclusivityGraph complete(std::size_t n) { return complement(edgeless(n)); }

std::optional<std::vector<std::size_t>> find_automorphism(const ExclusivityGraph& g, std::size_t from,
                                                          std::size_t to) {
  const std::size_t n = g.n();
  require_index(g, from);
  require_index(g, to);
  if (g.degree(from) != g.degree(to)) return std::nullopt;

  // Assign images in the order from, then the rest ascending.
  std::vector<std::size_t> order{from};
  for (std::size_t v = 0; v < n; ++v) {
    if (v != from) order.push_back(v);
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(n, kUnset);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || g.degree(v) != g.degree(w)) continue;
      if (depth == 0 && w != to) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const std::size_t u = order[k];
        consistent = g.adjacent(u, v) == g.adjacent(image[u], w);
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      image[v] = kUnset;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

bool is_vertex_transitive(const ExclusivityGraph& g) {
  if (g.n() > kMaxTransitivityVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.n()) + " vertices (max 16)");
  }
  if (g.n() <= 1) return true;
  for (std::size_t v = 1; v < g.n(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  // The automorphisms form a group, so the orbit of vertex 0 covering every
  // vertex is enough.
  for (std::size_t v = 1; v < g.n(); ++v) {
    if (!find_automorphism(g, 0, v)) return false;
  }
  return true;
}

std::size_t independence_number(const ExclusivityGraph& g) {
  if (g.n() > kMaxIndependenceVertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.n()) + " vertices (max 24)");
  }
  std::size_t best = 0;
  std::function<void(std::uint64_t, std::size_t)> search = [&](std::uint64_t candidates, std::size_t size) {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    search(candidates & ~bit(v) & ~g.neighbor_mask(v), size + 1);
    search(candidates & ~bit(v), size);
  };
  search(all_bits(g.n()), 0);
  return best;
}

bool is_clique(const ExclusivityGraph& g, const std::vector<std::size_t>& vertices) {
  for (auto v : vertices) require_index(g, v);
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const ExclusivityGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bron_kerbosch =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
          std::vector<std::size_t> clique;
          for (std::uint64_t m = r; m; m &= m - 1) clique.push_back(std::countr_zero(m));
          out.push_back(std::move(clique));
          return;
        }
        const auto pivot = static_cast<std::size_t>(std::countr_zero(p | x));
        for (std::uint64_t m = p & ~g.neighbor_mask(pivot); m; m &= m - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(m));
          bron_kerbosch(r | bit(v), p & g.neighbor_mask(v), x & g.neighbor_mask(v));
          p &= ~bit(v);
          x |= bit(v);
        }
      };
  if (g.n() > 0) bron_kerbosch(0, all_bits(g.n()), 0);
  std::sort(out.begin(), out.end());
  return out;
}

ExclusivityGraph disjunctive_product(const ExclusivityGraph& ga, const ExclusivityGraph& gb) {
  const std::size_t n = ga.n() * gb.n();
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "product has " + std::to_string(n) + " vertices");
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const std::size_t i = x / gb.n(), j = x % gb.n();
      const std::size_t k = y / gb.n(), l = y % gb.n();
      const bool a_excl = i != k && ga.adjacent(i, k);
      const bool b_excl = j != l && gb.adjacent(j, l);
      if (a_excl || b_excl) edges.emplace_back(x, y);
    }
  }
  return ExclusivityGraph(n, edges);
}

std::string to_dot(const ExclusivityGraph& g, const std::vector<std::string>& labels, const std::string& name) {
  if (!labels.empty() && labels.size() != g.n()) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from vertex count");
  }
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (!labels.empty()) os << " [label=\"" << escape_label(labels[v]) << "\"]";
    os << ";\n";
  }
  for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

ExclusivityGraph from_dot(const std::string& text) {
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
  static const std::regex node_re(R"(^\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  std::istringstream is(text);
  std::string line;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  bool opened = false;
  while (std::getline(is, line)) {
    ++line_no;
    std::smatch m;
    if (std::regex_match(line, m, edge_re)) {
      const std::size_t a = std::stoul(m[1]), b = std::stoul(m[2]);
      edges.emplace_back(a, b);
      n = std::max({n, a + 1, b + 1});
    } else if (std::regex_match(line, m, node_re)) {
      n = std::max(n, std::stoul(m[1]) + 1);
    } else if (line.find("graph") != std::string::npos && line.find('{') != std::string::npos) {
      if (line.find("digraph") != std::string::npos) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": directed graphs are not supported");
      }
      opened = true;
    } else if (line.find_first_not_of(" \t}") != std::string::npos) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unrecognized DOT statement");
    }
  }
  if (!opened) throw Error(ErrorKind::ParseError, "missing graph header");
  return ExclusivityGraph(n, edges);
}

std::string to_json(const ExclusivityGraph& g, const std::vector<std::string>& labels) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  if (!labels.empty()) j["labels"] = labels;
  return j.dump(2) + "\n";
}

ExclusivityGraph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge entries must be [i, j]");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return ExclusivityGraph(j.at("n").get<std::size_t>(), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

}  // namespace exbound::graph
