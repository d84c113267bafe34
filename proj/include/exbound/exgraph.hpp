#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace exbound::graph {

using Edge = std::pair<std::size_t, std::size_t>;

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxTransitivityVertices = 16;
inline constexpr std::size_t kMaxIndependenceVertices = 24;

// Undirected simple graph on at most 64 vertices. Edges are kept once, as
// (min, max), sorted; adjacency is mirrored in one 64-bit mask per vertex.
class ExclusivityGraph {
 public:
  ExclusivityGraph() = default;
  // Duplicate pairs (in either orientation) collapse; self-loops and
  // out-of-range indices throw.
  ExclusivityGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(std::size_t i, std::size_t j) const;
  std::uint64_t neighbor_mask(std::size_t i) const { return adj_.at(i); }
  std::size_t degree(std::size_t i) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;

  friend bool operator==(const ExclusivityGraph& a, const ExclusivityGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

struct CirculantSpec {
  std::size_t n;
  std::set<std::size_t> distances;
};

std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t n);

ExclusivityGraph circulant(const CirculantSpec& spec);
ExclusivityGraph complement(const ExclusivityGraph& g);
ExclusivityGraph edgeless(std::size_t n);
ExclusivityGraph complete(std::size_t n);

// Exhaustive automorphism search; n <= 16.
bool is_vertex_transitive(const ExclusivityGraph& g);

// Returns an automorphism (as a permutation) mapping `from` to `to`, if any.
std::optional<std::vector<std::size_t>> find_automorphism(const ExclusivityGraph& g, std::size_t from,
                                                          std::size_t to);

// Branch and bound; n <= 24.
std::size_t independence_number(const ExclusivityGraph& g);

bool is_clique(const ExclusivityGraph& g, const std::vector<std::size_t>& vertices);

// All maximal cliques (Bron-Kerbosch with pivoting), each sorted ascending,
// list sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_cliques(const ExclusivityGraph& g);

// Co-normal product. Vertex (i, j) has index i * gb.n() + j.
ExclusivityGraph disjunctive_product(const ExclusivityGraph& ga, const ExclusivityGraph& gb);

// --- serialization ---------------------------------------------------------

// One node line per vertex (label attribute when labels are given) and one
// `a -- b;` line per edge.
std::string to_dot(const ExclusivityGraph& g, const std::vector<std::string>& labels = {},
                   const std::string& name = "G");

// Reads the subset of DOT that to_dot writes.
ExclusivityGraph from_dot(const std::string& text);

// {"n": n, "edges": [[i, j], ...]} plus "labels" when given.
std::string to_json(const ExclusivityGraph& g, const std::vector<std::string>& labels = {});
ExclusivityGraph from_json(const std::string& text);

}  // namespace exbound::graph
