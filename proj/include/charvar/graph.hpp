#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace charvar {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Normalizes edges to (min, max), drops duplicates; rejects loops and
  /// out-of-range vertices.
  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  bool connected() const;

  /// Every clique (including the empty one), ordered by size then lexicographically.
  std::vector<std::vector<std::size_t>> cliques() const;

  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  /// Join of three pairs of non-adjacent vertices (octahedron 1-skeleton).
  static Graph octahedron();

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adj_;
};

/// Edge-list format: "v <count>" then "e <u> <v>" lines; '#' comments.
Graph parse_graph(std::string_view text);

/// Simplicial complex given by facets; simplices() lists the closure.
class SimplicialComplex {
 public:
  explicit SimplicialComplex(std::vector<std::vector<std::size_t>> facets);

  const std::vector<std::vector<std::size_t>>& facets() const noexcept { return facets_; }
  /// All nonempty simplices, sorted by dimension then lexicographically.
  const std::vector<std::vector<std::size_t>>& simplices() const noexcept { return simplices_; }
  long dimension() const;

 private:
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> simplices_;
};

/// Clique complex Δ_Γ.
SimplicialComplex flag_complex(const Graph& g);

/// Reduced rational Betti numbers b~_0..b~_dim via boundary-matrix ranks.
std::vector<long> reduced_homology(const SimplicialComplex& k);

}  // namespace charvar
