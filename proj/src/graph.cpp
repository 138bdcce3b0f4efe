#include "charvar/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "charvar/error.hpp"
#include "charvar/laurent_matrix.hpp"

namespace charvar {

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertices), adj_(vertices, std::vector<bool>(vertices, false)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw Error("BadGraph", "edge references a missing vertex");
    if (u == v) throw Error("BadGraph", "loops are not allowed");
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) {
      edges_.push_back({u, v});
      adj_[u][v] = adj_[v][u] = true;
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).at(v); }

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n_; ++v)
      if (adj_[u][v] && !seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n_;
}

std::vector<std::vector<std::size_t>> Graph::cliques() const {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  while (!layer.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : layer) {
      std::size_t start = c.empty() ? 0 : c.back() + 1;
      for (std::size_t v = start; v < n_; ++v) {
        bool ok = std::all_of(c.begin(), c.end(), [&](std::size_t u) { return adj_[u][v]; });
        if (!ok) continue;
        auto d = c;
        d.push_back(v);
        next.push_back(std::move(d));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph Graph::octahedron() {
  // Vertices 2k, 2k+1 form the k-th pair; all cross-pair edges present.
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (i / 2 != j / 2) e.push_back({i, j});
  return Graph(6, std::move(e));
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  long vertices = -1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& what) {
      return Error("SyntaxError", "line " + std::to_string(lineno) + ": " + what);
    };
    if (tag == "v") {
      if (vertices >= 0) throw fail("vertex count given twice");
      if (!(ls >> vertices) || vertices < 0) throw fail("expected vertex count");
    } else if (tag == "e") {
      if (vertices < 0) throw fail("edge before vertex count");
      long u, v;
      if (!(ls >> u >> v) || u < 0 || v < 0) throw fail("expected two vertex indices");
      edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
    } else {
      throw fail("unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing input '" + extra + "'");
  }
  if (vertices < 0) throw Error("SyntaxError", "missing 'v <count>' line");
  return Graph(static_cast<std::size_t>(vertices), std::move(edges));
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<std::size_t>> facets)
    : facets_(std::move(facets)) {
  std::set<std::vector<std::size_t>> all;
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    const std::size_t k = f.size();
    if (k > 24) throw Error("BadComplex", "facet too large to expand");
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  simplices_.assign(all.begin(), all.end());
  std::stable_sort(simplices_.begin(), simplices_.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
}

long SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<long>(simplices_.back().size()) - 1;
}

SimplicialComplex flag_complex(const Graph& g) {
  auto cl = g.cliques();
  // Keep maximal cliques as facets.
  std::vector<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (cl[i].empty()) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < cl.size() && maximal; ++j)
      if (cl[j].size() > cl[i].size() && std::includes(cl[j].begin(), cl[j].end(), cl[i].begin(), cl[i].end()))
        maximal = false;
    if (maximal) facets.push_back(cl[i]);
  }
  return SimplicialComplex(std::move(facets));
}

std::vector<long> reduced_homology(const SimplicialComplex& k) {
  const long dim = k.dimension();
  if (dim < 0) return {};
  // Augmented chain complex: degree -1 holds the empty simplex.
  std::vector<std::vector<std::vector<std::size_t>>> by_dim(static_cast<std::size_t>(dim) + 2);
  by_dim[0].push_back({});
  for (const auto& s : k.simplices()) by_dim[s.size()].push_back(s);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = i;

  // rank[d] = rank of boundary from size-d simplices to size-(d-1) simplices.
  std::vector<std::size_t> rank(by_dim.size() + 1, 0);
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    DenseMatrix<Rational> b(by_dim[d - 1].size(), by_dim[d].size(), Rational(0));
    for (std::size_t c = 0; c < by_dim[d].size(); ++c) {
      const auto& s = by_dim[d][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<long>(i));
        b(index[d - 1].at(face), c) = (i % 2) ? -1 : 1;
      }
    }
    rank[d] = rank_rational(std::move(b));
  }
  std::vector<long> out;
  for (std::size_t d = 1; d < by_dim.size(); ++d)
    out.push_back(static_cast<long>(by_dim[d].size()) - static_cast<long>(rank[d]) -
                  static_cast<long>(rank[d + 1]));
  return out;
}

}  // namespace charvar
