#include "sparking/graphs.hpp"

#include <algorithm>
#include <numeric>

#include "sparking/bijections.hpp"
#include "sparking/enumeration.hpp"
#include "sparking/errors.hpp"

namespace sparking {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_connected(const Multigraph& g) {
  if (!g.is_connected()) throw InvalidArgument("graph is not connected");
}

using EndpointList = std::vector<std::pair<Vertex, Vertex>>;

std::uint64_t count_trees(std::size_t vertices, EndpointList edges) {
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; }),
              edges.end());
  if (vertices <= 1) return 1;
  if (edges.size() + 1 < vertices) return 0;
  const auto [u, v] = edges.back();
  edges.pop_back();
  const std::uint64_t without = count_trees(vertices, edges);
  // Contract v into u, then close the label gap left by v.
  const Vertex keep = std::min(u, v);
  const Vertex gone = std::max(u, v);
  for (auto& [a, b] : edges) {
    for (Vertex* x : {&a, &b}) {
      if (*x == gone) *x = keep;
      else if (*x > gone) --*x;
    }
  }
  return without + count_trees(vertices - 1, std::move(edges));
}

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw InvalidArgument("a graph needs at least the root vertex 0");
  if (edges_.size() > Universe::kMaxSize) throw InvalidArgument("at most 64 edges are supported");
  std::vector<ElementId> ids;
  for (const auto& e : edges_) {
    if (e.id == 0) throw InvalidArgument("edge ids must be positive");
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InvalidArgument("edge " + std::to_string(e.id) + " has an endpoint outside 0.." +
                            std::to_string(vertex_count_ - 1));
    }
    ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) throw InvalidArgument("duplicate edge id " + std::to_string(*dup));
}

UniversePtr Multigraph::edge_universe() const {
  std::vector<ElementId> ids;
  for (const auto& e : edges_) ids.push_back(e.id);
  return std::make_shared<const Universe>(Universe::identity(ids));
}

bool Multigraph::is_connected() const {
  DisjointSets sets(vertex_count_);
  std::size_t components = vertex_count_;
  for (const auto& e : edges_) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

std::size_t Multigraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return !e.is_loop() && (e.u == v || e.v == v); }));
}

Multigraph complete_graph(std::size_t vertex_count) {
  std::vector<Edge> edges;
  ElementId id = 1;
  for (Vertex i = 0; i < vertex_count; ++i) {
    for (Vertex j = i + 1; j < vertex_count; ++j) edges.push_back({id++, i, j});
  }
  return Multigraph(vertex_count, std::move(edges));
}

Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  if (max_vertices < 2 || max_edges + 1 < max_vertices) {
    throw InvalidArgument("random graph needs max_vertices >= 2 and max_edges >= max_vertices - 1");
  }
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(n - 1, max_edges)(rng);
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (Vertex v = 1; v < n; ++v) ends.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  while (ends.size() < m) ends.emplace_back(any(rng), any(rng));
  std::vector<ElementId> ids(m);
  std::iota(ids.begin(), ids.end(), ElementId{1});
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({ids[i], ends[i].first, ends[i].second});
  return Multigraph(n, std::move(edges));
}

std::vector<ElementSet> spanning_trees(const Multigraph& g) {
  require_connected(g);
  const auto universe = g.edge_universe();
  std::vector<std::size_t> candidates;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) candidates.push_back(universe->position_of(e.id));
  }
  const auto endpoints = [&](std::size_t pos) {
    const ElementId id = universe->id(pos);
    return *std::find_if(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.id == id; });
  };
  const std::size_t r = g.vertex_count() - 1;
  std::vector<ElementSet> trees;
  if (r > candidates.size()) return trees;
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    DisjointSets sets(g.vertex_count());
    ElementSet tree;
    bool acyclic = true;
    for (std::size_t i : pick) {
      const Edge e = endpoints(candidates[i]);
      acyclic = acyclic && sets.unite(e.u, e.v);
      tree = tree.with(candidates[i]);
    }
    if (acyclic) trees.push_back(tree);
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == candidates.size() - r + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::uint64_t spanning_tree_count(const Multigraph& g) {
  EndpointList edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return count_trees(g.vertex_count(), std::move(edges));
}

Matroid graphic_matroid(const Multigraph& g) { return Matroid(g.edge_universe(), spanning_trees(g)); }

SetSystem star_sets(const Multigraph& g) {
  const auto universe = g.edge_universe();
  std::vector<ElementSet> sets(g.non_root_count());
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const std::size_t pos = universe->position_of(e.id);
    for (Vertex x : {e.u, e.v}) {
      if (x != 0) sets[x - 1] = sets[x - 1].with(pos);
    }
  }
  return SetSystem(universe, std::move(sets));
}

bool is_g_parking_function(const Multigraph& g, const SParkingFunction& f) {
  require_connected(g);
  const std::size_t n = g.non_root_count();
  if (f.size() != n) {
    throw InvalidArgument("function has " + std::to_string(f.size()) + " values but the graph has " +
                          std::to_string(n) + " non-root vertices");
  }
  if (n > kMaxExhaustiveSets) throw InvalidArgument("G-parking check supports at most 20 non-root vertices");
  // Bit v-1 stands for vertex v.
  const auto inside = [](std::uint32_t mask, Vertex v) { return v != 0 && ((mask >> (v - 1)) & 1U) != 0; };
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool witnessed = false;
    for (Vertex i = 1; i <= n && !witnessed; ++i) {
      if (!inside(mask, i)) continue;
      std::size_t out_degree = 0;
      for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        if ((e.u == i && !inside(mask, e.v)) || (e.v == i && !inside(mask, e.u))) ++out_degree;
      }
      witnessed = out_degree > f[i - 1];
    }
    if (!witnessed) return false;
  }
  return true;
}

std::vector<SParkingFunction> enumerate_g_parking_functions(const Multigraph& g) {
  require_connected(g);
  const std::size_t n = g.non_root_count();
  std::vector<std::uint32_t> bound(n);
  for (Vertex v = 1; v <= n; ++v) {
    bound[v - 1] = static_cast<std::uint32_t>(g.degree(v));
    if (bound[v - 1] == 0) return {};
  }
  std::vector<SParkingFunction> out;
  SParkingFunction f{std::vector<std::uint32_t>(n, 0)};
  while (true) {
    if (is_g_parking_function(g, f)) out.push_back(f);
    std::size_t i = n;
    while (i > 0 && f.values[i - 1] + 1 == bound[i - 1]) {
      f.values[i - 1] = 0;
      --i;
    }
    if (i == 0) return out;
    ++f.values[i - 1];
  }
}

FamilyComparison g_parking_equals_s_parking(const Multigraph& g) {
  const auto by_degree = enumerate_g_parking_functions(g);
  const auto by_sets = enumerate_parking_functions(star_sets(g));
  return {by_degree.size(), by_sets.size(), by_degree == by_sets};
}

namespace {

bool is_classic_parking(const SParkingFunction& f) {
  const std::size_t n = f.size();
  for (std::size_t j = 1; j <= n; ++j) {
    const auto at_most = std::count_if(f.values.begin(), f.values.end(), [&](std::uint32_t v) { return v <= j; });
    if (static_cast<std::size_t>(at_most) < j) return false;
  }
  return true;
}

// Calls visit(f) for every f in {1..n}^n, lexicographically.
template <typename Visit>
void for_each_preference(std::size_t n, Visit&& visit) {
  SParkingFunction f{std::vector<std::uint32_t>(n, 1)};
  while (true) {
    visit(f);
    std::size_t i = n;
    while (i > 0 && f.values[i - 1] == n) {
      f.values[i - 1] = 1;
      --i;
    }
    if (i == 0) return;
    ++f.values[i - 1];
  }
}

}  // namespace

std::vector<SParkingFunction> classic_parking_functions(std::size_t n) {
  if (n == 0) throw InvalidArgument("classic parking functions need n >= 1");
  std::vector<SParkingFunction> out;
  for_each_preference(n, [&](const SParkingFunction& f) {
    if (is_classic_parking(f)) out.push_back(f);
  });
  return out;
}

bool classic_correspondence(std::size_t n) {
  if (n == 0) throw InvalidArgument("classic parking functions need n >= 1");
  const Multigraph k = complete_graph(n + 1);
  bool agree = true;
  for_each_preference(n, [&](const SParkingFunction& f) {
    SParkingFunction shifted = f;
    for (auto& v : shifted.values) --v;
    agree = agree && is_classic_parking(f) == is_g_parking_function(k, shifted);
  });
  return agree;
}

namespace {

TreeBijection finish(std::vector<TreePair> pairs, std::vector<ElementSet> trees) {
  std::vector<ElementSet> image;
  for (const auto& p : pairs) image.push_back(p.tree);
  std::sort(image.begin(), image.end());
  const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  const bool covers = image == trees;
  return {std::move(pairs), std::move(trees), injective, covers};
}

}  // namespace

TreeBijection spanning_tree_bijection(const Multigraph& g) {
  require_connected(g);
  const SetSystem stars = star_sets(g);
  std::vector<TreePair> pairs;
  for (const auto& f : enumerate_parking_functions(stars)) pairs.push_back({f, sigma(stars, f).set.elements});
  return finish(std::move(pairs), spanning_trees(g));
}

TreeBijection face_boundary_bijection(const Multigraph& g, const std::vector<std::vector<ElementId>>& faces) {
  require_connected(g);
  const std::size_t k = g.edges().size() + 1 - g.vertex_count();
  if (k == 0) throw PreconditionFailure("k = |E| - |V| + 1 = 0; a tree has no interior faces");
  if (faces.size() != k) {
    throw PreconditionFailure("k = |E| - |V| + 1 = " + std::to_string(k) + " but " + std::to_string(faces.size()) +
                              " face boundaries were supplied");
  }
  const SetSystem parts(g.edge_universe(), faces);
  const Matroid m = graphic_matroid(g);
  for (SetIndex i = 0; i < k; ++i) {
    if (!is_union_of_circuits(m, parts.set(i))) {
      throw PreconditionFailure("face " + std::to_string(i + 1) + " " + format_set(parts.universe(), parts.set(i)) +
                                " is not a union of circuits");
    }
  }
  const auto cover = corollary_full_cover(m, parts, Side::Circuit);
  if (!cover.hypothesis) {
    std::string which;
    for (SetIndex i : *cover.uncovered) which += (which.empty() ? "" : ",") + std::to_string(i + 1);
    throw PreconditionFailure("exactly-one set of faces {" + which + "} contains no circuit");
  }
  const auto bij = theorem_bijection(m, parts, Side::Circuit);
  std::vector<TreePair> pairs;
  for (const auto& p : bij.pairs) pairs.push_back({p.function, p.basis});
  return finish(std::move(pairs), m.bases());
}

}  // namespace sparking
