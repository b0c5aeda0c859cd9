#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sparking/matroid.hpp"
#include "sparking/set_system.hpp"

namespace sparking {

using Vertex = std::size_t;

struct Edge {
  ElementId id;
  Vertex u;
  Vertex v;

  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Multigraph on vertices 0..n with vertex 0 as the root. Loops and
/// parallel edges are allowed; edge ids are unique positive integers.
class Multigraph {
 public:
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  /// n, the number of non-root vertices.
  std::size_t non_root_count() const { return vertex_count_ - 1; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge ids with w(e) = id. Every call returns an equal universe.
  UniversePtr edge_universe() const;
  bool is_connected() const;
  /// Non-loop edges at v, counted with multiplicity.
  std::size_t degree(Vertex v) const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

/// K_n on vertices 0..n-1, edges (i,j) for i < j with ids 1.. in lexicographic order.
Multigraph complete_graph(std::size_t vertex_count);

/// Random connected multigraph: a random spanning tree on 1..max_vertices
/// vertices, then extra edges (loops and parallels allowed) up to max_edges.
Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);

/// Edge sets of spanning trees, by subset brute force. Throws InvalidArgument
/// when disconnected.
std::vector<ElementSet> spanning_trees(const Multigraph& g);

/// Number of spanning trees by deletion-contraction.
std::uint64_t spanning_tree_count(const Multigraph& g);

/// Bases are spanning trees.
Matroid graphic_matroid(const Multigraph& g);

/// E_i = non-loop edges at vertex i, i = 1..n, over edge_universe().
SetSystem star_sets(const Multigraph& g);

/// f indexed by vertex - 1. Every non-empty root-free vertex set V' must
/// contain i with d(i, V - V') > f(i).
bool is_g_parking_function(const Multigraph& g, const SParkingFunction& f);

/// By the degree definition, lexicographic.
std::vector<SParkingFunction> enumerate_g_parking_functions(const Multigraph& g);

struct FamilyComparison {
  std::size_t left_count;
  std::size_t right_count;
  bool equal;
};

/// G-parking functions versus parking functions of the star sets.
FamilyComparison g_parking_equals_s_parking(const Multigraph& g);

/// f: {1..n} -> {1..n} with |{i : f(i) <= j}| >= j for every j.
std::vector<SParkingFunction> classic_parking_functions(std::size_t n);
/// f is classic-parking iff f - 1 is G-parking on K_{n+1}, over all of {1..n}^n.
bool classic_correspondence(std::size_t n);

struct TreePair {
  SParkingFunction function;
  ElementSet tree;
};

struct TreeBijection {
  std::vector<TreePair> pairs;
  std::vector<ElementSet> trees;
  bool injective;
  bool covers_all_trees;

  bool ok() const { return injective && covers_all_trees; }
};

/// sigma over the parking functions of the star sets, compared against the
/// brute-force spanning trees.
TreeBijection spanning_tree_bijection(const Multigraph& g);

/// f -> E - sigma(f) for caller-supplied face boundaries. Throws
/// PreconditionFailure when k != |E| - |V| + 1, k = 0, a face is not a union
/// of circuits, or some exactly-one set contains no circuit.
TreeBijection face_boundary_bijection(const Multigraph& g, const std::vector<std::vector<ElementId>>& faces);

}  // namespace sparking
