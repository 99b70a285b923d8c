#pragma once

#include <random>
#include <string>
#include <vector>

#include "gis/graph.hpp"

namespace gis::testing {

Graph p1();
Graph p2();
Graph p_omega();
// e -> f through one infinite bundle b.
Graph two_vertex_infinite();
// x -p(2)-> y -q(1)-> z.
Graph three_vertex_chain();
// Loop a at e plus infinite b : e -> f.
Graph loop_plus_infinite();
// P_1 core plus the extra isolated family.
Graph p1_with_extra_family();
// x -c(2)-> e -b(inf)-> f, with a loop l at f; three paths end at e.
Graph wide_bad_pair();

struct Named {
  std::string name;
  Graph graph;
};

// The standard catalogue: P1, P2, P_omega, two-vertex infinite bundle,
// three-vertex chain.
std::vector<Named> catalogue();
// catalogue() plus the loop-plus-infinite, extra-family and wide graphs.
std::vector<Named> extended_catalogue();

// Adds/removes bundles and vertices at random; at most max_vertices core
// vertices.
Graph mutate(Graph const& g, std::mt19937& rng, std::size_t max_vertices = 6);

// Random graph on 1..max_vertices vertices in which every vertex lies on a
// nonempty cycle; bundles may be infinite.
Graph random_cyclic_graph(std::mt19937& rng, std::size_t max_vertices = 5);

// g with one extra bundle src -> dst of the given size.
Graph with_bundle(Graph const& g, std::string const& src, std::string const& dst, Cardinality card);

}  // namespace gis::testing
