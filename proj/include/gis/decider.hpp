#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gis/graph.hpp"
#include "gis/path.hpp"

namespace gis {

// Infinitely many paths end at the queried vertex because some nonempty
// cycle can reach it: cycle . connector is a path into the vertex for
// every power of the cycle.
struct CycleReaching {
  Path cycle;      // length >= 1, source == range
  Path connector;  // from the cycle's vertex to the queried vertex
};

// Infinitely many paths end at the queried vertex because an infinite bundle
// ends at a vertex that reaches it.
struct InfiniteBundleReaching {
  std::string bundle;
  Path connector;  // from the bundle's dst to the queried vertex
};

struct FinitenessVerdict {
  bool finite = false;
  std::variant<std::monostate, CycleReaching, InfiniteBundleReaching> witness;
  // When finite: every path whose range is the queried vertex, ordered by
  // length. Empty otherwise.
  std::vector<Path> paths;
};

struct InfiniteVertexFamily {
  friend bool operator==(InfiniteVertexFamily, InfiniteVertexFamily) = default;
};

// Finitely many paths end at e, infinitely many edges go from e to f.
struct BadPair {
  std::string e;
  std::string f;
  std::string bundle;  // first infinite bundle e -> f in declaration order

  friend bool operator==(BadPair const&, BadPair const&) = default;
};

using NonDiscreteWitness = std::variant<InfiniteVertexFamily, BadPair>;

// Whether G(E) admits a non-discrete locally compact semigroup topology.
// discrete_only() is equivalent to condition (*): for every countable set of
// paths some infinite subset is uniformly lengthened by left multiplication
// with a single element.
struct Verdict {
  std::optional<NonDiscreteWitness> witness;  // empty means discrete only

  bool discrete_only() const noexcept { return !witness.has_value(); }
  friend bool operator==(Verdict const&, Verdict const&) = default;
};

// Directed reachability in the core graph, each bundle acting as one arc.
// reaches(g, v, v) is always true. Throws UnknownVertex.
bool reaches(Graph const& g, std::string_view src, std::string_view dst);

// Decides whether {u in Path(E) : r(u) = e} is finite. With R the set of
// vertices that reach e, the set is infinite iff a vertex of R lies on a
// nonempty cycle or an infinite bundle ends in R. Cycle witnesses are
// preferred; ties go to declaration order. Throws UnknownVertex.
FinitenessVerdict paths_into_vertex_finite(Graph const& g, std::string_view e);

// First pair (e, f) in declaration order with finitely many paths into e and
// infinitely many edges e -> f.
std::optional<BadPair> find_bad_pair(Graph const& g);

Verdict decide(Graph const& g);
inline bool satisfies_star(Graph const& g) { return decide(g).discrete_only(); }

// {"verdict": "discrete_only"} or
// {"verdict": "non_discrete", "witness": {"kind": "infinite_vertex_family"}} or
// {"verdict": "non_discrete", "witness": {"kind": "bad_pair", "e": .., "f": .., "bundle": ..}}
nlohmann::json verdict_to_json(Verdict const& v);
std::string verdict_to_text(Verdict const& v);

nlohmann::json finiteness_to_json(Graph const& g, FinitenessVerdict const& v);

}  // namespace gis
