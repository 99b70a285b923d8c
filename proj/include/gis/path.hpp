#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

// A finite path. Vertices are the length-zero paths, each carrying its own
// anchor so that distinct vertices give distinct empty paths.
class Path {
 public:
  // Throws ValidationError if v is not a vertex of g.
  static Path vertex(Graph const& g, Vertex v);
  static Path vertex(Graph const& g, std::string_view name);
  // Throws ValidationError if the bundle is unknown or index is out of range.
  static Path edge(Graph const& g, EdgeRef e);
  // Throws CompositionError if consecutive edges do not compose.
  static Path from_edges(Graph const& g, std::span<EdgeRef const> edges);

  Vertex source() const noexcept { return source_; }
  Vertex range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<EdgeRef const> edges() const noexcept { return edges_; }
  std::uint64_t graph_uid() const noexcept { return graph_; }

  friend auto operator<=>(Path const&, Path const&) = default;
  friend bool operator==(Path const&, Path const&) = default;

 private:
  friend Path concat(Path const& p, Path const& q);
  friend std::optional<Path> strip_prefix(Path const& p, Path const& q);

  Path(std::uint64_t graph, Vertex source, Vertex range, std::vector<EdgeRef> edges)
      : graph_(graph), source_(source), range_(range), edges_(std::move(edges)) {}

  std::uint64_t graph_ = 0;
  Vertex source_;
  Vertex range_;
  std::vector<EdgeRef> edges_;
};

inline Vertex source(Path const& p) { return p.source(); }
inline Vertex range(Path const& p) { return p.range(); }
inline std::size_t length(Path const& p) { return p.length(); }

// Throws CompositionError unless range(p) == source(q), GraphMismatch if
// the paths come from different graphs.
Path concat(Path const& p, Path const& q);

// The w with q == concat(p, w), if p is a prefix of q.
std::optional<Path> strip_prefix(Path const& p, Path const& q);

// Literal reading: source == range, so every empty path is a cycle. Callers
// that want genuine cycles must also require length >= 1.
bool is_cycle(Path const& p);

// "@v" for vertices (extra family: "@w[3]"), otherwise "b[i].c[j]...".
std::string format_path(Graph const& g, Path const& p);
Path parse_path(std::string_view text, Graph const& g);

// Every path of length <= max_length whose edge indices are all below
// index_limit; extra-family vertices w[i] with i < index_limit are included
// as empty paths. Ordered by length; deterministic within a length.
std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_length,
                                  std::uint64_t index_limit);

}  // namespace gis
