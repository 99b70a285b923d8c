#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gis {

// Number of parallel edges in a bundle. Any infinite cardinality is
// collapsed to countably infinite; a zero count only appears in summaries
// returned by edges_between, never in a validated Bundle.
class Cardinality {
 public:
  static constexpr Cardinality finite(std::uint64_t n) { return Cardinality(n); }
  static constexpr Cardinality infinite() { return Cardinality(); }

  constexpr bool is_infinite() const noexcept { return !count_.has_value(); }
  constexpr bool is_finite() const noexcept { return count_.has_value(); }
  // Precondition: is_finite().
  constexpr std::uint64_t count() const { return *count_; }

  // True iff index is a valid edge index in a bundle of this size.
  constexpr bool admits(std::uint64_t index) const noexcept {
    return is_infinite() || index < *count_;
  }

  friend constexpr bool operator==(Cardinality, Cardinality) = default;

 private:
  constexpr Cardinality() = default;
  constexpr explicit Cardinality(std::uint64_t n) : count_(n) {}

  std::optional<std::uint64_t> count_;
};

Cardinality operator+(Cardinality a, Cardinality b);
std::string to_string(Cardinality c);

struct Bundle {
  std::string id;
  std::string src;
  std::string dst;
  Cardinality card = Cardinality::finite(1);

  friend bool operator==(Bundle const&, Bundle const&) = default;
};

// A vertex of the graph: either one of the declared core vertices (index
// into Graph::vertices()) or a member w[index] of the optional infinite
// isolated family.
struct Vertex {
  enum class Kind : std::uint8_t { core, extra };

  Kind kind = Kind::core;
  std::uint64_t index = 0;

  static constexpr Vertex core(std::uint64_t i) { return {Kind::core, i}; }
  static constexpr Vertex extra(std::uint64_t i) { return {Kind::extra, i}; }

  constexpr bool is_core() const noexcept { return kind == Kind::core; }

  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

// The member of a bundle with the given index.
struct EdgeRef {
  std::size_t bundle = 0;  // index into Graph::bundles()
  std::uint64_t index = 0;

  friend constexpr auto operator<=>(EdgeRef, EdgeRef) = default;
};

inline constexpr std::string_view extra_family_name = "w";

// Directed multigraph with a finite core of declared vertices, finitely many
// edge bundles between core vertices (each finite or countably infinite), and
// optionally a countably infinite family of extra isolated vertices.
//
// Immutable after construction. Every Graph gets a fresh uid; paths and
// elements remember the uid of the graph they were built over, so operands
// from unrelated graphs are rejected. Copies share the uid.
class Graph {
 public:
  // Throws ValidationError for duplicate ids, unknown endpoints, Finite(0)
  // bundles, or names outside [A-Za-z0-9_]+.
  Graph(std::vector<std::string> vertices, std::vector<Bundle> bundles,
        bool extra_isolated_vertices = false);

  std::span<std::string const> vertices() const noexcept { return vertices_; }
  std::span<Bundle const> bundles() const noexcept { return bundles_; }
  bool has_extra_isolated_vertices() const noexcept { return extra_; }
  std::uint64_t uid() const noexcept { return uid_; }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_bundle(std::string_view id) const;
  // Throws UnknownVertex.
  std::size_t vertex_index(std::string_view name) const;

  Bundle const& bundle(std::size_t i) const { return bundles_.at(i); }
  std::size_t src_of(std::size_t bundle) const { return src_.at(bundle); }
  std::size_t dst_of(std::size_t bundle) const { return dst_.at(bundle); }

  // Bundle indices leaving / entering a core vertex, in declaration order.
  std::span<std::size_t const> out_bundles(std::size_t v) const { return out_.at(v); }
  std::span<std::size_t const> in_bundles(std::size_t v) const { return in_.at(v); }

  bool contains(Vertex v) const noexcept;
  std::string vertex_name(Vertex v) const;

  // Structural equality; the uid is not compared.
  friend bool operator==(Graph const& a, Graph const& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Bundle> bundles_;
  bool extra_ = false;
  std::uint64_t uid_ = 0;

  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> bundle_lookup_;
  std::vector<std::size_t> src_;
  std::vector<std::size_t> dst_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

bool is_valid_name(std::string_view name) noexcept;

// Line-oriented graph document:
//   vertex NAME
//   bundle ID SRC DST (COUNT | inf)
//   extra_isolated_vertices inf
// '#' starts a comment; blank lines are ignored.
Graph parse_graph(std::string_view text);
Graph load_graph(std::string const& path);
std::string format_graph(Graph const& g);

// One vertex "v" with one loop bundle "a" of the given size.
Graph polycyclic_graph(Cardinality lambda);

// Total number of edges e -> f. Finite(0) when there are none.
Cardinality edges_between(Graph const& g, std::string_view e, std::string_view f);

}  // namespace gis
