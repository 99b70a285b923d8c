#include "gis/path.hpp"

#include <algorithm>

#include "gis/errors.hpp"
#include "path_parser.hpp"

namespace gis {

namespace {

Vertex vertex_for_bundle_src(Graph const& g, std::size_t b) { return Vertex::core(g.src_of(b)); }
Vertex vertex_for_bundle_dst(Graph const& g, std::size_t b) { return Vertex::core(g.dst_of(b)); }

void check_edge(Graph const& g, EdgeRef e) {
  if (e.bundle >= g.bundles().size()) throw ValidationError("unknown bundle");
  auto const& b = g.bundle(e.bundle);
  if (!b.card.admits(e.index))
    throw ValidationError("edge index " + std::to_string(e.index) + " out of range for bundle '" +
                          b.id + "' of size " + to_string(b.card));
}

}  // namespace

Path Path::vertex(Graph const& g, Vertex v) {
  if (!g.contains(v)) throw ValidationError("vertex is not part of the graph");
  return Path(g.uid(), v, v, {});
}

Path Path::vertex(Graph const& g, std::string_view name) {
  return vertex(g, Vertex::core(g.vertex_index(name)));
}

Path Path::edge(Graph const& g, EdgeRef e) {
  check_edge(g, e);
  return Path(g.uid(), vertex_for_bundle_src(g, e.bundle), vertex_for_bundle_dst(g, e.bundle), {e});
}

Path Path::from_edges(Graph const& g, std::span<EdgeRef const> edges) {
  if (edges.empty()) throw ValidationError("from_edges needs at least one edge");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    check_edge(g, edges[i]);
    if (i > 0 && g.dst_of(edges[i - 1].bundle) != g.src_of(edges[i].bundle))
      throw CompositionError("edges " + std::to_string(i - 1) + " and " + std::to_string(i) +
                             " do not compose");
  }
  return Path(g.uid(), vertex_for_bundle_src(g, edges.front().bundle),
              vertex_for_bundle_dst(g, edges.back().bundle), {edges.begin(), edges.end()});
}

Path concat(Path const& p, Path const& q) {
  if (p.graph_ != q.graph_) throw GraphMismatch();
  if (p.range_ != q.source_) throw CompositionError("range of the first path is not the source of the second");
  std::vector<EdgeRef> edges;
  edges.reserve(p.edges_.size() + q.edges_.size());
  edges.insert(edges.end(), p.edges_.begin(), p.edges_.end());
  edges.insert(edges.end(), q.edges_.begin(), q.edges_.end());
  return Path(p.graph_, p.source_, q.range_, std::move(edges));
}

std::optional<Path> strip_prefix(Path const& p, Path const& q) {
  if (p.graph_ != q.graph_ || p.source_ != q.source_) return std::nullopt;
  if (p.edges_.size() > q.edges_.size()) return std::nullopt;
  if (!std::equal(p.edges_.begin(), p.edges_.end(), q.edges_.begin())) return std::nullopt;
  return Path(q.graph_, p.range_, q.range_,
              {q.edges_.begin() + static_cast<std::ptrdiff_t>(p.edges_.size()), q.edges_.end()});
}

bool is_cycle(Path const& p) { return p.source() == p.range(); }

std::string format_path(Graph const& g, Path const& p) {
  if (p.graph_uid() != g.uid()) throw GraphMismatch();
  if (p.empty()) return "@" + g.vertex_name(p.source());
  std::string out;
  for (auto const& e : p.edges()) {
    if (!out.empty()) out += '.';
    out += g.bundle(e.bundle).id;
    out += '[';
    out += std::to_string(e.index);
    out += ']';
  }
  return out;
}

namespace detail {

Path parse_path_at(TextCursor& in, Graph const& g) {
  if (in.consume("@")) {
    auto name = in.name();
    if (in.peek() == '[') {
      if (name != extra_family_name || !g.has_extra_isolated_vertices())
        throw ValidationError("'" + std::string(name) + "[...]' is not an extra isolated vertex");
      in.expect("[");
      auto index = in.integer();
      in.expect("]");
      return Path::vertex(g, Vertex::extra(index));
    }
    auto v = g.find_vertex(name);
    if (!v) throw UnknownVertex(std::string(name));
    return Path::vertex(g, Vertex::core(*v));
  }
  std::vector<EdgeRef> edges;
  do {
    auto id = in.name();
    auto b = g.find_bundle(id);
    in.expect("[");
    auto index = in.integer();
    in.expect("]");
    if (!b) throw ValidationError("unknown bundle '" + std::string(id) + "'");
    edges.push_back({*b, index});
  } while (in.consume("."));
  return Path::from_edges(g, edges);
}

}  // namespace detail

Path parse_path(std::string_view text, Graph const& g) {
  detail::TextCursor in(text);
  in.skip_space();
  auto p = detail::parse_path_at(in, g);
  in.skip_space();
  if (!in.at_end()) in.fail("unexpected trailing input");
  return p;
}

std::vector<Path> enumerate_paths(Graph const& g, std::size_t max_length, std::uint64_t index_limit) {
  std::vector<Path> out;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) out.push_back(Path::vertex(g, Vertex::core(v)));
  if (g.has_extra_isolated_vertices())
    for (std::uint64_t i = 0; i < index_limit; ++i) out.push_back(Path::vertex(g, Vertex::extra(i)));

  std::vector<Path> frontier;
  for (auto const& p : out)
    if (p.source().is_core()) frontier.push_back(p);

  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (auto const& p : frontier) {
      for (auto b : g.out_bundles(p.range().index)) {
        auto const& card = g.bundle(b).card;
        for (std::uint64_t i = 0; i < index_limit && card.admits(i); ++i)
          next.push_back(concat(p, Path::edge(g, {b, i})));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace gis
