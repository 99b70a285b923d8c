#include "gis/decider.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "gis/errors.hpp"

namespace gis {

namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

// Forward BFS from src. parent[v] is the bundle used to first reach v.
struct Bfs {
  std::vector<std::size_t> dist;
  std::vector<std::size_t> parent;
};

Bfs forward_bfs(Graph const& g, std::size_t src) {
  auto n = g.vertices().size();
  Bfs out{std::vector<std::size_t>(n, unreached), std::vector<std::size_t>(n, unreached)};
  std::deque<std::size_t> queue{src};
  out.dist[src] = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto b : g.out_bundles(v)) {
      auto w = g.dst_of(b);
      if (out.dist[w] != unreached) continue;
      out.dist[w] = out.dist[v] + 1;
      out.parent[w] = b;
      queue.push_back(w);
    }
  }
  return out;
}

std::vector<bool> reaching(Graph const& g, std::size_t dst) {
  std::vector<bool> seen(g.vertices().size(), false);
  std::deque<std::size_t> queue{dst};
  seen[dst] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto b : g.in_bundles(v)) {
      auto w = g.src_of(b);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

// Shortest path src -> dst through index-0 edges; dst must be reachable.
Path path_between(Graph const& g, Bfs const& bfs, std::size_t src, std::size_t dst) {
  std::vector<EdgeRef> edges;
  for (auto v = dst; v != src; v = g.src_of(bfs.parent[v])) edges.push_back({bfs.parent[v], 0});
  if (edges.empty()) return Path::vertex(g, Vertex::core(src));
  std::reverse(edges.begin(), edges.end());
  return Path::from_edges(g, edges);
}

// Shortest nonempty cycle through v, if any.
std::optional<Path> cycle_through(Graph const& g, std::size_t v) {
  auto bfs = forward_bfs(g, v);
  std::optional<std::size_t> best;
  for (auto b : g.in_bundles(v)) {
    auto s = g.src_of(b);
    if (bfs.dist[s] == unreached) continue;
    if (!best || bfs.dist[s] < bfs.dist[g.src_of(*best)]) best = b;
  }
  if (!best) return std::nullopt;
  return concat(path_between(g, bfs, v, g.src_of(*best)), Path::edge(g, {*best, 0}));
}

// All paths into e, assuming the set is finite.
std::vector<Path> all_paths_into(Graph const& g, std::size_t e) {
  std::vector<Path> out{Path::vertex(g, Vertex::core(e))};
  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      auto head = out[i].source().index;
      for (auto b : g.in_bundles(head)) {
        auto count = g.bundle(b).card.count();
        for (std::uint64_t k = 0; k < count; ++k) out.push_back(concat(Path::edge(g, {b, k}), out[i]));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace

bool reaches(Graph const& g, std::string_view src, std::string_view dst) {
  auto s = g.vertex_index(src);
  auto d = g.vertex_index(dst);
  return forward_bfs(g, s).dist[d] != unreached;
}

FinitenessVerdict paths_into_vertex_finite(Graph const& g, std::string_view e) {
  auto target = g.vertex_index(e);
  auto into = reaching(g, target);
  FinitenessVerdict verdict;

  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (!into[v]) continue;
    if (auto cycle = cycle_through(g, v)) {
      verdict.witness = CycleReaching{*cycle, path_between(g, forward_bfs(g, v), v, target)};
      return verdict;
    }
  }
  for (std::size_t b = 0; b < g.bundles().size(); ++b) {
    auto d = g.dst_of(b);
    if (g.bundle(b).card.is_infinite() && into[d]) {
      verdict.witness = InfiniteBundleReaching{g.bundle(b).id, path_between(g, forward_bfs(g, d), d, target)};
      return verdict;
    }
  }
  verdict.finite = true;
  verdict.paths = all_paths_into(g, target);
  return verdict;
}

std::optional<BadPair> find_bad_pair(Graph const& g) {
  auto n = g.vertices().size();
  for (std::size_t e = 0; e < n; ++e) {
    auto out = g.out_bundles(e);
    bool any_infinite = std::any_of(out.begin(), out.end(),
                                    [&](std::size_t b) { return g.bundle(b).card.is_infinite(); });
    if (!any_infinite || !paths_into_vertex_finite(g, g.vertices()[e]).finite) continue;
    for (std::size_t f = 0; f < n; ++f)
      for (auto b : out)
        if (g.dst_of(b) == f && g.bundle(b).card.is_infinite())
          return BadPair{g.vertices()[e], g.vertices()[f], g.bundle(b).id};
  }
  return std::nullopt;
}

Verdict decide(Graph const& g) {
  if (g.has_extra_isolated_vertices()) return Verdict{InfiniteVertexFamily{}};
  if (auto pair = find_bad_pair(g)) return Verdict{*pair};
  return Verdict{};
}

nlohmann::json verdict_to_json(Verdict const& v) {
  if (v.discrete_only()) return {{"verdict", "discrete_only"}};
  nlohmann::json witness;
  if (std::holds_alternative<InfiniteVertexFamily>(*v.witness)) {
    witness = {{"kind", "infinite_vertex_family"}};
  } else {
    auto const& p = std::get<BadPair>(*v.witness);
    witness = {{"kind", "bad_pair"}, {"e", p.e}, {"f", p.f}, {"bundle", p.bundle}};
  }
  return {{"verdict", "non_discrete"}, {"witness", witness}};
}

std::string verdict_to_text(Verdict const& v) {
  if (v.discrete_only()) return "discrete_only\n";
  if (std::holds_alternative<InfiniteVertexFamily>(*v.witness))
    return "non_discrete\nwitness: infinite_vertex_family\n";
  auto const& p = std::get<BadPair>(*v.witness);
  return "non_discrete\nwitness: bad_pair e=" + p.e + " f=" + p.f + " bundle=" + p.bundle + "\n";
}

nlohmann::json finiteness_to_json(Graph const& g, FinitenessVerdict const& v) {
  nlohmann::json out{{"finite", v.finite}};
  if (auto const* c = std::get_if<CycleReaching>(&v.witness)) {
    out["witness"] = {{"kind", "cycle"},
                      {"cycle", format_path(g, c->cycle)},
                      {"connector", format_path(g, c->connector)}};
  } else if (auto const* b = std::get_if<InfiniteBundleReaching>(&v.witness)) {
    out["witness"] = {{"kind", "infinite_bundle"},
                      {"bundle", b->bundle},
                      {"connector", format_path(g, b->connector)}};
  }
  if (v.finite) {
    auto& paths = out["paths"] = nlohmann::json::array();
    for (auto const& p : v.paths) paths.push_back(format_path(g, p));
  }
  return out;
}

}  // namespace gis
