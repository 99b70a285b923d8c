#include "gis/base.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gis/errors.hpp"

namespace gis {

namespace {

std::size_t resolve_bundle(Graph const& g, NeighborhoodBase::Shape const& shape) {
  auto const* b = std::get_if<BundleShape>(&shape);
  if (!b) return 0;
  auto index = g.find_bundle(b->bundle);
  if (!index) throw ValidationError("unknown bundle '" + b->bundle + "'");
  return *index;
}

bool contains_path(std::vector<Path> const& paths, Path const& p) {
  return std::find(paths.begin(), paths.end(), p) != paths.end();
}

// How a probe path c relates to the base (s = b c^-1 multiplied on the
// right by members of U):
//   prefix   c d = u for some u in into_e
//   through  c = u M[n0] d for some u in into_e
//   other    neither
struct Classified {
  enum class Kind { prefix, through, other } kind = Kind::other;
  std::uint64_t n0 = 0;
};

Classified classify(NeighborhoodBase const& base, Path const& c) {
  auto const& shape = *base.bundle_shape();
  for (auto const& u : shape.into_e) {
    if (strip_prefix(c, u)) return {Classified::Kind::prefix, 0};
    if (c.length() > u.length() && strip_prefix(u, c)) {
      auto next = c.edges()[u.length()];
      if (next.bundle == base.bundle_index()) return {Classified::Kind::through, next.index};
    }
  }
  return {};
}

// E[n] = enumerate_truncated(base, n, max_index) for n = 0..max_index.
std::vector<std::vector<Element>> windows(NeighborhoodBase const& base, std::uint64_t max_index) {
  std::vector<std::vector<Element>> out;
  for (std::uint64_t n = 0; n <= max_index; ++n) out.push_back(enumerate_truncated(base, n, max_index));
  return out;
}

std::vector<Element> nonzero_probes(Graph const& g, std::size_t max_length, std::uint64_t max_index) {
  auto all = enumerate_elements(g, max_length, max_index + 1);
  all.erase(all.begin());  // zero
  return all;
}

std::string triple(Graph const& g, Element const& s, Element const& x, Element const& product,
                   std::uint64_t n) {
  return "s = " + format_element(g, s) + ", x = " + format_element(g, x) + ", product = " +
         format_element(g, product) + ", n = " + std::to_string(n);
}

}  // namespace

NeighborhoodBase::NeighborhoodBase(Graph graph, Shape shape, Threshold threshold)
    : graph_(std::move(graph)),
      shape_(std::move(shape)),
      threshold_(threshold),
      bundle_index_(resolve_bundle(graph_, shape_)) {}

NeighborhoodBase construct_base(Graph const& g, NonDiscreteWitness const& w) {
  if (std::holds_alternative<InfiniteVertexFamily>(w)) {
    if (!g.has_extra_isolated_vertices())
      throw WitnessMismatch("graph has no infinite family of extra vertices");
    return NeighborhoodBase(g, VertexFamilyShape{});
  }
  auto const& pair = std::get<BadPair>(w);
  auto e = g.find_vertex(pair.e);
  auto f = g.find_vertex(pair.f);
  auto b = g.find_bundle(pair.bundle);
  if (!e || !f || !b) throw WitnessMismatch("bad pair names an unknown vertex or bundle");
  if (g.src_of(*b) != *e || g.dst_of(*b) != *f)
    throw WitnessMismatch("bundle '" + pair.bundle + "' does not go from " + pair.e + " to " + pair.f);
  if (g.bundle(*b).card.is_finite())
    throw WitnessMismatch("bundle '" + pair.bundle + "' is finite");
  auto into = paths_into_vertex_finite(g, pair.e);
  if (!into.finite) throw WitnessMismatch("infinitely many paths end at " + pair.e);
  return NeighborhoodBase(g, BundleShape{pair.e, pair.f, pair.bundle, std::move(into.paths)});
}

std::optional<BundleFactor> factor(NeighborhoodBase const& base, Element const& x) {
  auto const* shape = base.bundle_shape();
  if (!shape || x.is_zero()) return std::nullopt;
  auto const& p = x.u();
  auto const& q = x.v();
  if (p.empty() || q.empty()) return std::nullopt;
  auto last_p = p.edges().back();
  auto last_q = q.edges().back();
  if (last_p != last_q || last_p.bundle != base.bundle_index()) return std::nullopt;

  auto const& g = base.graph();
  auto m = Path::edge(g, last_p);
  auto head = [&](Path const& path) -> std::optional<Path> {
    auto edges = path.edges().first(path.length() - 1);
    auto prefix = edges.empty() ? Path::vertex(g, m.source()) : Path::from_edges(g, edges);
    if (!contains_path(shape->into_e, prefix)) return std::nullopt;
    return prefix;
  };
  auto u = head(p);
  auto v = head(q);
  if (!u || !v) return std::nullopt;
  return BundleFactor{*u, last_p.index, *v};
}

bool member(NeighborhoodBase const& base, std::uint64_t n, Element const& x) {
  if (x.is_zero()) return true;
  if (x.u().graph_uid() != base.graph().uid()) throw GraphMismatch();
  if (base.is_vertex_family()) {
    auto const& u = x.u();
    return u.empty() && !u.source().is_core() && x.v() == u && base.in_window(u.source().index, n);
  }
  auto f = factor(base, x);
  return f && base.in_window(f->k, n);
}

std::vector<Element> enumerate_truncated(NeighborhoodBase const& base, std::uint64_t n,
                                         std::uint64_t max_index) {
  std::vector<Element> out{Element::zero()};
  auto const& g = base.graph();
  for (std::uint64_t k = n; k <= max_index; ++k) {
    if (!base.in_window(k, n)) continue;
    if (base.is_vertex_family()) {
      out.push_back(Element::of_vertex(g, Vertex::extra(k)));
      continue;
    }
    auto m = Path::edge(g, {base.bundle_index(), k});
    auto const& into = base.bundle_shape()->into_e;
    for (auto const& u : into)
      for (auto const& v : into) out.push_back(Element::make(concat(u, m), concat(v, m)));
  }
  return out;
}

Report verify_base_axioms(NeighborhoodBase const& base, std::uint64_t max_index) {
  Report report;
  auto const& g = base.graph();
  auto show = [&](Element const& x) { return format_element(g, x); };
  auto e = windows(base, max_index);

  for (std::uint64_t n = 0; n < max_index; ++n) {
    for (auto const& x : e[n + 1])
      report.record("base_nested", member(base, n, x) && member(base, n + 1, x), [&] {
        return show(x) + " in U_" + std::to_string(n + 1) + " but not in U_" + std::to_string(n);
      });
    for (auto const& x : e[n])
      report.record("base_nested", member(base, n, x), [&] {
        return show(x) + " enumerated for U_" + std::to_string(n) + " but not a member";
      });
  }

  // The slice is rebuilt from the graph rather than from the base, so a base
  // with an incomplete into_e is caught.
  std::vector<Path> into_e;
  if (auto const* shape = base.bundle_shape()) {
    auto into = paths_into_vertex_finite(g, shape->e);
    if (!into.finite) {
      report.fail("base_finite_difference", "infinitely many paths end at " + shape->e);
      return report;
    }
    into_e = std::move(into.paths);
  }
  auto slice = [&](std::uint64_t n, std::uint64_t m) {
    std::set<Element> out;
    for (std::uint64_t k = n + 1; k <= m; ++k) {
      if (base.is_vertex_family()) {
        out.insert(Element::of_vertex(g, Vertex::extra(k)));
        continue;
      }
      auto edge = Path::edge(g, {base.bundle_index(), k});
      for (auto const& u : into_e)
        for (auto const& v : into_e) out.insert(Element::make(concat(u, edge), concat(v, edge)));
    }
    return out;
  };
  for (std::uint64_t n = 0; n < max_index; ++n) {
    std::set<Element> big(e[n].begin(), e[n].end());
    for (std::uint64_t m = n + 1; m <= max_index; ++m) {
      std::set<Element> small(e[m].begin(), e[m].end());
      std::set<Element> difference;
      std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                          std::inserter(difference, difference.end()));
      bool ok = difference == slice(n, m);
      for (auto const& x : difference) ok = ok && member(base, n, x) && !member(base, m, x);
      report.record("base_finite_difference", ok, [&] {
        return "U_" + std::to_string(n) + " \\ U_" + std::to_string(m) + " has " +
               std::to_string(difference.size()) + " elements, expected slice has " +
               std::to_string(slice(n, m).size());
      });
    }
  }

  auto probes = e[0];
  auto small = enumerate_elements(g, 2, 3);
  probes.insert(probes.end(), small.begin(), small.end());
  for (auto const& x : probes) {
    auto xi = invert(x);
    for (std::uint64_t n = 0; n <= max_index; ++n)
      report.record("base_symmetric", member(base, n, x) == member(base, n, xi),
                    [&] { return show(x) + " vs its inverse at n = " + std::to_string(n); });
  }
  return report;
}

namespace {

// E_0 with the index of each element: k for u M[k] (v M[k])^-1 or w[k],
// nullopt for 0, which lies in every U_n. Each product is formed once and
// then checked against every U_n that holds its factor.
struct Indexed {
  std::vector<Element> elements;
  std::vector<std::optional<std::uint64_t>> index;

  bool in(NeighborhoodBase const& base, std::size_t i, std::uint64_t n) const {
    return !index[i] || base.in_window(*index[i], n);
  }
};

Indexed indexed_window(NeighborhoodBase const& base, std::uint64_t max_index) {
  Indexed out{enumerate_truncated(base, 0, max_index), {}};
  for (auto const& x : out.elements) {
    if (x.is_zero()) {
      out.index.push_back(std::nullopt);
    } else if (base.is_vertex_family()) {
      out.index.push_back(x.u().source().index);
    } else {
      out.index.push_back(x.u().edges().back().index);
    }
  }
  return out;
}

void vertex_family_continuity(NeighborhoodBase const& base, std::vector<Element> const& probes,
                              std::uint64_t max_index, Report& report) {
  auto const& g = base.graph();
  auto e = indexed_window(base, max_index);
  auto const& xs = e.elements;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      auto p = multiply(xs[i], xs[j]);
      for (std::uint64_t n = 1; n <= max_index; ++n) {
        if (!e.in(base, i, n) || !e.in(base, j, n)) continue;
        report.record("U_mul_closed", member(base, n, p),
                      [&] { return triple(g, xs[i], xs[j], p, n); });
      }
    }
  }
  for (auto const& s : probes) {
    auto left_spared = Element::of_vertex(g, s.v().source());
    auto right_spared = Element::of_vertex(g, s.u().source());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto const& x = xs[i];
      auto sx = x != left_spared ? multiply(s, x) : Element::zero();
      auto xs_ = x != right_spared ? multiply(x, s) : Element::zero();
      for (std::uint64_t n = 1; n <= max_index; ++n) {
        if (!e.in(base, i, n)) continue;
        if (x != left_spared)
          report.record("annihilate_left", sx.is_zero(), [&] { return triple(g, s, x, sx, n); });
        if (x != right_spared)
          report.record("annihilate_right", xs_.is_zero(), [&] { return triple(g, s, x, xs_, n); });
      }
    }
  }
}

void bundle_continuity(NeighborhoodBase const& base, std::vector<Element> const& probes,
                       std::uint64_t max_index, Report& report) {
  auto const& g = base.graph();
  auto e = indexed_window(base, max_index);
  auto const& xs = e.elements;

  // Right multiplication s . U. Left multiplication reuses the same
  // classification on the inverse: x . s = (s^-1 . x^-1)^-1.
  for (auto const& s : probes) {
    auto si = invert(s);
    for (bool left : {false, true}) {
      auto const& c = left ? s.u() : s.v();
      auto kind = classify(base, c);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        auto const& x = xs[i];
        // Only U_1 matters when c leaves the base.
        if (kind.kind == Classified::Kind::other && !e.in(base, i, 1)) continue;
        auto p = left ? multiply(x, s) : multiply(s, x);
        bool mirrored = !left || p == invert(multiply(si, invert(x)));
        auto record = [&](char const* name, bool ok, std::uint64_t n) {
          report.record(left ? "case_2" : name, ok && mirrored,
                        [&] { return triple(g, s, x, p, n); });
        };
        switch (kind.kind) {
          case Classified::Kind::prefix:
            for (std::uint64_t k = 1; k <= max_index; ++k)
              if (e.in(base, i, k)) record("case_1_1", member(base, k, p), k);
            break;
          case Classified::Kind::through:
            for (std::uint64_t k = 1; k <= max_index; ++k)
              for (auto m : {std::max(kind.n0, k), std::max(kind.n0 + 1, k)})
                if (e.in(base, i, m)) record("case_1_2", p.is_zero(), m);
            break;
          case Classified::Kind::other:
            record("case_1_3", p.is_zero(), 1);
            break;
        }
      }
    }
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      auto const& x = xs[i];
      auto const& y = xs[j];
      auto p = multiply(x, y);
      auto fx = factor(base, x);
      auto fy = factor(base, y);
      bool identity = true;
      if (fx && fy) {
        // u1 M[n] (v1 M[n])^-1 . u2 M[m] (v2 M[m])^-1 is u1 M[n] (v2 M[n])^-1
        // when v1 = u2 and n = m, and 0 otherwise.
        auto expected = Element::zero();
        if (fx->v == fy->u && fx->k == fy->k) {
          auto m = Path::edge(g, {base.bundle_index(), fx->k});
          expected = Element::make(concat(fx->u, m), concat(fy->v, m));
        }
        identity = p == expected;
      }
      for (std::uint64_t k = 1; k <= max_index; ++k) {
        if (!e.in(base, i, k) || !e.in(base, j, k)) continue;
        report.record("UU_closed", identity && member(base, k, p),
                      [&] { return triple(g, x, y, p, k); });
      }
    }
  }
}

}  // namespace

Report verify_continuity(NeighborhoodBase const& base, Graph const& g, std::uint64_t max_index,
                         std::size_t max_length) {
  if (g.uid() != base.graph().uid()) throw GraphMismatch();
  Report report;
  auto probes = nonzero_probes(g, max_length, max_index);
  if (base.is_vertex_family()) {
    vertex_family_continuity(base, probes, max_index, report);
  } else {
    bundle_continuity(base, probes, max_index, report);
  }
  return report;
}

nlohmann::json base_to_json(NeighborhoodBase const& base) {
  if (base.is_vertex_family())
    return {{"case", "vertices"}, {"family", std::string(extra_family_name)}};
  auto const& shape = *base.bundle_shape();
  nlohmann::json into = nlohmann::json::array();
  for (auto const& p : shape.into_e) into.push_back(format_path(base.graph(), p));
  return {{"case", "bundle"}, {"e", shape.e}, {"f", shape.f}, {"bundle", shape.bundle}, {"into_e", into}};
}

std::string base_to_text(NeighborhoodBase const& base) {
  std::ostringstream out;
  if (base.is_vertex_family()) {
    out << "case: vertices\n"
        << "U_n = { @" << extra_family_name << "[k] * @" << extra_family_name
        << "[k]^-1 : k > n } + {0}\n";
    return out.str();
  }
  auto const& shape = *base.bundle_shape();
  out << "case: bundle\n"
      << "e: " << shape.e << "\nf: " << shape.f << "\nbundle: " << shape.bundle << "\ninto_e:";
  for (auto const& p : shape.into_e) out << ' ' << format_path(base.graph(), p);
  out << "\nU_n = { u." << shape.bundle << "[k] * (v." << shape.bundle
      << "[k])^-1 : u, v in into_e, k > n } + {0}\n";
  return out.str();
}

}  // namespace gis
