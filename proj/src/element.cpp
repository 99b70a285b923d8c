#include "gis/element.hpp"

#include "gis/errors.hpp"
#include "path_parser.hpp"

namespace gis {

Element Element::make(Path u, Path v) {
  if (u.graph_uid() != v.graph_uid()) throw GraphMismatch();
  if (u.range() != v.range()) throw ValidationError("r(u) != r(v) in u v^-1");
  return Element(std::move(u), std::move(v));
}

Element Element::of_path(Path p) {
  auto tail = *strip_prefix(p, p);
  return Element(std::move(p), std::move(tail));
}

Element Element::of_vertex(Graph const& g, Vertex v) {
  auto p = Path::vertex(g, v);
  return Element(p, p);
}

Element multiply(Element const& x, Element const& y) {
  if (x.is_zero() || y.is_zero()) return Element::zero();
  if (x.u().graph_uid() != y.u().graph_uid()) throw GraphMismatch();
  // (u1 v1^-1)(u2 v2^-1): u1 w v2^-1 if u2 = v1 w, u1 (v2 w)^-1 if v1 = u2 w.
  if (auto w = strip_prefix(x.v(), y.u())) return Element::make(concat(x.u(), *w), y.v());
  if (auto w = strip_prefix(y.u(), x.v())) return Element::make(x.u(), concat(y.v(), *w));
  return Element::zero();
}

Element invert(Element const& x) {
  if (x.is_zero()) return x;
  return Element::make(x.v(), x.u());
}

Element parse_element(std::string_view text, Graph const& g) {
  detail::TextCursor in(text);
  in.skip_space();
  if (in.consume("0")) {
    in.skip_space();
    if (in.at_end()) return Element::zero();
    // A bundle or vertex whose name starts with a digit; reparse as a path.
    in = detail::TextCursor(text);
    in.skip_space();
  }
  auto first = detail::parse_path_at(in, g);
  in.skip_space();
  Element result = Element::zero();
  if (in.consume("^-1")) {
    auto r = Path::vertex(g, first.range());
    result = Element::make(r, first);
  } else if (in.consume("*")) {
    in.skip_space();
    auto second = detail::parse_path_at(in, g);
    in.skip_space();
    in.expect("^-1");
    result = Element::make(first, second);
  } else {
    result = Element::of_path(first);
  }
  in.skip_space();
  if (!in.at_end()) in.fail("unexpected trailing input");
  return result;
}

std::string format_element(Graph const& g, Element const& x) {
  if (x.is_zero()) return "0";
  return format_path(g, x.u()) + " * " + format_path(g, x.v()) + "^-1";
}

std::vector<Element> enumerate_elements(Graph const& g, std::size_t max_length,
                                        std::uint64_t index_limit) {
  auto paths = enumerate_paths(g, max_length, index_limit);
  std::vector<Element> out{Element::zero()};
  for (auto const& u : paths)
    for (auto const& v : paths)
      if (u.range() == v.range()) out.push_back(Element::make(u, v));
  return out;
}

Report verify_relations(Graph const& g, std::uint64_t index_bound) {
  Report report;
  auto show = [&](Element const& x) { return format_element(g, x); };

  std::vector<Element> vertices;
  for (std::size_t i = 0; i < g.vertices().size(); ++i)
    vertices.push_back(Element::of_vertex(g, Vertex::core(i)));

  std::vector<Path> edges;
  for (std::size_t b = 0; b < g.bundles().size(); ++b)
    for (std::uint64_t i = 0; i < index_bound && g.bundle(b).card.admits(i); ++i)
      edges.push_back(Path::edge(g, {b, i}));

  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) {
      auto got = multiply(vertices[a], vertices[b]);
      auto want = a == b ? vertices[a] : Element::zero();
      report.record("relation_i", got == want,
                    [&] { return show(vertices[a]) + " . " + show(vertices[b]) + " = " + show(got); });
    }
  }

  for (auto const& edge : edges) {
    auto e = Element::of_path(edge);
    auto e_inv = invert(e);
    auto s = Element::of_vertex(g, edge.source());
    auto r = Element::of_vertex(g, edge.range());

    auto se = multiply(s, e);
    auto er = multiply(e, r);
    report.record("relation_ii", se == e && er == e, [&] {
      return "s(e).e = " + show(se) + ", e.r(e) = " + show(er) + " for e = " + show(e);
    });

    auto es = multiply(e_inv, s);
    auto re = multiply(r, e_inv);
    report.record("relation_iii", es == e_inv && re == e_inv, [&] {
      return "e^-1.s(e) = " + show(es) + ", r(e).e^-1 = " + show(re) + " for e = " + show(e);
    });

    for (auto const& other : edges) {
      auto f = Element::of_path(other);
      auto got = multiply(e_inv, f);
      auto want = edge == other ? r : Element::zero();
      report.record("relation_iv", got == want,
                    [&] { return show(e_inv) + " . " + show(f) + " = " + show(got); });
    }
  }
  return report;
}

Report verify_laws(Graph const& g, std::size_t max_length, std::uint64_t index_limit) {
  Report report;
  auto elements = enumerate_elements(g, max_length, index_limit);
  auto show = [&](Element const& x) { return format_element(g, x); };

  // Cache all pairwise products; associativity then costs one lookup-free
  // multiply per side.
  std::size_t const n = elements.size();
  std::vector<Element> table;
  table.reserve(n * n);
  for (auto const& x : elements)
    for (auto const& y : elements) table.push_back(multiply(x, y));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto const& xy = table[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        auto left = multiply(xy, elements[k]);
        auto right = multiply(elements[i], table[j * n + k]);
        report.record("associativity", left == right, [&] {
          return "(" + show(elements[i]) + ")(" + show(elements[j]) + ")(" + show(elements[k]) + ")";
        });
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto const& x = elements[i];
    auto xi = invert(x);
    bool laws = multiply(multiply(x, xi), x) == x && multiply(multiply(xi, x), xi) == xi;
    report.record("inverse_laws", laws, [&] { return show(x); });

    bool absorbing = multiply(Element::zero(), x).is_zero() && multiply(x, Element::zero()).is_zero();
    report.record("zero_absorbing", absorbing, [&] { return show(x); });

    bool idempotent = table[i * n + i] == x;
    bool diagonal = x.is_zero() || x.u() == x.v();
    report.record("idempotents", idempotent == diagonal, [&] { return show(x); });

    for (std::size_t j = 0; j < n; ++j) {
      auto const& y = elements[j];
      bool anti = invert(table[i * n + j]) == multiply(invert(y), xi);
      report.record("antihomomorphism", anti, [&] { return show(x) + " , " + show(y); });
    }
  }
  return report;
}

}  // namespace gis
