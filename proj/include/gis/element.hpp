#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gis/graph.hpp"
#include "gis/path.hpp"
#include "gis/report.hpp"

namespace gis {

// An element of the graph inverse semigroup G(E): either zero or u v^-1 with
// range(u) == range(v). The pair (u, v) is a normal form, so equality is
// componentwise.
class Element {
 public:
  static Element zero() { return Element(); }
  // Throws ValidationError if range(u) != range(v), GraphMismatch if the
  // paths come from different graphs.
  static Element make(Path u, Path v);
  // p == p (r(p))^-1.
  static Element of_path(Path p);
  // The idempotent @v @v^-1.
  static Element of_vertex(Graph const& g, Vertex v);

  bool is_zero() const noexcept { return !parts_.has_value(); }
  // Preconditions: !is_zero().
  Path const& u() const { return parts_->first; }
  Path const& v() const { return parts_->second; }

  friend auto operator<=>(Element const&, Element const&) = default;
  friend bool operator==(Element const&, Element const&) = default;

 private:
  Element() = default;
  Element(Path u, Path v) : parts_(std::in_place, std::move(u), std::move(v)) {}

  std::optional<std::pair<Path, Path>> parts_;
};

// Throws GraphMismatch when both operands are nonzero and come from
// different graphs.
Element multiply(Element const& x, Element const& y);
Element invert(Element const& x);

// elem := "0" | path | path "^-1" | path "*" path "^-1"
Element parse_element(std::string_view text, Graph const& g);
// "0" or "u * v^-1"; always accepted by parse_element.
std::string format_element(Graph const& g, Element const& x);

// Zero followed by every u v^-1 with u, v from enumerate_paths(g,
// max_length, index_limit) and equal ranges.
std::vector<Element> enumerate_elements(Graph const& g, std::size_t max_length,
                                        std::uint64_t index_limit);

// Checks the defining relations of G(E) through multiply, for all core
// vertices and every edge with index < index_bound:
//   relation_i    a.b = a if a = b, else 0
//   relation_ii   s(e).e = e.r(e) = e
//   relation_iii  e^-1.s(e) = r(e).e^-1 = e^-1
//   relation_iv   e^-1.f = r(e) if e = f, else 0
Report verify_relations(Graph const& g, std::uint64_t index_bound);

// Inverse-semigroup laws over enumerate_elements(g, max_length,
// index_limit): associativity (all triples), inverse_laws, antihomomorphism,
// zero_absorbing, idempotents (x.x = x iff x is zero or u = v).
Report verify_laws(Graph const& g, std::size_t max_length, std::uint64_t index_limit);

}  // namespace gis
