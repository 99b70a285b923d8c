#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gis/decider.hpp"
#include "gis/element.hpp"
#include "gis/graph.hpp"
#include "gis/report.hpp"

namespace gis {

// Base at 0 built from the extra isolated vertices:
//   U_n = { w[k] w[k]^-1 : k > n } u {0}.
struct VertexFamilyShape {};

// Base at 0 built from a bad pair (e, f) and the infinite bundle M : e -> f,
// with M[k] the k-th edge of the bundle:
//   U_n = { u M[k] (v M[k])^-1 : u, v in into_e, k > n } u {0}.
// into_e must list every path ending at e.
struct BundleShape {
  std::string e;
  std::string f;
  std::string bundle;
  std::vector<Path> into_e;
};

// Strict is the real construction. Inclusive (k >= n) exists only so the
// verifiers can be checked against a deliberately broken base.
enum class Threshold { strict, inclusive };

// A countable neighborhood base {U_n} of 0 for a non-discrete topology on
// G(E), in which every nonzero element is isolated. The constructor does no
// consistency checking; use construct_base for a validated base.
class NeighborhoodBase {
 public:
  using Shape = std::variant<VertexFamilyShape, BundleShape>;

  NeighborhoodBase(Graph graph, Shape shape, Threshold threshold = Threshold::strict);

  Graph const& graph() const noexcept { return graph_; }
  Shape const& shape() const noexcept { return shape_; }
  Threshold threshold() const noexcept { return threshold_; }

  bool is_vertex_family() const noexcept { return std::holds_alternative<VertexFamilyShape>(shape_); }
  BundleShape const* bundle_shape() const noexcept { return std::get_if<BundleShape>(&shape_); }
  // Index of M in graph().bundles(); only meaningful for BundleShape.
  std::size_t bundle_index() const noexcept { return bundle_index_; }

  // Whether index k is inside U_n.
  bool in_window(std::uint64_t k, std::uint64_t n) const noexcept {
    return threshold_ == Threshold::strict ? k > n : k >= n;
  }

 private:
  Graph graph_;
  Shape shape_;
  Threshold threshold_;
  std::size_t bundle_index_ = 0;
};

// Throws WitnessMismatch when w is not a genuine witness for g.
NeighborhoodBase construct_base(Graph const& g, NonDiscreteWitness const& w);

// x = u M[k] (v M[k])^-1 with u, v in into_e.
struct BundleFactor {
  Path u;
  std::uint64_t k = 0;
  Path v;
};
std::optional<BundleFactor> factor(NeighborhoodBase const& base, Element const& x);

// Exact membership x in U_n. Throws GraphMismatch for elements of another
// graph.
bool member(NeighborhoodBase const& base, std::uint64_t n, Element const& x);

// Zero followed by the members of U_n whose index is at most max_index.
std::vector<Element> enumerate_truncated(NeighborhoodBase const& base, std::uint64_t n,
                                         std::uint64_t max_index);

// On the window of indices <= max_index:
//   base_nested             U_{n+1} is contained in U_n
//   base_finite_difference  U_n \ U_m is exactly the index slice n < k <= m,
//                           recomputed from the graph
//   base_symmetric          x in U_n iff x^-1 in U_n
Report verify_base_axioms(NeighborhoodBase const& base, std::uint64_t max_index);

// Continuity of multiplication at 0, probed with every nonzero s = b c^-1
// where |b|, |c| <= max_length and edge indices <= max_index.
//   vertex family: U_mul_closed, annihilate_left, annihilate_right
//   bundle:        case_1_1, case_1_2, case_1_3, case_2, UU_closed
Report verify_continuity(NeighborhoodBase const& base, Graph const& g, std::uint64_t max_index,
                         std::size_t max_length);

nlohmann::json base_to_json(NeighborhoodBase const& base);
std::string base_to_text(NeighborhoodBase const& base);

}  // namespace gis
