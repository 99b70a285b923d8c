// Acceptance suite. One line per criterion; exit status is nonzero if any
// criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catalogue.hpp"
#include "gis/base.hpp"
#include "gis/decider.hpp"
#include "gis/element.hpp"
#include "gis/errors.hpp"
#include "gis/graph.hpp"
#include "gis/path.hpp"
#include "oracles.hpp"

using namespace gis;

namespace {

// Collects the reasons a criterion failed; empty means it passed.
struct Outcome {
  std::vector<std::string> problems;
  std::string note;  // coverage summary printed after the verdict

  void require(bool ok, std::string const& what) {
    if (!ok) problems.push_back(what);
  }
  void require(Report const& report, std::string const& what) {
    for (auto const& c : report.checks()) {
      if (!c.passed()) {
        std::string line = what + ": " + c.name + " failed " + std::to_string(c.failures) + " times";
        if (!c.counterexamples.empty()) line += " (" + c.counterexamples.front() + ")";
        problems.push_back(line);
      }
    }
  }
  void require_check(Report const& report, std::string const& name, std::string const& what) {
    auto const* c = report.find(name);
    require(c && c->checked > 0, what + ": " + name + " never exercised");
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 means no limit
  std::function<void(Outcome&)> body;
};

Graph finite_only(Graph const& g) {
  std::vector<std::string> vertices(g.vertices().begin(), g.vertices().end());
  std::vector<Bundle> bundles;
  for (auto b : g.bundles()) {
    if (b.card.is_infinite()) b.card = Cardinality::finite(2);
    bundles.push_back(std::move(b));
  }
  return Graph(std::move(vertices), std::move(bundles));
}

std::string describe(Verdict const& v) { return verdict_to_json(v).dump(); }

void presentation_relations(Outcome& out) {
  for (auto const& [name, g] : testing::catalogue()) out.require(verify_relations(g, 5), name);

  for (auto const& g : {testing::p2(), testing::p_omega()}) {
    auto product = multiply(parse_element("a[0]^-1", g), parse_element("a[1]", g));
    out.require(product.is_zero(), "a[0]^-1 . a[1] = " + format_element(g, product));
  }

  for (auto const& [name, g] : testing::catalogue()) {
    for (auto const& x : enumerate_elements(g, 1, 3)) {
      if (x.is_zero() || x.u().length() != 1 || !x.v().empty()) continue;
      auto s = Element::of_vertex(g, x.u().source());
      auto r = Element::of_vertex(g, x.u().range());
      out.require(multiply(s, x) == x && multiply(x, r) == x,
                  name + ": s(e).e = e.r(e) = e fails for " + format_element(g, x));
    }
  }
}

void semigroup_laws(Outcome& out) {
  for (auto const& [name, g] : testing::catalogue()) {
    auto report = verify_laws(g, 2, 2);
    out.require(report, name);
    out.require_check(report, "associativity", name);
    out.require_check(report, "inverse_laws", name);
    if (name == "P2") {
      auto const* a = report.find("associativity");
      out.require(a && a->checked >= 10000,
                  "P2 associativity covered only " + std::to_string(a ? a->checked : 0) + " triples");
      if (a) out.note = std::to_string(a->checked) + " associativity triples on P2";
    }
  }
}

void oracle_equivalence(Outcome& out) {
  std::mt19937 rng(20261016);
  for (auto const& [name, g] : testing::catalogue()) {
    std::vector<Element> pool;
    for (auto const& x : enumerate_elements(g, 3, 3))
      if (x.is_zero() || x.u().length() + x.v().length() <= 3) pool.push_back(x);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int discrepancies = 0;
    std::string first;
    for (int i = 0; i < 1000; ++i) {
      auto const& x = pool[pick(rng)];
      auto const& y = pool[pick(rng)];
      auto got = multiply(x, y);
      auto want = testing::rewrite_product(g, x, y);
      if (got != want) {
        if (discrepancies++ == 0)
          first = format_element(g, x) + " . " + format_element(g, y) + " = " + format_element(g, got) +
                  ", oracle says " + format_element(g, want);
      }
    }
    out.require(discrepancies == 0, name + ": " + std::to_string(discrepancies) +
                                        " discrepancies, first " + first);
  }
}

void golden_verdicts(Outcome& out) {
  auto expect = [&](std::string const& name, Graph const& g, Verdict const& want) {
    auto got = decide(g);
    out.require(got == want, name + ": got " + describe(got) + ", want " + describe(want));
  };
  Verdict discrete{};
  expect("P1", testing::p1(), discrete);
  expect("P_omega", testing::p_omega(), discrete);

  std::mt19937 rng(7);
  for (auto const& [name, g] : testing::catalogue()) {
    auto finite = finite_only(g);
    expect(name + " with finite bundles", finite, discrete);
    for (int i = 0; i < 10; ++i) expect(name + " finite mutation", finite_only(testing::mutate(finite, rng)), discrete);
  }

  expect("two-vertex", testing::two_vertex_infinite(), Verdict{BadPair{"e", "f", "b"}});
  expect("extra family", testing::p1_with_extra_family(), Verdict{InfiniteVertexFamily{}});

  auto loop = testing::loop_plus_infinite();
  expect("loop plus infinite", loop, discrete);
  out.require(!testing::counts_say_finite(loop, loop.vertex_index("e")),
              "loop plus infinite: oracle finds finitely many paths into e");
}

void finiteness_cross_check(Outcome& out) {
  std::vector<testing::Named> graphs = testing::catalogue();
  std::mt19937 rng(1234);
  auto base = testing::catalogue();
  for (int i = 0; i < 50; ++i) {
    auto const& [name, g] = base[i % base.size()];
    graphs.push_back({name + " mutation " + std::to_string(i), testing::mutate(g, rng)});
  }
  std::size_t finite = 0;
  std::size_t infinite = 0;
  for (auto const& [name, g] : graphs) {
    for (std::size_t e = 0; e < g.vertices().size(); ++e) {
      auto const& vertex = g.vertices()[e];
      auto verdict = paths_into_vertex_finite(g, vertex);
      auto where = name + " at " + vertex;
      bool oracle_finite = testing::counts_say_finite(g, e);
      out.require(verdict.finite == oracle_finite, where + ": finiteness disagrees with the oracle");
      ++(verdict.finite ? finite : infinite);
      if (!verdict.finite || !oracle_finite) continue;
      auto oracle = testing::bounded_paths_into(g, e, 12, 12);
      std::set<Path> want(oracle.begin(), oracle.end());
      std::set<Path> got(verdict.paths.begin(), verdict.paths.end());
      out.require(got.size() == verdict.paths.size(), where + ": duplicate paths");
      out.require(got == want, where + ": path list differs from brute force");
    }
  }
  out.note = std::to_string(graphs.size()) + " graphs, " + std::to_string(finite) + " finite and " +
             std::to_string(infinite) + " infinite path sets";
}

void base_verification(Outcome& out) {
  constexpr std::uint64_t k = 20;
  constexpr std::size_t l = 4;

  auto family = testing::p1_with_extra_family();
  auto family_base = construct_base(family, InfiniteVertexFamily{});
  auto axioms = verify_base_axioms(family_base, k);
  auto continuity = verify_continuity(family_base, family, k, l);
  out.require(axioms, "vertex family");
  out.require(continuity, "vertex family");
  for (auto name : {"base_nested", "base_finite_difference", "base_symmetric"})
    out.require_check(axioms, name, "vertex family");
  for (auto name : {"U_mul_closed", "annihilate_left", "annihilate_right"})
    out.require_check(continuity, name, "vertex family");

  auto two = testing::two_vertex_infinite();
  auto bundle_base = construct_base(two, BadPair{"e", "f", "b"});
  axioms = verify_base_axioms(bundle_base, k);
  continuity = verify_continuity(bundle_base, two, k, l);
  out.require(axioms, "bundle");
  out.require(continuity, "bundle");
  for (auto name : {"base_nested", "base_finite_difference", "base_symmetric"})
    out.require_check(axioms, name, "bundle");
  for (auto name : {"UU_closed", "case_1_1", "case_1_2", "case_1_3", "case_2"})
    out.require_check(continuity, name, "bundle");

  // Negative controls.
  auto shape = *bundle_base.bundle_shape();
  shape.into_e.pop_back();
  auto corrupted = verify_base_axioms(NeighborhoodBase(two, shape), k);
  auto const* difference = corrupted.find("base_finite_difference");
  out.require(difference && !difference->passed(), "corrupted into_e passes base_finite_difference");

  NeighborhoodBase inclusive(two, bundle_base.shape(), Threshold::inclusive);
  auto shifted = verify_continuity(inclusive, two, k, l);
  auto const* through = shifted.find("case_1_2");
  out.require(through && !through->passed(), "threshold k >= n passes case_1_2");
}

void every_vertex_on_cycle(Outcome& out) {
  std::mt19937 rng(99);
  for (int i = 0; i < 20; ++i) {
    auto g = testing::random_cyclic_graph(rng);
    auto verdict = decide(g);
    out.require(verdict.discrete_only(), "graph\n" + format_graph(g) + "got " + describe(verdict));
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "presentation relations", 1.0, presentation_relations},
      {2, "inverse semigroup laws", 30.0, semigroup_laws},
      {3, "multiply agrees with the rewriting oracle", 0.0, oracle_equivalence},
      {4, "decider golden verdicts", 0.0, golden_verdicts},
      {5, "finiteness cross-check against brute force", 0.0, finiteness_cross_check},
      {6, "neighborhood bases, K=20 L=4", 60.0, base_verification},
      {7, "graphs with a cycle through every vertex are discrete only", 0.0, every_vertex_on_cycle},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (std::exception const& ex) {
      outcome.problems.push_back(std::string("exception: ") + ex.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      std::ostringstream limit;
      limit << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      outcome.problems.push_back(limit.str());
    }

    bool ok = outcome.problems.empty();
    failed += ok ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.number << " " << c.title << " (" << timing << ")\n";
    if (!outcome.note.empty()) std::cout << "       " << outcome.note << "\n";
    for (auto const& p : outcome.problems) std::cout << "       " << p << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
