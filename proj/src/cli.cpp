#include "gis/cli.hpp"

#include <CLI11.hpp>

#include "gis/base.hpp"
#include "gis/decider.hpp"
#include "gis/element.hpp"
#include "gis/errors.hpp"
#include "gis/graph.hpp"

namespace gis::cli {

namespace {

struct Options {
  std::string graph_path;
  std::vector<std::string> operands;
  std::uint64_t k = 20;
  std::size_t l = 4;
  std::size_t law_length = 2;
  std::uint64_t law_indices = 2;
  bool json = false;
};

class NoBase : public Error {
 public:
  NoBase() : Error("graph admits only the discrete locally compact topology; no base at 0 to build") {}
};

NeighborhoodBase base_for(Graph const& g) {
  auto verdict = decide(g);
  if (verdict.discrete_only()) throw NoBase();
  return construct_base(g, *verdict.witness);
}

int emit_report(std::ostream& out, Options const& opt, std::vector<std::pair<std::string, Report>> const& parts) {
  bool passed = true;
  for (auto const& [name, report] : parts) passed = passed && report.passed();
  if (opt.json) {
    nlohmann::json doc{{"passed", passed}};
    for (auto const& [name, report] : parts) doc[name] = report.to_json();
    out << doc.dump(2) << '\n';
  } else {
    for (auto const& [name, report] : parts) out << "[" << name << "]\n" << report.to_text();
  }
  return passed ? success : verification_failure;
}

void print_element(std::ostream& out, Options const& opt, Graph const& g, Element const& x) {
  if (opt.json) {
    out << nlohmann::json{{"element", format_element(g, x)}}.dump() << '\n';
  } else {
    out << format_element(g, x) << '\n';
  }
}

int dispatch(std::string const& command, Options const& opt, std::ostream& out) {
  auto g = load_graph(opt.graph_path);
  if (command == "mul") {
    auto acc = parse_element(opt.operands.at(0), g);
    for (std::size_t i = 1; i < opt.operands.size(); ++i) acc = multiply(acc, parse_element(opt.operands[i], g));
    print_element(out, opt, g, acc);
    return success;
  }
  if (command == "inv") {
    print_element(out, opt, g, invert(parse_element(opt.operands.at(0), g)));
    return success;
  }
  if (command == "decide") {
    auto verdict = decide(g);
    out << (opt.json ? verdict_to_json(verdict).dump() + "\n" : verdict_to_text(verdict));
    return success;
  }
  if (command == "base-construct") {
    auto base = base_for(g);
    out << (opt.json ? base_to_json(base).dump(2) + "\n" : base_to_text(base));
    return success;
  }
  if (command == "base-verify") {
    auto base = base_for(g);
    return emit_report(out, opt,
                       {{"axioms", verify_base_axioms(base, opt.k)},
                        {"continuity", verify_continuity(base, g, opt.k, opt.l)}});
  }
  // laws
  return emit_report(out, opt,
                     {{"relations", verify_relations(g, opt.k)},
                      {"laws", verify_laws(g, opt.law_length, opt.law_indices)}});
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph inverse semigroups: arithmetic, topology dichotomy, neighborhood bases"};
  app.name(args.empty() ? "gis" : args.front());
  app.require_subcommand(1);
  Options opt;

  auto add = [&](std::string const& name, std::string const& help, std::size_t operands,
                 std::string const& operand_help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", opt.graph_path, "graph file")->required();
    if (operands > 0) {
      auto* o = sub->add_option("operands", opt.operands, operand_help)->required();
      if (operands == 1) o->expected(1);
      else o->expected(static_cast<int>(operands), -1);
    }
    sub->add_flag("--json", opt.json, "machine-readable output");
    return sub;
  };
  add("mul", "multiply elements left to right", 2, "elements, e.g. \"a[0] * a[1]^-1\"");
  add("inv", "invert an element", 1, "element");
  add("decide", "decide whether only the discrete locally compact topology exists", 0, "");
  add("base-construct", "build the neighborhood base at 0 for a non-discrete graph", 0, "");
  auto* verify = add("base-verify", "verify base axioms and continuity on truncations", 0, "");
  verify->add_option("--k", opt.k, "largest bundle index enumerated")->capture_default_str();
  verify->add_option("--l", opt.l, "longest probe path")->capture_default_str();
  auto* laws = add("laws", "check the defining relations and inverse-semigroup laws", 0, "");
  laws->add_option("--k", opt.k, "edge indices below this bound are checked")->capture_default_str();
  laws->add_option("--law-length", opt.law_length, "max |u|, |v| in the law suites")->capture_default_str();
  laws->add_option("--law-indices", opt.law_indices, "edge indices below this bound")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return success;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (CLI::ParseError const& e) {
    err << e.what() << '\n';
    return parse_error;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opt, out);
  } catch (ParseError const& e) {
    err << e.what() << '\n';
    return parse_error;
  } catch (NoBase const& e) {
    err << e.what() << '\n';
    return verification_failure;
  } catch (Error const& e) {
    err << e.what() << '\n';
    return validation_error;
  }
}

}  // namespace gis::cli
