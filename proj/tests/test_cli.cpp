#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gis/cli.hpp"
#include "gis/element.hpp"
#include "gis/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gis");
  std::ostringstream out, err;
  int code = gis::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_graph(std::string const& name, std::string const& text) {
  auto dir = fs::temp_directory_path() / "gis_cli_tests";
  fs::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string const p2 = write_graph("p2.txt", "vertex v\nbundle a v v 2\n");
std::string const pomega = write_graph("pomega.txt", "vertex v\nbundle a v v inf\n");
std::string const badpair = write_graph("badpair.txt", "vertex e\nvertex f\nbundle b e f inf\n");
std::string const family = write_graph("family.txt", "vertex v\nbundle a v v 1\nextra_isolated_vertices inf\n");
std::string const broken = write_graph("broken.txt", "vertex v\nbundle a v v many\n");

}  // namespace

TEST_CASE("mul") {
  auto r = run({"mul", p2, "a[0] * a[1]^-1", "a[1] * @v^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "a[0] * @v^-1\n");
  auto g = gis::load_graph(p2);
  CHECK(gis::parse_element("a[0] * @v^-1", g) ==
        gis::multiply(gis::parse_element("a[0] * a[1]^-1", g), gis::parse_element("a[1] * @v^-1", g)));

  CHECK(run({"mul", p2, "a[0]^-1", "a[1]"}).out == "0\n");
  CHECK(run({"mul", p2, "a[0]", "a[0]", "a[0]^-1"}).out == "a[0].a[0] * a[0]^-1\n");
  CHECK(run({"mul", p2, "a[0]^-1", "a[0]", "a[1]"}).out == "a[1] * @v^-1\n");
  CHECK(run({"mul", p2, "a[0]", "a[1]", "--json"}).out == "{\"element\":\"a[0].a[1] * @v^-1\"}\n");
}

TEST_CASE("inv") {
  auto r = run({"inv", p2, "a[0].a[1] * a[1]^-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "a[1] * a[0].a[1]^-1\n");
}

TEST_CASE("decide") {
  CHECK(run({"decide", pomega}).out == "discrete_only\n");
  auto r = run({"decide", badpair, "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "non_discrete");
  CHECK(j["witness"]["kind"] == "bad_pair");
  CHECK(run({"decide", family}).out.starts_with("non_discrete"));
  CHECK(run({"decide", badpair}).out == run({"decide", badpair}).out);
}

TEST_CASE("base-construct and base-verify") {
  auto c = run({"base-construct", badpair, "--json"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["into_e"] == nlohmann::json::array({"@e"}));

  auto v = run({"base-verify", badpair, "--k", "20", "--l", "4"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  auto vj = nlohmann::json::parse(run({"base-verify", family, "--k", "6", "--l", "2", "--json"}).out);
  CHECK(vj["passed"] == true);

  auto none = run({"base-construct", pomega});
  CHECK(none.code == 3);
  CHECK_FALSE(none.err.empty());
}

TEST_CASE("laws") {
  auto r = run({"laws", p2, "--k", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("relation_iv") != std::string::npos);
  CHECK(r.out.find("associativity") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"decide", broken}).code == 1);
  CHECK(run({"decide", "/nonexistent/graph.txt"}).code == 1);
  CHECK(run({"mul", p2, "a[0] *", "a[0]"}).code == 1);
  CHECK(run({"mul", p2}).code == 1);
  CHECK(run({"bogus", p2}).code == 1);
  CHECK(run({"mul", p2, "a[9]", "a[0]"}).code == 2);
  CHECK(run({"mul", badpair, "b[0] * @e^-1", "@e"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("base-verify") != std::string::npos);
}
