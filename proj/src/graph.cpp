#include "gis/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gis/errors.hpp"

namespace gis {

namespace {

std::uint64_t next_uid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

Cardinality operator+(Cardinality a, Cardinality b) {
  if (a.is_infinite() || b.is_infinite()) return Cardinality::infinite();
  return Cardinality::finite(a.count() + b.count());
}

std::string to_string(Cardinality c) {
  return c.is_infinite() ? std::string("inf") : std::to_string(c.count());
}

bool is_valid_name(std::string_view name) noexcept {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

Graph::Graph(std::vector<std::string> vertices, std::vector<Bundle> bundles,
             bool extra_isolated_vertices)
    : vertices_(std::move(vertices)),
      bundles_(std::move(bundles)),
      extra_(extra_isolated_vertices),
      uid_(next_uid()) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    auto const& name = vertices_[i];
    if (!is_valid_name(name)) throw ValidationError("invalid vertex name '" + name + "'");
    if (!vertex_lookup_.emplace(name, i).second)
      throw ValidationError("duplicate vertex '" + name + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    auto const& b = bundles_[i];
    if (!is_valid_name(b.id)) throw ValidationError("invalid bundle id '" + b.id + "'");
    if (vertex_lookup_.count(b.id) != 0)
      throw ValidationError("bundle id '" + b.id + "' clashes with a vertex");
    if (!bundle_lookup_.emplace(b.id, i).second)
      throw ValidationError("duplicate bundle '" + b.id + "'");
    if (b.card == Cardinality::finite(0))
      throw ValidationError("bundle '" + b.id + "' has cardinality 0");
    auto s = find_vertex(b.src);
    auto d = find_vertex(b.dst);
    if (!s) throw UnknownVertex(b.src);
    if (!d) throw UnknownVertex(b.dst);
    src_.push_back(*s);
    dst_.push_back(*d);
    out_[*s].push_back(i);
    in_[*d].push_back(i);
  }
}

std::optional<std::size_t> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::find_bundle(std::string_view id) const {
  auto it = bundle_lookup_.find(std::string(id));
  if (it == bundle_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::vertex_index(std::string_view name) const {
  auto i = find_vertex(name);
  if (!i) throw UnknownVertex(std::string(name));
  return *i;
}

bool Graph::contains(Vertex v) const noexcept {
  return v.is_core() ? v.index < vertices_.size() : extra_;
}

std::string Graph::vertex_name(Vertex v) const {
  if (v.is_core()) return vertices_.at(v.index);
  return std::string(extra_family_name) + "[" + std::to_string(v.index) + "]";
}

bool operator==(Graph const& a, Graph const& b) {
  return a.vertices_ == b.vertices_ && a.bundles_ == b.bundles_ && a.extra_ == b.extra_;
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Bundle> bundles;
  bool extra = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_line(line);
    if (tokens.empty()) continue;

    auto expect_count = [&](std::size_t n) {
      if (tokens.size() != n) {
        std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
        throw ParseError(line_no, col,
                         "'" + std::string(tokens[0].text) + "' expects " +
                             std::to_string(n - 1) + " argument(s), got " +
                             std::to_string(tokens.size() - 1));
      }
    };
    auto expect_name = [&](Token const& t) {
      if (!is_valid_name(t.text))
        throw ParseError(line_no, t.column, "invalid name '" + std::string(t.text) + "'");
      return std::string(t.text);
    };

    auto keyword = tokens[0].text;
    if (keyword == "vertex") {
      expect_count(2);
      vertices.push_back(expect_name(tokens[1]));
    } else if (keyword == "bundle") {
      expect_count(5);
      Bundle b;
      b.id = expect_name(tokens[1]);
      b.src = expect_name(tokens[2]);
      b.dst = expect_name(tokens[3]);
      auto card = tokens[4];
      if (card.text == "inf") {
        b.card = Cardinality::infinite();
      } else {
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(card.text.data(), card.text.data() + card.text.size(), n);
        if (ec != std::errc() || ptr != card.text.data() + card.text.size())
          throw ParseError(line_no, card.column,
                           "expected a decimal count or 'inf', got '" + std::string(card.text) + "'");
        b.card = Cardinality::finite(n);
      }
      bundles.push_back(std::move(b));
    } else if (keyword == "extra_isolated_vertices") {
      expect_count(2);
      if (tokens[1].text != "inf")
        throw ParseError(line_no, tokens[1].column, "extra_isolated_vertices only accepts 'inf'");
      extra = true;
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  return Graph(std::move(vertices), std::move(bundles), extra);
}

Graph load_graph(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot read graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(Graph const& g) {
  std::ostringstream out;
  for (auto const& v : g.vertices()) out << "vertex " << v << '\n';
  for (auto const& b : g.bundles())
    out << "bundle " << b.id << ' ' << b.src << ' ' << b.dst << ' ' << to_string(b.card) << '\n';
  if (g.has_extra_isolated_vertices()) out << "extra_isolated_vertices inf\n";
  return out.str();
}

Graph polycyclic_graph(Cardinality lambda) {
  return Graph({"v"}, {Bundle{"a", "v", "v", lambda}});
}

Cardinality edges_between(Graph const& g, std::string_view e, std::string_view f) {
  auto src = g.vertex_index(e);
  auto dst = g.vertex_index(f);
  auto total = Cardinality::finite(0);
  for (auto b : g.out_bundles(src))
    if (g.dst_of(b) == dst) total = total + g.bundle(b).card;
  return total;
}

}  // namespace gis
