#include "judicious/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

#include "judicious/rng.hpp"

namespace judicious {

namespace {

void check_edge(std::size_t n, const Edge& e, std::size_t line) {
  for (Vertex v : e) {
    if (v >= n) {
      throw ParseError(line, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    }
  }
  if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) throw ParseError(line, "repeated vertex in edge");
}

// Splits a line into base-10 unsigned integers; false on any other token.
bool parse_uints(std::string_view s, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + i) return false;
    i = static_cast<std::size_t>(ptr - s.data());
    if (i < s.size() && s[i] != ' ' && s[i] != '\t') return false;
    out.push_back(v);
  }
  return true;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (const Edge& e : edges) check_edge(n_, e, 0);
  edges_ = std::move(edges);
}

void Hypergraph::add_edge(Vertex u, Vertex v, Vertex w) {
  Edge e{u, v, w};
  if (u >= n_ || v >= n_ || w >= n_) throw std::out_of_range("edge vertex out of range");
  if (u == v || u == w || v == w) throw std::invalid_argument("edge has a repeated vertex");
  edges_.push_back(e);
}

DegreeTable degrees(const Hypergraph& h) {
  DegreeTable deg(h.num_vertices(), 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) ++deg[v];
  }
  return deg;
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::uint64_t> nums;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(lineno, "missing header \"n m\"");
  if (!parse_uints(line, nums) || nums.size() != 2) throw ParseError(lineno, "malformed header, expected \"n m\"");
  if (nums[0] > std::numeric_limits<Vertex>::max()) throw ParseError(lineno, "vertex count too large");
  const std::size_t n = nums[0];
  const std::size_t m = nums[1];

  Hypergraph h(n);
  std::vector<Edge> edges;
  edges.reserve(std::min<std::size_t>(m, 1 << 24));
  while (next_line()) {
    if (edges.size() == m) {
      throw ParseError(lineno, "edge count mismatch: header declares " + std::to_string(m) + " edges");
    }
    if (!parse_uints(line, nums) || nums.size() != 3) throw ParseError(lineno, "malformed edge, expected \"u v w\"");
    for (auto v : nums) {
      if (v >= n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    }
    Edge e{static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]), static_cast<Vertex>(nums[2])};
    check_edge(n, e, lineno);
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw ParseError(lineno, "edge count mismatch: header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const Edge& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

Hypergraph gen_complete(std::size_t n) {
  if (n < 3) throw std::invalid_argument("gen_complete requires n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) * (n - 2) / 6);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) edges.push_back({u, v, w});
  return Hypergraph(n, std::move(edges));
}

Hypergraph gen_pair_core(std::size_t k) {
  if (k < 1) throw std::invalid_argument("gen_pair_core requires k >= 1");
  std::vector<Edge> edges;
  edges.reserve(k);
  for (std::size_t j = 0; j < k; ++j) edges.push_back({0, 1, static_cast<Vertex>(j + 2)});
  return Hypergraph(k + 2, std::move(edges));
}

Hypergraph gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random requires n >= 3");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    // three independent uniform draws, rejected unless distinct: uniform over triples
    Edge e{static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n))};
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) continue;
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace judicious
