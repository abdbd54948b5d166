#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace judicious {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 3>;

// Malformed hypergraph text. line() is 1-based; 0 when the problem is not
// tied to a particular line (e.g. the file ended early).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// 3-uniform multi-hypergraph on vertices 0..n-1. Edges keep insertion order
// and may repeat; the three vertices of an edge are pairwise distinct.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}
  Hypergraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(Vertex u, Vertex v, Vertex w);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// deg[v] = number of edges containing v.
using DegreeTable = std::vector<std::uint64_t>;

DegreeTable degrees(const Hypergraph& h);

// Text format: "n m" header, then m lines "u v w". Lines starting with '#'
// are skipped.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_string(const std::string& text);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

Hypergraph gen_complete(std::size_t n);
// Vertices 0 and 1 lie in every edge: edges {0, 1, j+2} for j < k.
Hypergraph gen_pair_core(std::size_t k);
// m triples drawn uniformly with replacement from all C(n,3), seeded.
Hypergraph gen_random(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace judicious
