#pragma once

// The .sgr text format for rooted labelled graphs:
//
//   schreier r=<r> [radius=<R>]
//   root <token>
//   <src> s<i> <dst>        one line per directed edge
//   <a> * <b>               one line per undirected *-edge
//   boundary <token>        one line per vertex at distance exactly R
//
// Lines starting with '#' are comments. Emission lists vertices in canonical
// BFS order, so parse followed by emit reproduces emitted text exactly.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "irs/ball.hpp"
#include "irs/errors.hpp"

namespace irs {

inline void write_sgr(std::ostream& os, const BallView& b) {
  os << "schreier r=" << b.rank << " radius=" << b.radius << "\n";
  os << "root " << b.vertices.at(0) << "\n";
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (int i = 1; i <= b.rank; ++i)
      if (int t = b.out_edge(static_cast<int>(v), i); t != kNoVertex)
        os << b.vertices[v] << " s" << i << " " << b.vertices[t] << "\n";
    if (int w = b.star[v]; w != kNoVertex && w > static_cast<int>(v))
      os << b.vertices[v] << " * " << b.vertices[w] << "\n";
  }
  for (std::size_t v = 0; v < b.size(); ++v)
    if (b.boundary[v]) os << "boundary " << b.vertices[v] << "\n";
}

inline std::string to_sgr(const BallView& b) {
  std::ostringstream os;
  write_sgr(os, b);
  return os.str();
}

inline BallView read_sgr(std::istream& is) {
  std::string line;
  int rank = 0, radius = -1;
  bool have_header = false;
  std::string root;
  struct Edge {
    std::string src, label, dst;
  };
  std::vector<Edge> edges;
  std::vector<std::string> boundary;
  int lineno = 0;
  auto fail = [&](const std::string& why) -> void {
    throw DomainError(".sgr line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!have_header) {
      if (tok[0] != "schreier") fail("expected header 'schreier r=<r>'");
      for (std::size_t k = 1; k < tok.size(); ++k) {
        if (tok[k].rfind("r=", 0) == 0) {
          rank = std::stoi(tok[k].substr(2));
        } else if (tok[k].rfind("radius=", 0) == 0) {
          radius = std::stoi(tok[k].substr(7));
        } else {
          fail("unknown header field '" + tok[k] + "'");
        }
      }
      if (rank < 1 || rank > kMaxRank) fail("rank missing or out of range");
      have_header = true;
      continue;
    }
    if (tok[0] == "root") {
      if (tok.size() != 2 || !root.empty()) fail("bad root line");
      root = tok[1];
    } else if (tok[0] == "boundary") {
      if (tok.size() != 2) fail("bad boundary line");
      boundary.push_back(tok[1]);
    } else {
      if (tok.size() != 3) fail("edge lines have three fields");
      edges.push_back({tok[0], tok[1], tok[2]});
    }
  }
  if (!have_header) throw DomainError(".sgr: missing header");
  if (root.empty()) throw DomainError(".sgr: missing root line");

  BallView b;
  b.rank = rank;
  std::unordered_map<std::string, int> index;
  auto id = [&](const std::string& t) {
    auto [it, fresh] = index.emplace(t, static_cast<int>(b.vertices.size()));
    if (fresh) b.vertices.push_back(t);
    return it->second;
  };
  id(root);
  for (const Edge& e : edges) {
    id(e.src);
    id(e.dst);
  }
  const std::size_t n = b.vertices.size();
  b.out.assign(n * rank, kNoVertex);
  b.star.assign(n, kNoVertex);
  b.boundary.assign(n, false);
  b.distance.assign(n, 0);
  for (const Edge& e : edges) {
    int s = index.at(e.src), d = index.at(e.dst);
    if (e.label == "*") {
      if (b.star[s] != kNoVertex || b.star[d] != kNoVertex)
        throw DomainError(".sgr: vertex with two *-edges at " + e.src + " or " + e.dst);
      b.star[s] = d;
      b.star[d] = s;
      continue;
    }
    if (e.label.size() < 2 || e.label[0] != 's') throw DomainError(".sgr: bad label '" + e.label + "'");
    int i = std::stoi(e.label.substr(1));
    if (i < 1 || i > rank) throw DomainError(".sgr: label '" + e.label + "' exceeds rank");
    if (b.out_edge(s, i) != kNoVertex) throw DomainError(".sgr: two " + e.label + " edges leave " + e.src);
    b.out_edge(s, i) = d;
  }
  for (const std::string& t : boundary) {
    auto it = index.find(t);
    if (it == index.end()) throw DomainError(".sgr: boundary names unknown vertex " + t);
    b.boundary[it->second] = true;
  }
  b.radius = radius < 0 ? 0 : radius;
  BallView c = canonicalize(b, radius < 0 ? std::nullopt : std::optional<int>(radius));
  return c;
}

inline BallView parse_sgr(const std::string& text) {
  std::istringstream is(text);
  return read_sgr(is);
}

inline BallView load_sgr(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_sgr(in);
}

// Graphviz DOT export, labels as edge attributes.
inline void write_dot(std::ostream& os, const BallView& b) {
  os << "digraph schreier {\n";
  for (std::size_t v = 0; v < b.size(); ++v) {
    os << "  \"" << b.vertices[v] << "\"";
    if (v == 0) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (int i = 1; i <= b.rank; ++i)
      if (int t = b.out_edge(static_cast<int>(v), i); t != kNoVertex)
        os << "  \"" << b.vertices[v] << "\" -> \"" << b.vertices[t] << "\" [label=\"s" << i << "\"];\n";
    if (int w = b.star[v]; w != kNoVertex && w > static_cast<int>(v))
      os << "  \"" << b.vertices[v] << "\" -> \"" << b.vertices[w] << "\" [label=\"*\", dir=none];\n";
  }
  os << "}\n";
}

}  // namespace irs
