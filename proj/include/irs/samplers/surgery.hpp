#pragma once

// s1-surgery on explicit views: every *-edge {v, w} turns the s1-edges
// v -> v.s1, w -> w.s1 into v -> w.s1, w -> v.s1 and is consumed. Vertex order
// and distances of the input are kept, so the consumed *-edges are enough to
// undo the rewiring.

#include <utility>
#include <vector>

#include "irs/ball.hpp"
#include "irs/errors.hpp"

namespace irs {

struct SurgeryRecord {
  std::vector<std::pair<int, int>> stars;  // (v, w) with v < w
};

inline BallView surgery(const BallView& in, SurgeryRecord* record = nullptr) {
  BallView out = in;
  SurgeryRecord rec;
  for (std::size_t v = 0; v < in.size(); ++v) {
    const int w = in.star[v];
    if (w == kNoVertex) continue;
    if (w < 0 || static_cast<std::size_t>(w) >= in.size() || in.star[w] != static_cast<int>(v))
      throw DomainError("*-edge at " + in.vertices[v] + " is not symmetric");
    if (w == static_cast<int>(v)) throw DomainError("*-loop at " + in.vertices[v]);
    if (w < static_cast<int>(v)) continue;
    const int a = in.out_edge(static_cast<int>(v), 1), b = in.out_edge(w, 1);
    if (a == kNoVertex || b == kNoVertex)
      throw DomainError("*-edge " + in.vertices[v] + " * " + in.vertices[w] + " lacks an s1-edge at an endpoint");
    out.out_edge(static_cast<int>(v), 1) = b;
    out.out_edge(w, 1) = a;
    out.star[v] = kNoVertex;
    out.star[w] = kNoVertex;
    rec.stars.emplace_back(static_cast<int>(v), w);
  }
  if (record) *record = std::move(rec);
  return out;
}

inline BallView inverse_surgery(const BallView& out, const SurgeryRecord& record) {
  BallView in = out;
  for (auto [v, w] : record.stars) {
    if (in.star[v] != kNoVertex || in.star[w] != kNoVertex)
      throw DomainError("surgery record does not match the view");
    std::swap(in.out_edge(v, 1), in.out_edge(w, 1));
    in.star[v] = w;
    in.star[w] = v;
  }
  return in;
}

}  // namespace irs
