#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "freeknot/diagram.hpp"

namespace freeknot {

/// A half-edge slot at a vertex. Slots 0/2 and 1/3 are opposite. Vertex 0 is
/// reserved for the two ends of a long graph (slot 0 = initial end, slot 1 =
/// final end).
struct HalfEdge {
  Label vertex = 0;
  int slot = 0;

  auto operator<=>(const HalfEdge&) const = default;
};

inline constexpr Label kInfinity = 0;

inline int opposite_slot(int slot) { return (slot + 2) % 4; }

enum class Smoothing {
  A,  // repaste (slot0,slot1)(slot2,slot3): in meets in, out meets out
  B,  // repaste (slot0,slot3)(slot1,slot2): orientation-preserving
};

/// 4-valent framed graph: every half-edge slot paired with exactly one other.
struct FramedGraph {
  std::set<Label> vertices;
  std::map<HalfEdge, HalfEdge> edges;  // symmetric
  std::size_t free_loops = 0;
  bool is_long = false;

  std::size_t edge_count() const { return edges.size() / 2; }

  void connect(HalfEdge a, HalfEdge b) {
    edges[a] = b;
    edges[b] = a;
  }
};

/// Occurrence k (0 or 1) of a label enters through slot k and leaves through
/// slot k + 2.
inline FramedGraph to_framed_graph(const Diagram& d) {
  validate(d);
  FramedGraph g;
  g.is_long = d.long_flag;
  std::map<Label, int> seen;
  std::vector<std::vector<int>> passage(d.components.size());
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (Label l : d.components[c].word) {
      g.vertices.insert(l);
      passage[c].push_back(seen[l]++);
    }
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& w = d.components[c].word;
    const std::size_t m = w.size();
    auto in_of = [&](std::size_t i) { return HalfEdge{w[i], passage[c][i]}; };
    auto out_of = [&](std::size_t i) { return HalfEdge{w[i], passage[c][i] + 2}; };
    if (!d.is_closed(c)) {
      if (m == 0) {
        g.connect({kInfinity, 0}, {kInfinity, 1});
        continue;
      }
      g.connect({kInfinity, 0}, in_of(0));
      for (std::size_t i = 0; i + 1 < m; ++i) g.connect(out_of(i), in_of(i + 1));
      g.connect(out_of(m - 1), {kInfinity, 1});
      continue;
    }
    if (m == 0) {
      ++g.free_loops;
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) g.connect(out_of(i), in_of((i + 1) % m));
  }
  return g;
}

/// Unicursal traversal: always leave a vertex through the slot opposite the
/// one entered. The long component (if any) comes first, free loops last.
inline Diagram from_framed_graph(const FramedGraph& g) {
  for (const auto& [a, b] : g.edges) {
    auto it = g.edges.find(b);
    if (it == g.edges.end() || it->second != a) throw DiagramError("framed graph: asymmetric edge pairing");
  }
  for (Label v : g.vertices)
    for (int s = 0; s < 4; ++s)
      if (!g.edges.count({v, s})) throw DiagramError("framed graph: unmatched half-edge");

  Diagram d;
  d.long_flag = g.is_long;
  std::set<std::pair<Label, int>> visited;  // (vertex, passage 0/1)
  auto walk_from = [&](HalfEdge entry, std::vector<Label>& word, HalfEdge stop) {
    HalfEdge cur = entry;
    while (true) {
      if (cur == stop) return;
      if (cur.vertex == kInfinity) throw DiagramError("framed graph: stray end of long component");
      visited.insert({cur.vertex, cur.slot % 2});
      word.push_back(cur.vertex);
      HalfEdge out{cur.vertex, opposite_slot(cur.slot)};
      cur = g.edges.at(out);
    }
  };
  if (g.is_long) {
    Component c;
    HalfEdge first = g.edges.at({kInfinity, 0});
    walk_from(first, c.word, {kInfinity, 1});
    d.components.push_back(std::move(c));
  }
  for (Label v : g.vertices)
    for (int p = 0; p < 2; ++p) {
      if (visited.count({v, p})) continue;
      Component c;
      HalfEdge start{v, p};
      c.word.push_back(v);
      visited.insert({v, p});
      HalfEdge cur = g.edges.at({v, opposite_slot(p)});
      walk_from(cur, c.word, start);
      d.components.push_back(std::move(c));
    }
  for (std::size_t i = 0; i < g.free_loops; ++i) d.components.push_back(Component{});
  return d;
}

/// Removes vertex v and repastes its four half-edges. Chains that close up
/// entirely inside v become free loops.
inline FramedGraph smooth_vertex(const FramedGraph& g, Label v, Smoothing choice) {
  if (!g.vertices.count(v)) throw DiagramError("smooth_vertex: unknown vertex");
  std::array<int, 4> partner{};
  if (choice == Smoothing::A)
    partner = {1, 0, 3, 2};
  else
    partner = {3, 2, 1, 0};

  FramedGraph out = g;
  out.vertices.erase(v);
  for (int s = 0; s < 4; ++s) out.edges.erase({v, s});

  std::array<bool, 4> done{};
  for (int s = 0; s < 4; ++s) {
    if (done[s]) continue;
    HalfEdge ext = g.edges.at({v, s});
    if (ext.vertex == v) continue;  // an inner slot; handled from an external end or as a loop
    // ext - s ~ partner(s) - edge - ...
    done[s] = true;
    int cur = partner[s];
    while (true) {
      done[cur] = true;
      HalfEdge nxt = g.edges.at({v, cur});
      if (nxt.vertex != v) {
        out.connect(ext, nxt);
        break;
      }
      done[nxt.slot] = true;
      cur = partner[nxt.slot];
    }
  }
  for (int s = 0; s < 4; ++s) {
    if (done[s]) continue;
    // closed cycle through v's own slots
    int cur = s;
    while (!done[cur]) {
      done[cur] = true;
      int across = g.edges.at({v, cur}).slot;
      done[across] = true;
      cur = partner[across];
    }
    ++out.free_loops;
  }
  return out;
}

}  // namespace freeknot
