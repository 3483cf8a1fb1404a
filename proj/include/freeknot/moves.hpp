#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "freeknot/canonical.hpp"
#include "freeknot/diagram.hpp"

namespace freeknot {

enum class MoveKind { R1_remove, R1_add, R2_remove, R2_add, R3 };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1_remove: return "R1_remove";
    case MoveKind::R1_add: return "R1_add";
    case MoveKind::R2_remove: return "R2_remove";
    case MoveKind::R2_add: return "R2_add";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

inline const std::vector<MoveKind>& all_move_kinds() {
  static const std::vector<MoveKind> kinds{MoveKind::R1_remove, MoveKind::R1_add, MoveKind::R2_remove,
                                           MoveKind::R2_add, MoveKind::R3};
  return kinds;
}

/// A located move.
///   R1_remove: the two adjacent occurrences.
///   R2_remove: four positions, two adjacent pairs.
///   R3: six positions; pairs (site[0],site[1]), (site[2],site[3]), (site[4],site[5]).
///   R1_add: one gap (index = insertion point).
///   R2_add: two gaps, site[0] <= site[1]; `antiparallel` selects "x y" / "y x" on the second.
struct MoveInstance {
  MoveKind kind = MoveKind::R1_remove;
  std::vector<Position> site;
  bool antiparallel = false;

  auto operator<=>(const MoveInstance&) const = default;
};

namespace detail {

struct Edge {
  Position a, b;  // b follows a along the component
};

inline std::vector<Edge> edges_of(const Diagram& d) {
  std::vector<Edge> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const std::size_t m = d.components[c].word.size();
    if (d.is_closed(c)) {
      if (m < 2) continue;
      for (std::size_t i = 0; i < m; ++i) out.push_back({{c, i}, {c, (i + 1) % m}});
    } else {
      for (std::size_t i = 0; i + 1 < m; ++i) out.push_back({{c, i}, {c, i + 1}});
    }
  }
  return out;
}

inline Label label_at(const Diagram& d, Position p) { return d.components[p.component].word[p.index]; }

inline std::map<std::pair<Label, Label>, std::vector<Edge>> edges_by_pair(const Diagram& d) {
  std::map<std::pair<Label, Label>, std::vector<Edge>> by;
  for (const auto& e : edges_of(d)) {
    Label x = label_at(d, e.a), y = label_at(d, e.b);
    if (x == y) continue;
    by[{std::min(x, y), std::max(x, y)}].push_back(e);
  }
  return by;
}

inline bool disjoint(std::initializer_list<Position> ps) {
  std::set<Position> s(ps);
  return s.size() == ps.size();
}

inline std::size_t gap_count(const Diagram& d, std::size_t c) {
  const std::size_t m = d.components[c].word.size();
  return d.is_closed(c) ? std::max<std::size_t>(m, 1) : m + 1;
}

inline std::vector<Position> all_gaps(const Diagram& d) {
  std::vector<Position> gaps;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (std::size_t g = 0; g < gap_count(d, c); ++g) gaps.push_back({c, g});
  return gaps;
}

inline std::vector<MoveInstance> find_r1_remove(const Diagram& d) {
  std::set<MoveInstance> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& w = d.components[c].word;
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t j = i + 1;
      if (j == m) {
        if (!d.is_closed(c) || m < 2) break;
        j = 0;
      }
      if (w[i] == w[j]) {
        std::vector<Position> site{{c, i}, {c, j}};
        std::sort(site.begin(), site.end());
        out.insert({MoveKind::R1_remove, site, false});
      }
    }
  }
  return {out.begin(), out.end()};
}

inline std::vector<MoveInstance> find_r2_remove(const Diagram& d) {
  std::set<MoveInstance> out;
  for (const auto& [pair, es] : edges_by_pair(d))
    for (std::size_t p = 0; p < es.size(); ++p)
      for (std::size_t q = p + 1; q < es.size(); ++q) {
        if (!disjoint({es[p].a, es[p].b, es[q].a, es[q].b})) continue;
        std::vector<Position> site{es[p].a, es[p].b, es[q].a, es[q].b};
        std::sort(site.begin(), site.end());
        out.insert({MoveKind::R2_remove, site, false});
      }
  return {out.begin(), out.end()};
}

inline std::vector<MoveInstance> find_r3(const Diagram& d) {
  auto by = edges_by_pair(d);
  std::set<MoveInstance> out;
  for (const auto& [uv, e_uv] : by) {
    auto [u, v] = uv;
    for (const auto& [vw, e_vw] : by) {
      if (vw.first != v) continue;
      Label w = vw.second;
      auto it = by.find({u, w});
      if (it == by.end()) continue;
      for (const auto& a : e_uv)
        for (const auto& b : e_vw)
          for (const auto& c : it->second) {
            if (!disjoint({a.a, a.b, b.a, b.b, c.a, c.b})) continue;
            std::vector<std::pair<Position, Position>> pairs{{a.a, a.b}, {b.a, b.b}, {c.a, c.b}};
            std::sort(pairs.begin(), pairs.end());
            std::vector<Position> site;
            for (const auto& [x, y] : pairs) {
              site.push_back(x);
              site.push_back(y);
            }
            out.insert({MoveKind::R3, site, false});
          }
    }
  }
  return {out.begin(), out.end()};
}

inline std::vector<MoveInstance> find_r1_add(const Diagram& d) {
  std::vector<MoveInstance> out;
  for (const auto& g : all_gaps(d)) out.push_back({MoveKind::R1_add, {g}, false});
  return out;
}

inline std::vector<MoveInstance> find_r2_add(const Diagram& d) {
  std::vector<MoveInstance> out;
  auto gaps = all_gaps(d);
  for (std::size_t p = 0; p < gaps.size(); ++p)
    for (std::size_t q = p; q < gaps.size(); ++q)
      for (bool anti : {false, true}) out.push_back({MoveKind::R2_add, {gaps[p], gaps[q]}, anti});
  return out;
}

}  // namespace detail

/// Every instance of the requested move kinds, each kind in a fixed order.
inline std::vector<MoveInstance> find_moves(const Diagram& d, const std::vector<MoveKind>& kinds) {
  std::vector<MoveInstance> out;
  for (MoveKind k : kinds) {
    std::vector<MoveInstance> part;
    switch (k) {
      case MoveKind::R1_remove: part = detail::find_r1_remove(d); break;
      case MoveKind::R1_add: part = detail::find_r1_add(d); break;
      case MoveKind::R2_remove: part = detail::find_r2_remove(d); break;
      case MoveKind::R2_add: part = detail::find_r2_add(d); break;
      case MoveKind::R3: part = detail::find_r3(d); break;
    }
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<MoveInstance> find_moves(const Diagram& d) { return find_moves(d, all_move_kinds()); }

namespace detail {

inline void require(bool ok) {
  if (!ok) throw DiagramError("apply_move: stale site");
}

inline bool valid_position(const Diagram& d, Position p) {
  return p.component < d.components.size() && p.index < d.components[p.component].word.size();
}

inline bool adjacent(const Diagram& d, Position a, Position b) {
  if (a.component != b.component) return false;
  const std::size_t m = d.components[a.component].word.size();
  if (a.index + 1 == b.index || b.index + 1 == a.index) return true;
  if (!d.is_closed(a.component) || m < 2) return false;
  return (a.index == m - 1 && b.index == 0) || (b.index == m - 1 && a.index == 0);
}

inline Diagram erase_positions(const Diagram& d, std::vector<Position> ps) {
  Diagram out = d;
  std::sort(ps.rbegin(), ps.rend());
  for (const auto& p : ps) {
    auto& w = out.components[p.component].word;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(p.index));
  }
  return out;
}

inline void check_remove_site(const Diagram& d, const MoveInstance& m) {
  for (const auto& p : m.site) require(valid_position(d, p));
  if (m.kind == MoveKind::R1_remove) {
    require(m.site.size() == 2 && label_at(d, m.site[0]) == label_at(d, m.site[1]) &&
            adjacent(d, m.site[0], m.site[1]));
    return;
  }
  require(m.site.size() == 4 && disjoint({m.site[0], m.site[1], m.site[2], m.site[3]}));
  std::map<Label, int> count;
  for (const auto& p : m.site) ++count[label_at(d, p)];
  require(count.size() == 2 && count.begin()->second == 2);
  // The four positions must split into two adjacent {x,y} pairs.
  const auto& s = m.site;
  auto pairs_ok = [&](int a, int b, int c, int e) {
    return adjacent(d, s[a], s[b]) && adjacent(d, s[c], s[e]) && label_at(d, s[a]) != label_at(d, s[b]) &&
           label_at(d, s[c]) != label_at(d, s[e]);
  };
  require(pairs_ok(0, 1, 2, 3) || pairs_ok(0, 2, 1, 3) || pairs_ok(0, 3, 1, 2));
}

}  // namespace detail

/// Applies a move. Labels that survive keep their names; R1_add and R2_add
/// introduce labels above the current maximum.
inline Diagram apply_move(const Diagram& d, const MoveInstance& m) {
  Diagram out;
  switch (m.kind) {
    case MoveKind::R1_remove:
    case MoveKind::R2_remove:
      detail::check_remove_site(d, m);
      out = detail::erase_positions(d, m.site);
      break;
    case MoveKind::R3: {
      detail::require(m.site.size() == 6);
      for (const auto& p : m.site) detail::require(detail::valid_position(d, p));
      detail::require(detail::disjoint({m.site[0], m.site[1], m.site[2], m.site[3], m.site[4], m.site[5]}));
      std::set<Label> labels;
      for (int k = 0; k < 3; ++k) {
        detail::require(detail::adjacent(d, m.site[2 * k], m.site[2 * k + 1]));
        Label a = detail::label_at(d, m.site[2 * k]), b = detail::label_at(d, m.site[2 * k + 1]);
        detail::require(a != b);
        labels.insert(a);
        labels.insert(b);
      }
      detail::require(labels.size() == 3);
      out = d;
      for (int k = 0; k < 3; ++k) {
        auto pa = m.site[2 * k], pb = m.site[2 * k + 1];
        std::swap(out.components[pa.component].word[pa.index], out.components[pb.component].word[pb.index]);
      }
      break;
    }
    case MoveKind::R1_add: {
      detail::require(m.site.size() == 1 && m.site[0].component < d.components.size() &&
                      m.site[0].index < detail::gap_count(d, m.site[0].component));
      out = d;
      Label x = max_label(d) + 1;
      auto& w = out.components[m.site[0].component].word;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(m.site[0].index), {x, x});
      break;
    }
    case MoveKind::R2_add: {
      detail::require(m.site.size() == 2 && !(m.site[1] < m.site[0]));
      for (const auto& g : m.site)
        detail::require(g.component < d.components.size() && g.index < detail::gap_count(d, g.component));
      out = d;
      Label x = max_label(d) + 1, y = x + 1;
      std::vector<Label> first{x, y};
      std::vector<Label> second = m.antiparallel ? std::vector<Label>{y, x} : std::vector<Label>{x, y};
      if (m.site[0] == m.site[1]) {
        auto& w = out.components[m.site[0].component].word;
        std::vector<Label> both = first;
        both.insert(both.end(), second.begin(), second.end());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(m.site[0].index), both.begin(), both.end());
      } else {
        // later gap first so the earlier index stays valid
        auto& w1 = out.components[m.site[1].component].word;
        w1.insert(w1.begin() + static_cast<std::ptrdiff_t>(m.site[1].index), second.begin(), second.end());
        auto& w0 = out.components[m.site[0].component].word;
        w0.insert(w0.begin() + static_cast<std::ptrdiff_t>(m.site[0].index), first.begin(), first.end());
      }
      break;
    }
  }
  if (out.components.size() != d.components.size())
    throw std::logic_error("apply_move changed the number of components");
  return out;
}

inline bool is_irreducible_r2(const Diagram& d) { return detail::find_r2_remove(d).empty(); }

/// Greedy decreasing R2 moves, always at the least site.
inline Diagram reduce_r2(Diagram d) {
  while (true) {
    auto sites = detail::find_r2_remove(d);
    if (sites.empty()) return d;
    d = apply_move(d, sites.front());
  }
}

/// R2 reduction choosing among the available sites with `pick(count)`.
template <typename Pick>
Diagram reduce_r2_with(Diagram d, Pick&& pick) {
  while (true) {
    auto sites = detail::find_r2_remove(d);
    if (sites.empty()) return d;
    d = apply_move(d, sites[pick(sites.size()) % sites.size()]);
  }
}

struct MoveStep {
  MoveInstance move;
  Diagram result;
};

/// Shortest move path from `from` to a diagram isomorphic to `to`.
/// Each step's result is stored in canonical form; the sites of step k refer
/// to the result of step k-1 (step 0: canonical_form(from)).
/// An empty optional means "not found within bounds", never "not equivalent".
inline std::optional<std::vector<MoveStep>> bfs_equivalence(const Diagram& from, const Diagram& to,
                                                            std::size_t max_crossings, std::size_t max_depth) {
  if (from.long_flag != to.long_flag || from.ordered_flag != to.ordered_flag)
    throw DiagramError("bfs_equivalence: diagrams carry different flags");
  const SymmetryConfig cfg = default_symmetry(from);
  const std::string target = canonical_string(to, cfg);
  Diagram start = canonical_form(from, cfg);
  std::string start_key = emit_diagram(start);
  if (start_key == target) return std::vector<MoveStep>{};

  struct Node {
    Diagram diagram;
    std::string parent;
    MoveInstance move;
    std::size_t depth;
  };
  std::unordered_map<std::string, Node> seen;
  seen.emplace(start_key, Node{start, "", {}, 0});
  std::deque<std::string> queue{start_key};

  while (!queue.empty()) {
    std::string key = queue.front();
    queue.pop_front();
    const Node node = seen.at(key);
    if (node.depth >= max_depth) continue;
    const std::size_t n = node.diagram.crossing_count();
    std::vector<MoveKind> kinds{MoveKind::R1_remove, MoveKind::R2_remove, MoveKind::R3};
    if (n + 1 <= max_crossings) kinds.push_back(MoveKind::R1_add);
    if (n + 2 <= max_crossings) kinds.push_back(MoveKind::R2_add);
    for (const auto& m : find_moves(node.diagram, kinds)) {
      Diagram next = canonical_form(apply_move(node.diagram, m), cfg);
      std::string next_key = emit_diagram(next);
      if (seen.count(next_key)) continue;
      seen.emplace(next_key, Node{next, key, m, node.depth + 1});
      if (next_key == target) {
        std::vector<MoveStep> path;
        for (std::string k = next_key; k != start_key;) {
          const Node& cur = seen.at(k);
          path.push_back({cur.move, cur.diagram});
          k = cur.parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(next_key);
    }
  }
  return std::nullopt;
}

}  // namespace freeknot
