#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "freeknot/diagram.hpp"

namespace freeknot {

/// Which re-presentations of a diagram count as the same framed graph.
/// Reflection is never applied to components carrying an orientation mark,
/// and the long component is never rotated.
struct SymmetryConfig {
  bool allow_component_permutation = true;
  bool allow_rotation = true;
  bool allow_reflection_per_component = true;

  bool operator==(const SymmetryConfig&) const = default;
};

inline SymmetryConfig default_symmetry(const Diagram& d) {
  return SymmetryConfig{!d.ordered_flag, true, true};
}

namespace detail {

// Frontier entry of the orbit minimization: components already placed plus
// the label renumbering they induced.
struct CanonState {
  std::map<Label, Label> relabel;
  std::vector<bool> used;
  std::vector<Component> placed;

  bool operator<(const CanonState& o) const {
    if (used != o.used) return used < o.used;
    return relabel < o.relabel;
  }
};

inline std::vector<std::vector<Label>> word_variants(const Diagram& d, std::size_t c, const SymmetryConfig& cfg) {
  const auto& comp = d.components[c];
  const auto& w = comp.word;
  std::vector<std::vector<Label>> out;
  const bool rotate = cfg.allow_rotation && d.is_closed(c) && w.size() > 1;
  const bool reflect = cfg.allow_reflection_per_component && !comp.oriented && w.size() > 1;
  const std::size_t rotations = rotate ? w.size() : 1;
  for (int flip = 0; flip < (reflect ? 2 : 1); ++flip) {
    std::vector<Label> base = w;
    if (flip) std::reverse(base.begin(), base.end());
    for (std::size_t r = 0; r < rotations; ++r) {
      std::vector<Label> v(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) v[i] = base[(i + r) % base.size()];
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace detail

/// Least re-presentation of `d` over component permutations, rotations and
/// reflections allowed by `cfg`, renumbered by first occurrence.
///
/// Keys compare component by component as (orientation mark, length,
/// renumbered labels). A component's key depends only on the components
/// placed before it, so the search keeps every tied partial placement and
/// extends them one component at a time; this is exact and stays small
/// because ties are bounded by the automorphism group.
inline Diagram canonical_form(const Diagram& d, const SymmetryConfig& cfg) {
  const std::size_t n = d.components.size();
  std::set<detail::CanonState> frontier;
  frontier.insert(detail::CanonState{{}, std::vector<bool>(n, false), {}});

  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Label> best;
    bool have_best = false;
    std::set<detail::CanonState> next;
    for (const auto& state : frontier) {
      std::vector<std::size_t> candidates;
      if (d.long_flag && step == 0) {
        candidates.push_back(0);
      } else if (cfg.allow_component_permutation) {
        for (std::size_t c = d.long_flag ? 1 : 0; c < n; ++c)
          if (!state.used[c]) candidates.push_back(c);
      } else {
        candidates.push_back(step);
      }
      for (std::size_t c : candidates) {
        const bool mark = d.components[c].oriented;
        for (const auto& w : detail::word_variants(d, c, cfg)) {
          std::map<Label, Label> relabel = state.relabel;
          std::vector<Label> key;
          key.reserve(w.size() + 2);
          key.push_back(mark ? 0 : 1);
          key.push_back(static_cast<Label>(w.size()));
          std::vector<Label> renamed;
          renamed.reserve(w.size());
          for (Label l : w) {
            auto [it, inserted] = relabel.try_emplace(l, static_cast<Label>(relabel.size()) + 1);
            renamed.push_back(it->second);
            key.push_back(it->second);
          }
          if (have_best && key > best) continue;
          if (!have_best || key < best) {
            best = key;
            have_best = true;
            next.clear();
          }
          detail::CanonState s;
          s.relabel = std::move(relabel);
          s.used = state.used;
          s.used[c] = true;
          s.placed = state.placed;
          s.placed.push_back(Component{std::move(renamed), mark});
          next.insert(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  Diagram out;
  out.long_flag = d.long_flag;
  out.ordered_flag = d.ordered_flag;
  out.components = frontier.begin()->placed;
  return out;
}

inline Diagram canonical_form(const Diagram& d) { return canonical_form(d, default_symmetry(d)); }

inline std::string canonical_string(const Diagram& d, const SymmetryConfig& cfg) {
  return emit_diagram(canonical_form(d, cfg));
}

inline bool is_isomorphic(const Diagram& a, const Diagram& b, const SymmetryConfig& cfg) {
  if (a.long_flag != b.long_flag || a.ordered_flag != b.ordered_flag)
    throw DiagramError("is_isomorphic: diagrams carry different flags");
  return canonical_form(a, cfg) == canonical_form(b, cfg);
}

inline bool is_isomorphic(const Diagram& a, const Diagram& b) { return is_isomorphic(a, b, default_symmetry(a)); }

}  // namespace freeknot
