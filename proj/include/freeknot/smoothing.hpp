#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "freeknot/diagram.hpp"
#include "freeknot/framed_graph.hpp"

namespace freeknot {

using SmoothingChoice = std::map<Label, Smoothing>;

namespace detail {

// One passage through a crossing. `flipped` records whether the strand now
// runs against the direction the passage had in the source diagram.
struct Passage {
  Label label;
  bool flipped = false;
};

// Working form of a component during smoothing.
struct Strand {
  std::vector<Passage> passages;
  bool is_long = false;
  bool oriented = false;
  int origin = 0;  // source component index, -1 once strands of different origin merge
};

inline std::vector<Strand> to_strands(const Diagram& d) {
  std::vector<Strand> out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    Strand s;
    s.is_long = !d.is_closed(c);
    s.oriented = d.components[c].oriented;
    s.origin = static_cast<int>(c);
    for (Label l : d.components[c].word) s.passages.push_back({l, false});
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Passage> reversed(std::vector<Passage> seg) {
  std::reverse(seg.begin(), seg.end());
  for (auto& p : seg) p.flipped = !p.flipped;
  return seg;
}

inline std::vector<Passage> concat(std::vector<Passage> a, const std::vector<Passage>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Passage> slice(const std::vector<Passage>& w, std::size_t from, std::size_t to) {
  return {w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to)};
}

// The cyclic remainder after position i: w[i+1..] then w[..i-1].
inline std::vector<Passage> after(const std::vector<Passage>& w, std::size_t i) {
  return concat(slice(w, i + 1, w.size()), slice(w, 0, i));
}

inline std::vector<Strand> smooth_strands(std::vector<Strand> strands, Label x, Smoothing choice) {
  std::vector<std::pair<std::size_t, std::size_t>> at;
  for (std::size_t s = 0; s < strands.size(); ++s)
    for (std::size_t i = 0; i < strands[s].passages.size(); ++i)
      if (strands[s].passages[i].label == x) at.emplace_back(s, i);
  if (at.size() != 2) throw DiagramError("smooth: unknown label " + std::to_string(x));

  auto [s1, i] = at[0];
  auto [s2, j] = at[1];
  if (s1 == s2) {
    Strand& st = strands[s1];
    const auto& w = st.passages;
    if (st.is_long) {
      // P x A x S
      auto prefix = slice(w, 0, i), inner = slice(w, i + 1, j), suffix = slice(w, j + 1, w.size());
      if (choice == Smoothing::B) {
        Strand loop{inner, false, st.oriented, st.origin};
        st.passages = concat(prefix, suffix);
        strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(s1) + 1, std::move(loop));
      } else {
        st.passages = concat(concat(prefix, reversed(inner)), suffix);
      }
      return strands;
    }
    // x A x B (cyclic)
    auto inner = slice(w, i + 1, j);
    auto outer = concat(slice(w, j + 1, w.size()), slice(w, 0, i));
    if (choice == Smoothing::B) {
      Strand other{outer, false, st.oriented, st.origin};
      st.passages = inner;
      strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(s1) + 1, std::move(other));
    } else {
      st.passages = concat(inner, reversed(outer));
    }
    return strands;
  }

  // Two strands merge into one; strand s1 comes first and is the long one if any.
  Strand& first = strands[s1];
  Strand& second = strands[s2];
  auto tail = after(second.passages, j);
  if (choice == Smoothing::A) tail = reversed(tail);
  if (first.is_long) {
    // P x S  +  x B  ->  P B S
    auto prefix = slice(first.passages, 0, i), suffix = slice(first.passages, i + 1, first.passages.size());
    first.passages = concat(concat(prefix, tail), suffix);
  } else {
    first.passages = concat(after(first.passages, i), tail);
  }
  first.oriented = first.oriented && second.oriented;
  if (first.origin != second.origin) first.origin = -1;
  strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(s2));
  return strands;
}

inline std::vector<Strand> smooth_strands(std::vector<Strand> strands, const SmoothingChoice& choice) {
  for (const auto& [label, c] : choice) strands = smooth_strands(std::move(strands), label, c);
  return strands;
}

// An oriented source keeps its mark only if every passage runs the same way;
// a fully flipped closed strand is read backwards to restore the orientation.
inline Component to_component(const Strand& s) {
  Component c;
  bool any_flipped = false, any_straight = false;
  for (const auto& p : s.passages) (p.flipped ? any_flipped : any_straight) = true;
  std::vector<Passage> ps = s.passages;
  if (s.oriented && any_flipped && !any_straight && !s.is_long) ps = reversed(ps);
  for (const auto& p : ps) c.word.push_back(p.label);
  c.oriented = s.oriented && !c.word.empty() && !(any_flipped && any_straight) && !(s.is_long && any_flipped);
  return c;
}

inline Diagram to_diagram(const std::vector<Strand>& strands, bool ordered) {
  Diagram d;
  d.ordered_flag = ordered;
  for (std::size_t k = 0; k < strands.size(); ++k) {
    if (strands[k].is_long) {
      if (k != 0) throw DiagramError("internal: long strand must be first");
      d.long_flag = true;
    }
    d.components.push_back(to_component(strands[k]));
  }
  return d;
}

// Orient a strand along the direction supported by an odd number of its
// passages (with an odd passage count exactly one direction qualifies).
// `traverse_reversed` picks the arbitrary starting direction; the result does
// not depend on it.
inline std::vector<Passage> orient_by_odd_count(const std::vector<Passage>& passages, bool traverse_reversed) {
  std::vector<Passage> walk = traverse_reversed ? reversed(passages) : passages;
  std::size_t agree = 0;
  for (const auto& p : walk)
    if (!p.flipped) ++agree;
  if (agree % 2 == 0) walk = reversed(walk);
  return walk;
}

}  // namespace detail

/// Smoothing of `d` at crossing x. Orientation marks survive only on
/// components whose passages all keep their direction.
inline Diagram smooth_at(const Diagram& d, Label x, Smoothing choice) {
  auto strands = detail::smooth_strands(detail::to_strands(d), x, choice);
  return detail::to_diagram(strands, d.ordered_flag);
}

inline Diagram smooth_all(const Diagram& d, const SmoothingChoice& choice) {
  return detail::to_diagram(detail::smooth_strands(detail::to_strands(d), choice), d.ordered_flag);
}

/// The smoothing of a one-component diagram at x that yields two components.
inline Diagram split_smoothing_of(const Diagram& d, Label x) {
  if (d.component_count() != 1) throw DiagramError("split_smoothing_of: expected a one-component diagram");
  for (Smoothing c : {Smoothing::B, Smoothing::A}) {
    Diagram s = smooth_at(d, x, c);
    if (s.component_count() == 2) return s;
  }
  throw DiagramError("split_smoothing_of: no two-component smoothing");
}

}  // namespace freeknot
