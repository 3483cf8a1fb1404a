#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "freeknot/parity.hpp"
#include "freeknot/smoothing.hpp"
#include "freeknot/zg.hpp"

namespace freeknot {

/// Expansion is over explicit 2^k smoothing choices.
inline constexpr std::size_t kMaxSmoothedCrossings = 20;

namespace detail {

inline void expand_smoothings(const std::vector<Strand>& strands, const std::vector<Label>& crossings,
                              std::size_t next, const std::function<void(const std::vector<Strand>&)>& leaf) {
  if (next == crossings.size()) {
    leaf(strands);
    return;
  }
  for (Smoothing c : {Smoothing::A, Smoothing::B})
    expand_smoothings(smooth_strands(strands, crossings[next], c), crossings, next + 1, leaf);
}

inline std::vector<Label> even_crossings(const Diagram& d, ParityKind kind) {
  std::vector<Label> evens;
  for (const auto& [label, p] : parity_table(d, kind))
    if (p == Parity::Even) evens.push_back(label);
  if (evens.size() > kMaxSmoothedCrossings)
    throw DiagramError("bracket: " + std::to_string(evens.size()) + " even crossings exceed the expansion limit of " +
                       std::to_string(kMaxSmoothedCrossings));
  return evens;
}

inline std::size_t intercomponent_count(const Diagram& d) {
  std::size_t n = 0;
  for (const auto& [label, pos] : occurrences(d))
    if (pos[0].component != pos[1].component) ++n;
  return n;
}

}  // namespace detail

inline QuotientConfig curly_config(const Diagram& d) {
  return {"ZG", SymmetryConfig{!d.ordered_flag, true, true}, true};
}
inline QuotientConfig square_config() { return {"ZG1", SymmetryConfig{true, true, true}, false}; }
inline QuotientConfig square_or_config() { return {"ZG1_or", SymmetryConfig{false, false, false}, false}; }
/// Two components, the first oriented and distinguished, the second free to reflect.
inline QuotientConfig curly2_config() { return {"frakL", SymmetryConfig{false, true, true}, true}; }

inline std::size_t intercomponent_count(const Diagram& d) { return detail::intercomponent_count(d); }

/// {d}: sum over both smoothings of every intracomponent crossing of a
/// two-component diagram; summands of every component count are kept.
inline ZgElement bracket_curly(const Diagram& d) {
  if (d.component_count() != 2) throw DiagramError("bracket_curly: expected a two-component diagram");
  ZgElement out(curly_config(d));
  detail::expand_smoothings(detail::to_strands(d), detail::even_crossings(d, ParityKind::Component), 0,
                            [&](const std::vector<detail::Strand>& s) {
                              out.add(strip_orientation(detail::to_diagram(s, d.ordered_flag)));
                            });
  return out;
}

/// [d]: one-component summands of the smoothings at Gaussian-even crossings.
/// The crossingless circle is a basis element here.
inline ZgElement bracket_square(const Diagram& d) {
  if (d.component_count() != 1 || d.long_flag)
    throw DiagramError("bracket_square: expected a closed one-component diagram");
  ZgElement out(square_config());
  Diagram plain = strip_orientation(d);
  plain.ordered_flag = false;
  detail::expand_smoothings(detail::to_strands(plain), detail::even_crossings(plain, ParityKind::Gaussian), 0,
                            [&](const std::vector<detail::Strand>& s) {
                              if (s.size() == 1) out.add(strip_orientation(detail::to_diagram(s, false)));
                            });
  return out;
}

/// [d]_or for long one-component diagrams: each one-component summand is read
/// from the initial infinite arc to the final one; reversal is not a symmetry.
inline ZgElement bracket_square_or(const Diagram& d) {
  if (!d.long_flag || d.component_count() != 1)
    throw DiagramError("bracket_square_or: expected a long one-component diagram");
  ZgElement out(square_or_config());
  Diagram plain = strip_orientation(d);
  plain.ordered_flag = false;
  detail::expand_smoothings(detail::to_strands(plain), detail::even_crossings(plain, ParityKind::Gaussian), 0,
                            [&](const std::vector<detail::Strand>& s) {
                              if (s.size() == 1) out.add(strip_orientation(detail::to_diagram(s, false)));
                            });
  return out;
}

namespace detail {

inline void require_curly2_shape(const Diagram& d) {
  if (d.component_count() != 2 || d.long_flag)
    throw DiagramError("expected a closed two-component diagram");
  if (!d.components[0].oriented) throw DiagramError("component 1 must carry an orientation mark");
}

// Two-strand leaf -> diagram with the component-1 strand first, oriented by the odd-count rule.
inline std::optional<Diagram> oriented_summand(const std::vector<Strand>& s, bool ordered, bool traverse_reversed) {
  if (s.size() != 2) return std::nullopt;
  const Strand* first = nullptr;
  const Strand* second = nullptr;
  for (const auto& st : s) (st.origin == 0 ? first : second) = &st;
  if (!first || !second) return std::nullopt;
  Diagram out;
  out.ordered_flag = ordered;
  Component c1;
  for (const auto& p : orient_by_odd_count(first->passages, traverse_reversed)) c1.word.push_back(p.label);
  c1.oriented = !c1.word.empty();
  Component c2;
  for (const auto& p : second->passages) c2.word.push_back(p.label);
  out.components = {std::move(c1), std::move(c2)};
  return out;
}

}  // namespace detail

/// Orients the component-1 part of the smoothing `s` of `original` along the
/// direction shared by an odd number of its intercomponent passages. Returns nullopt unless the
/// smoothing leaves exactly one component from each original component.
inline std::optional<Diagram> orient_summand(const Diagram& original, const SmoothingChoice& s,
                                             bool traverse_reversed = false) {
  detail::require_curly2_shape(original);
  if (detail::intercomponent_count(original) % 2 == 0)
    throw DiagramError("orient_summand: intercomponent crossing count must be odd");
  auto occ = occurrences(original);
  for (const auto& [label, c] : s) {
    auto it = occ.find(label);
    if (it == occ.end() || it->second[0].component != it->second[1].component)
      throw DiagramError("orient_summand: only intracomponent crossings may be smoothed");
  }
  return detail::oriented_summand(detail::smooth_strands(detail::to_strands(original), s), original.ordered_flag,
                                  traverse_reversed);
}

/// {d}_2: two-component summands of {d} with component 1 oriented by the
/// odd-count rule. Zero when the intercomponent crossing count is even.
inline ZgElement bracket_curly2(const Diagram& d) {
  detail::require_curly2_shape(d);
  ZgElement out(curly2_config());
  if (detail::intercomponent_count(d) % 2 == 0) return out;
  detail::expand_smoothings(detail::to_strands(d), detail::even_crossings(d, ParityKind::Component), 0,
                            [&](const std::vector<detail::Strand>& s) {
                              if (auto summand = detail::oriented_summand(s, d.ordered_flag, false))
                                out.add(*summand);
                            });
  return out;
}

/// (crossing, two-component smoothing) for every crossing of a closed
/// one-component diagram, in label order.
inline std::vector<std::pair<Label, Diagram>> delta_terms(const Diagram& d) {
  if (d.component_count() != 1 || d.long_flag) throw DiagramError("delta: expected a closed one-component diagram");
  std::vector<std::pair<Label, Diagram>> out;
  for (Label x : labels_of(d)) out.emplace_back(x, split_smoothing_of(d, x));
  return out;
}

inline FormalSum delta(const Diagram& d) {
  FormalSum sum;
  for (const auto& [x, s] : delta_terms(d)) sum.add(s);
  return sum;
}

/// Delta restricted to crossings of Gaussian parity p.
inline FormalSum delta_parity(const Diagram& d, Parity p) {
  auto table = parity_table(d, ParityKind::Gaussian);
  FormalSum sum;
  for (const auto& [x, s] : delta_terms(d))
    if (table.at(x) == p) sum.add(s);
  return sum;
}

}  // namespace freeknot
