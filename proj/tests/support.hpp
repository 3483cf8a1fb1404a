#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "freeknot/freeknot.hpp"

namespace fktest {

using namespace freeknot;
using Rng = std::mt19937_64;

// Inserts the two occurrences of a fresh chord at random places of the given components.
inline void insert_chord(Diagram& d, Rng& rng, Label label, std::size_t c1, std::size_t c2) {
  for (std::size_t c : {c1, c2}) {
    auto& w = d.components[c].word;
    std::uniform_int_distribution<std::size_t> at(0, w.size());
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at(rng)), label);
  }
}

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// n chords spread at random over `comps` components.
inline Diagram random_diagram(Rng& rng, std::size_t n, std::size_t comps, bool is_long) {
  Diagram d;
  d.long_flag = is_long;
  d.components.resize(comps);
  for (Label x = 1; x <= static_cast<Label>(n); ++x) insert_chord(d, rng, x, pick(rng, comps), pick(rng, comps));
  return d;
}

inline Diagram random_knot(Rng& rng, std::size_t max_n) { return random_diagram(rng, 1 + pick(rng, max_n), 1, false); }
inline Diagram random_long_knot(Rng& rng, std::size_t max_n) {
  return random_diagram(rng, 1 + pick(rng, max_n), 1, true);
}
inline Diagram random_link2(Rng& rng, std::size_t max_n) { return random_diagram(rng, 1 + pick(rng, max_n), 2, false); }

// Two components, component 1 oriented, an odd number of intercomponent chords.
inline Diagram random_l0(Rng& rng, std::size_t max_n) {
  Diagram d;
  d.components.resize(2);
  std::size_t inter = 1 + 2 * pick(rng, (max_n + 1) / 2);
  std::size_t intra = pick(rng, max_n - inter + 1);
  Label x = 1;
  for (std::size_t i = 0; i < inter; ++i) insert_chord(d, rng, x++, 0, 1);
  for (std::size_t i = 0; i < intra; ++i) {
    std::size_t c = pick(rng, 2);
    insert_chord(d, rng, x++, c, c);
  }
  d.components[0].oriented = true;
  return d;
}

// The built-in link with a few extra intracomponent chords, mostly on component 1.
inline Diagram random_link_variant(Rng& rng) {
  Diagram d = builtin_example_link();
  std::size_t extra = 1 + pick(rng, 3);
  for (std::size_t e = 0; e < extra; ++e) {
    std::size_t c = pick(rng, 4) == 0 ? 1 : 0;
    insert_chord(d, rng, static_cast<Label>(12 + e), c, c);
  }
  return d;
}

// Uniform over move kinds that have a site, then uniform over that kind's sites.
inline std::optional<MoveInstance> random_move(const Diagram& d, Rng& rng, std::size_t max_crossings) {
  std::vector<std::vector<MoveInstance>> by_kind;
  for (MoveKind k : all_move_kinds()) {
    std::size_t added = k == MoveKind::R1_add ? 1 : k == MoveKind::R2_add ? 2 : 0;
    if (d.crossing_count() + added > max_crossings) continue;
    auto sites = find_moves(d, {k});
    if (!sites.empty()) by_kind.push_back(std::move(sites));
  }
  if (by_kind.empty()) return std::nullopt;
  const auto& sites = by_kind[pick(rng, by_kind.size())];
  return sites[pick(rng, sites.size())];
}

}  // namespace fktest
