#pragma once

#include <map>
#include <set>

#include "freeknot/diagram.hpp"
#include "freeknot/moves.hpp"

namespace freeknot {

enum class ParityKind {
  Gaussian,   // interlacement count mod 2; every chord on a single component
  Component,  // two-component links: intercomponent crossings are odd
};

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline bool parity_applicable(const Diagram& d, ParityKind kind) {
  if (kind == ParityKind::Component) return d.component_count() == 2;
  for (const auto& [label, pos] : occurrences(d))
    if (pos[0].component != pos[1].component) return false;
  return true;
}

/// Parity of every crossing of `d`.
inline std::map<Label, Parity> parity_table(const Diagram& d, ParityKind kind) {
  if (!parity_applicable(d, kind))
    throw DiagramError(kind == ParityKind::Component
                           ? "component parity needs exactly two components"
                           : "Gaussian parity needs every chord to lie on a single component");
  std::map<Label, Parity> table;
  auto occ = occurrences(d);
  if (kind == ParityKind::Component) {
    for (const auto& [label, pos] : occ)
      table[label] = pos[0].component == pos[1].component ? Parity::Even : Parity::Odd;
    return table;
  }
  for (const auto& [x, px] : occ) {
    int count = 0;
    for (const auto& [y, py] : occ) {
      if (y == x || py[0].component != px[0].component) continue;
      const std::size_t lo = std::min(px[0].index, px[1].index), hi = std::max(px[0].index, px[1].index);
      int between = 0;
      for (const auto& p : py)
        if (p.index > lo && p.index < hi) ++between;
      if (between == 1) ++count;
    }
    table[x] = count % 2 ? Parity::Odd : Parity::Even;
  }
  return table;
}

inline Parity parity_of(const Diagram& d, ParityKind kind, Label x) {
  auto table = parity_table(d, kind);
  auto it = table.find(x);
  if (it == table.end()) throw DiagramError("parity_of: unknown label " + std::to_string(x));
  return it->second;
}

/// Checks the parity axioms on one move: R1 crossings are even, R2 pairs share
/// a parity, R3 triples have an even number of odd crossings, every crossing
/// keeps its parity, and crossings outside the move are unaffected.
inline bool check_parity_axioms(const Diagram& d, ParityKind kind, const MoveInstance& m) {
  Diagram after = apply_move(d, m);
  if (!parity_applicable(d, kind) || !parity_applicable(after, kind))
    throw DiagramError("check_parity_axioms: parity kind not applicable on both sides of the move");
  auto before_t = parity_table(d, kind);
  auto after_t = parity_table(after, kind);

  std::set<Label> participants;
  auto collect = [&](const Diagram& from, const std::vector<Position>& site) {
    for (const auto& p : site) participants.insert(from.components[p.component].word[p.index]);
  };
  switch (m.kind) {
    case MoveKind::R1_remove:
    case MoveKind::R2_remove:
    case MoveKind::R3: collect(d, m.site); break;
    case MoveKind::R1_add:
    case MoveKind::R2_add:
      for (const auto& [label, p] : after_t)
        if (!before_t.count(label)) participants.insert(label);
      break;
  }

  for (const auto& [label, p] : before_t) {
    auto it = after_t.find(label);
    if (it != after_t.end() && it->second != p) return false;  // spectators and R3 triples keep parity
  }
  const auto& where = (m.kind == MoveKind::R1_add || m.kind == MoveKind::R2_add) ? after_t : before_t;
  std::size_t odd = 0;
  for (Label l : participants)
    if (where.at(l) == Parity::Odd) ++odd;
  switch (m.kind) {
    case MoveKind::R1_remove:
    case MoveKind::R1_add: return odd == 0;
    case MoveKind::R2_remove:
    case MoveKind::R2_add: return odd == 0 || odd == 2;
    case MoveKind::R3: return odd == 0 || odd == 2;
  }
  return false;
}

}  // namespace freeknot
