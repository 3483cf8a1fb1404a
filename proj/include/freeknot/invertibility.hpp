#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "freeknot/brackets.hpp"
#include "freeknot/canonical.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/parity.hpp"

namespace freeknot {

// ---------------------------------------------------------------------------
// Distance sequences

namespace detail {

inline std::vector<int> rotated(const std::vector<int>& s, std::size_t r) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[(i + r) % s.size()];
  return out;
}

inline std::vector<int> negated(const std::vector<int>& s, int n) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = (n - s[i]) % n;
  return out;
}

}  // namespace detail

/// True iff b is a rotation of a.
inline bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r)
    if (detail::rotated(a, r) == b) return true;
  return false;
}

/// True iff b is a rotation of a or of a read backwards.
inline bool dihedrally_equal(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> back(a.rbegin(), a.rend());
  return cyclically_equal(a, b) || cyclically_equal(back, b);
}

/// Whether `needle` occurs as a contiguous cyclic fragment of `seq`.
inline bool has_cyclic_fragment(const std::vector<int>& seq, const std::vector<int>& needle) {
  if (needle.size() > seq.size()) return false;
  for (std::size_t r = 0; r < seq.size(); ++r) {
    bool ok = true;
    for (std::size_t k = 0; k < needle.size() && ok; ++k) ok = seq[(r + k) % seq.size()] == needle[k];
    if (ok) return true;
  }
  return false;
}

/// Cyclic sequence of residues mod n, taken up to rotation and global negation.
struct BetaOrbit {
  int n = 0;
  std::vector<int> sequence;

  /// Every sequence in the orbit.
  std::vector<std::vector<int>> members() const {
    std::vector<std::vector<int>> out;
    for (const auto& base : {sequence, detail::negated(sequence, n)})
      for (std::size_t r = 0; r < base.size(); ++r) out.push_back(detail::rotated(base, r));
    if (sequence.empty()) out.push_back({});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<int> representative() const { return members().front(); }

  bool contains(const std::vector<int>& s) const {
    auto m = members();
    return std::binary_search(m.begin(), m.end(), s);
  }

  bool operator==(const BetaOrbit& o) const { return n == o.n && representative() == o.representative(); }
};

/// Distances along component 2 between crossings consecutive along the
/// oriented component 1.
inline BetaOrbit beta_sequence(const Diagram& d) {
  if (d.component_count() != 2 || d.long_flag) throw DiagramError("beta_sequence: expected a closed two-component diagram");
  if (!d.components[0].oriented) throw DiagramError("beta_sequence: component 1 must carry an orientation mark");
  for (const auto& [label, pos] : occurrences(d))
    if (pos[0].component == pos[1].component)
      throw DiagramError("beta_sequence: crossing " + std::to_string(label) + " is intracomponent");
  const auto& first = d.components[0].word;
  const auto& second = d.components[1].word;
  const int n = static_cast<int>(first.size());
  std::map<Label, int> where;
  for (int i = 0; i < n; ++i) where[second[static_cast<std::size_t>(i)]] = i;
  BetaOrbit orbit{n, {}};
  for (int i = 0; i < n; ++i) {
    int a = where.at(first[static_cast<std::size_t>(i)]);
    int b = where.at(first[static_cast<std::size_t>((i + 1) % n)]);
    orbit.sequence.push_back(((b - a) % n + n) % n);
  }
  return orbit;
}

// ---------------------------------------------------------------------------
// Built-in examples

/// Eleven-crossing link whose distance sequence is (3,3,3,4,6,7,6,2,6,9,6).
inline Diagram builtin_example_link() {
  return parse_diagram("+1 2 3 4 5 6 7 8 9 10 11 ; 1 9 5 2 7 11 3 10 6 4 8");
}

/// Twelve-crossing knot: chord 1 is linked with every other chord and its
/// two-component smoothing is builtin_example_link().
inline Diagram builtin_example_knot() {
  return parse_diagram("1 2 3 4 5 6 7 8 9 10 11 12 1 10 6 3 8 12 4 11 7 5 9 2");
}

// ---------------------------------------------------------------------------
// Certificates

enum class Verdict { NonInvertible, Inconclusive };

inline const char* to_string(Verdict v) { return v == Verdict::NonInvertible ? "NonInvertible" : "Inconclusive"; }

struct Condition {
  std::string name;
  bool holds = false;
  std::string witness;
};

struct Certificate {
  std::string theorem;
  std::vector<Condition> conditions;
  Verdict verdict = Verdict::Inconclusive;

  const Condition& condition(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return c;
    throw std::out_of_range("no condition named " + name);
  }
};

namespace detail {

inline Certificate finish(Certificate c) {
  bool all = !c.conditions.empty();
  for (const auto& cond : c.conditions) all = all && cond.holds;
  c.verdict = all ? Verdict::NonInvertible : Verdict::Inconclusive;
  return c;
}

inline std::string describe(const Diagram& d, const MoveInstance& m) {
  std::ostringstream out;
  out << to_string(m.kind) << " at";
  for (const auto& p : m.site) out << " (" << p.component + 1 << ":" << p.index << "=" << label_at(d, p) << ")";
  return out.str();
}

inline Condition r2_condition(const Diagram& d) {
  auto sites = find_r2_remove(d);
  return {"r2_irreducible", sites.empty(), sites.empty() ? "" : describe(d, sites.front())};
}

inline std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " | ") + x;
  return out;
}

}  // namespace detail

/// Long one-component diagram: all crossings odd, R2-irreducible, and not
/// isomorphic to its reverse.
inline Certificate check_long_theorem(const Diagram& d) {
  if (!d.long_flag || d.component_count() != 1)
    throw DiagramError("check_long_theorem: expected a long one-component diagram");
  Certificate cert{"long", {}, Verdict::Inconclusive};

  Condition odd{"all_crossings_odd", true, ""};
  for (const auto& [label, p] : parity_table(d, ParityKind::Gaussian))
    if (p == Parity::Even) {
      odd = {"all_crossings_odd", false, "crossing " + std::to_string(label) + " is even"};
      break;
    }
  cert.conditions.push_back(odd);
  cert.conditions.push_back(detail::r2_condition(d));

  const SymmetryConfig fixed{false, false, false};
  const Diagram plain = strip_orientation(d);
  std::string forward = canonical_string(plain, fixed);
  std::string backward = canonical_string(reverse_all(plain), fixed);
  cert.conditions.push_back({"not_reversal_isomorphic", forward != backward,
                             forward == backward ? "reverse has the same canonical form " + forward : ""});

  const bool reduced = odd.holds && cert.conditions[1].holds;
  if (reduced) {
    ZgElement b = bracket_square_or(d);
    bool fixes = b.size() == 1 && b.contains(forward);
    cert.conditions.push_back({"bracket_reproduces_diagram", fixes, fixes ? "" : "bracket differs from the diagram"});
  }
  return detail::finish(cert);
}

/// Searches linear double-occurrence words by crossing count, in
/// lexicographic order, for the first diagram passing check_long_theorem.
inline std::optional<Diagram> search_long_example(std::size_t max_n) {
  if (max_n > 8) throw DiagramError("search_long_example: max_n is limited to 8");
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Label> word;
    std::vector<int> seen(n + 1, 0);
    std::optional<Diagram> found;
    std::function<void(Label)> rec = [&](Label introduced) {
      if (found) return;
      if (word.size() == 2 * n) {
        Diagram d;
        d.long_flag = true;
        d.components.push_back(Component{word, false});
        for (const auto& [label, p] : parity_table(d, ParityKind::Gaussian))
          if (p == Parity::Even) return;
        if (!is_irreducible_r2(d)) return;
        Diagram back = renumber(reverse_all(d));
        if (back == d) return;
        found = d;
        return;
      }
      for (Label l = 1; l <= introduced; ++l) {
        if (seen[static_cast<std::size_t>(l)] != 1) continue;
        word.push_back(l);
        ++seen[static_cast<std::size_t>(l)];
        rec(introduced);
        --seen[static_cast<std::size_t>(l)];
        word.pop_back();
      }
      if (static_cast<std::size_t>(introduced) < n) {
        Label l = introduced + 1;
        word.push_back(l);
        ++seen[static_cast<std::size_t>(l)];
        rec(l);
        --seen[static_cast<std::size_t>(l)];
        word.pop_back();
      }
    };
    rec(0);
    if (found) return found;
  }
  return std::nullopt;
}

/// Two-component link with component 1 oriented and an odd number of
/// intercomponent crossings.
inline Certificate check_link_theorem(const Diagram& d) {
  detail::require_curly2_shape(d);
  if (intercomponent_count(d) % 2 == 0)
    throw DiagramError("check_link_theorem: intercomponent crossing count must be odd");
  Certificate cert{"link", {}, Verdict::Inconclusive};

  Condition inter{"all_crossings_intercomponent", true, ""};
  for (const auto& [label, pos] : occurrences(d))
    if (pos[0].component == pos[1].component) {
      inter = {"all_crossings_intercomponent", false, "crossing " + std::to_string(label) + " is intracomponent"};
      break;
    }
  cert.conditions.push_back(inter);
  cert.conditions.push_back(detail::r2_condition(d));

  const SymmetryConfig oriented_first{false, true, true};
  std::string forward = canonical_string(d, oriented_first);
  std::string backward = canonical_string(reverse_orientation(d, {0}), oriented_first);
  cert.conditions.push_back({"not_reversal_isomorphic", forward != backward,
                             forward == backward ? "reversing component 1 gives the same canonical form " + forward : ""});

  Diagram plain = strip_orientation(d);
  plain.ordered_flag = true;
  Diagram swapped = plain;
  std::swap(swapped.components[0], swapped.components[1]);
  const SymmetryConfig unoriented_ordered{false, true, true};
  std::string as_is = canonical_string(plain, unoriented_ordered);
  std::string as_swapped = canonical_string(swapped, unoriented_ordered);
  cert.conditions.push_back({"no_component_swap_isomorphism", as_is != as_swapped,
                             as_is == as_swapped ? "swapping components gives the same canonical form " + as_is : ""});

  if (inter.holds && cert.conditions[1].holds) {
    ZgElement b = bracket_curly2(d);
    std::string own = canonical_string(d, curly2_config().symmetry);
    bool fixes = b.size() == 1 && b.contains(own);
    cert.conditions.push_back({"bracket_reproduces_diagram", fixes, fixes ? "" : "bracket differs from the diagram"});
  }
  return detail::finish(cert);
}

/// Sum over the summands S of delta(d) of bracket_curly2 applied to S with
/// either component taken as the oriented first one.
inline ZgElement oriented_delta_bracket(const Diagram& d) {
  ZgElement total(curly2_config());
  const FormalSum sum = delta(d);
  for (const auto& [key, s] : sum.terms()) {
    for (std::size_t i = 0; i < 2; ++i) {
      Diagram role;
      Component lead = s.components[i];
      Component rest = s.components[1 - i];
      if (lead.word.empty()) continue;  // no intercomponent crossings, so the term is zero
      lead.oriented = true;
      rest.oriented = false;
      role.components = {lead, rest};
      total += bracket_curly2(role);
    }
  }
  return total;
}

/// Closed one-component diagram, read in its word direction. NonInvertible
/// when the oriented delta brackets of d and of its reverse differ.
inline Certificate knot_noninvertibility_via_delta(const Diagram& d) {
  if (d.component_count() != 1 || d.long_flag)
    throw DiagramError("knot_noninvertibility_via_delta: expected a closed one-component diagram");
  Diagram k = d;
  k.components[0].oriented = !k.components[0].word.empty();
  ZgElement forward = oriented_delta_bracket(k);
  ZgElement backward = oriented_delta_bracket(reverse_all(k));
  std::vector<std::string> only_forward, only_backward;
  for (const auto& m : forward.members())
    if (!backward.contains(m)) only_forward.push_back(m);
  for (const auto& m : backward.members())
    if (!forward.contains(m)) only_backward.push_back(m);
  const bool differ = !only_forward.empty() || !only_backward.empty();
  std::string witness;
  if (differ)
    witness = "only in V(K): [" + detail::join(only_forward) + "]; only in V(reverse K): [" +
              detail::join(only_backward) + "]";
  Certificate cert{"knot-delta", {{"delta_bracket_distinguishes_reverse", differ, witness}}, Verdict::Inconclusive};
  return detail::finish(cert);
}

}  // namespace freeknot
