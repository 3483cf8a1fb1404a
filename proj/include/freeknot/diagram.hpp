#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace freeknot {

using Label = int;

/// Raised for malformed Gauss codes and for diagrams violating the
/// double-occurrence invariant.
class DiagramError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One unicursal component. An empty word is a crossingless circle (or, for
/// the long component, a bare line).
struct Component {
  std::vector<Label> word;
  bool oriented = false;

  bool operator==(const Component&) const = default;
};

/// Multi-component Gauss code. When `long_flag` is set, component 0 is the
/// long component and its word is read linearly between the two infinite ends.
struct Diagram {
  bool long_flag = false;
  bool ordered_flag = false;
  std::vector<Component> components;

  bool operator==(const Diagram&) const = default;

  std::size_t component_count() const { return components.size(); }

  std::size_t crossing_count() const {
    std::size_t total = 0;
    for (const auto& c : components) total += c.word.size();
    return total / 2;
  }

  // Whether component i is read cyclically.
  bool is_closed(std::size_t i) const { return !(long_flag && i == 0); }
};

/// Location of one occurrence of a label.
struct Position {
  std::size_t component = 0;
  std::size_t index = 0;

  auto operator<=>(const Position&) const = default;
};

using OccurrenceMap = std::map<Label, std::vector<Position>>;

inline OccurrenceMap occurrences(const Diagram& d) {
  OccurrenceMap occ;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& w = d.components[c].word;
    for (std::size_t i = 0; i < w.size(); ++i) occ[w[i]].push_back({c, i});
  }
  return occ;
}

inline std::vector<Label> labels_of(const Diagram& d) {
  std::vector<Label> out;
  for (const auto& [label, pos] : occurrences(d)) out.push_back(label);
  return out;
}

inline Label max_label(const Diagram& d) {
  Label m = 0;
  for (const auto& c : d.components)
    for (Label l : c.word) m = std::max(m, l);
  return m;
}

/// Throws DiagramError unless every label is positive and occurs exactly
/// twice, no empty component is oriented, and there is at least one component.
inline void validate(const Diagram& d) {
  if (d.components.empty()) throw DiagramError("diagram has no components");
  for (const auto& c : d.components) {
    if (c.oriented && c.word.empty())
      throw DiagramError("orientation mark on a crossingless component");
    for (Label l : c.word)
      if (l < 1) throw DiagramError("label " + std::to_string(l) + " is not a positive integer");
  }
  for (const auto& [label, pos] : occurrences(d))
    if (pos.size() != 2)
      throw DiagramError("label " + std::to_string(label) + " occurs " + std::to_string(pos.size()) +
                         " time" + (pos.size() == 1 ? "" : "s") + ", expected exactly 2");
}

/// Renumbers labels 1..n by first occurrence, scanning components in order.
inline Diagram renumber(const Diagram& d) {
  Diagram out = d;
  std::map<Label, Label> fresh;
  for (auto& c : out.components)
    for (Label& l : c.word) {
      auto [it, inserted] = fresh.try_emplace(l, static_cast<Label>(fresh.size()) + 1);
      l = it->second;
    }
  return out;
}

namespace detail {

inline std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(std::move(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ';') {
      flush();
      tokens.emplace_back(";");
    } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();
  return tokens;
}

inline Label parse_label(const std::string& tok) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw DiagramError("expected a label (decimal integer >= 1), got '" + tok + "'");
  if (tok.size() > 9) throw DiagramError("label '" + tok + "' is too large");
  Label l = std::stoi(tok);
  if (l < 1) throw DiagramError("label must be >= 1, got '" + tok + "'");
  return l;
}

}  // namespace detail

/// Parses the Gauss-code grammar:
///   Diagram   := Flag* Component (";" Component)*
///   Flag      := "@long" | "@ordered"
///   Component := "o" | "+"? Label+
inline Diagram parse_diagram(const std::string& text) {
  auto tokens = detail::tokenize(text);
  Diagram d;
  std::size_t i = 0;
  for (; i < tokens.size() && !tokens[i].empty() && tokens[i][0] == '@'; ++i) {
    if (tokens[i] == "@long") {
      if (d.long_flag) throw DiagramError("duplicate flag @long");
      d.long_flag = true;
    } else if (tokens[i] == "@ordered") {
      if (d.ordered_flag) throw DiagramError("duplicate flag @ordered");
      d.ordered_flag = true;
    } else {
      throw DiagramError("unknown flag '" + tokens[i] + "'");
    }
  }
  if (i == tokens.size()) throw DiagramError("empty diagram: expected at least one component");

  Component cur;
  bool seen_any = false;
  bool pending_mark = false;
  auto finish = [&] {
    if (!seen_any && !pending_mark) throw DiagramError("empty component between ';' separators");
    if (pending_mark && cur.word.empty()) throw DiagramError("orientation mark '+' without labels");
    d.components.push_back(std::move(cur));
    cur = Component{};
    seen_any = false;
    pending_mark = false;
  };
  bool circle = false;
  for (; i < tokens.size(); ++i) {
    std::string tok = tokens[i];
    if (tok == ";") {
      finish();
      circle = false;
      continue;
    }
    if (tok[0] == '@') throw DiagramError("flag '" + tok + "' must precede all components");
    if (circle) throw DiagramError("'o' must be the only token of its component");
    if (tok == "o") {
      if (seen_any || pending_mark) throw DiagramError("'o' must be the only token of its component");
      seen_any = true;
      circle = true;
      continue;
    }
    if (tok == "+o") throw DiagramError("orientation mark on a crossingless component");
    if (tok[0] == '+') {
      if (seen_any || pending_mark) throw DiagramError("orientation mark '+' must start its component");
      cur.oriented = true;
      pending_mark = true;
      tok.erase(0, 1);
      if (tok.empty()) continue;
    }
    cur.word.push_back(detail::parse_label(tok));
    seen_any = true;
  }
  finish();
  validate(d);
  return d;
}

/// Canonical serialization with labels renumbered by first occurrence.
inline std::string emit_diagram(const Diagram& d) {
  Diagram r = renumber(d);
  std::ostringstream out;
  if (r.long_flag) out << "@long ";
  if (r.ordered_flag) out << "@ordered ";
  for (std::size_t c = 0; c < r.components.size(); ++c) {
    if (c) out << " ; ";
    const auto& comp = r.components[c];
    if (comp.word.empty()) {
      out << 'o';
      continue;
    }
    if (comp.oriented) out << '+';
    for (std::size_t i = 0; i < comp.word.size(); ++i) {
      if (i) out << ' ';
      out << comp.word[i];
    }
  }
  return out.str();
}

/// True iff exactly one occurrence of y lies strictly between the two
/// occurrences of x. Both chords must lie on one common component.
inline bool linked(const Diagram& d, Label x, Label y) {
  if (x == y) throw DiagramError("linked: chords must be distinct");
  auto occ = occurrences(d);
  auto ix = occ.find(x), iy = occ.find(y);
  if (ix == occ.end() || iy == occ.end()) throw DiagramError("linked: unknown label");
  const auto& px = ix->second;
  const auto& py = iy->second;
  std::size_t c = px[0].component;
  if (px[1].component != c || py[0].component != c || py[1].component != c)
    throw DiagramError("linked: chords " + std::to_string(x) + " and " + std::to_string(y) +
                       " do not share a component");
  std::size_t lo = px[0].index, hi = px[1].index;
  int between = 0;
  for (const auto& p : py)
    if (p.index > lo && p.index < hi) ++between;
  return between == 1;
}

/// Reverses the words of the listed components; orientation marks stay put,
/// so an oriented component ends up with the opposite orientation.
inline Diagram reverse_orientation(const Diagram& d, const std::vector<std::size_t>& comps) {
  Diagram out = d;
  for (std::size_t c : comps) {
    if (c >= out.components.size())
      throw DiagramError("reverse_orientation: component index " + std::to_string(c) + " out of range");
    auto& w = out.components[c].word;
    std::reverse(w.begin(), w.end());
  }
  return out;
}

inline Diagram reverse_all(const Diagram& d) {
  std::vector<std::size_t> all(d.components.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return reverse_orientation(d, all);
}

inline Diagram strip_orientation(Diagram d) {
  for (auto& c : d.components) c.oriented = false;
  return d;
}

}  // namespace freeknot
