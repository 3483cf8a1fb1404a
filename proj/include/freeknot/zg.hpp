#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "freeknot/canonical.hpp"
#include "freeknot/diagram.hpp"
#include "freeknot/moves.hpp"

namespace freeknot {

/// The quotient a bracket lands in: diagrams modulo R2 moves and the
/// symmetries in `symmetry`, optionally with split trivial circles set to zero.
struct QuotientConfig {
  std::string name;
  SymmetryConfig symmetry;
  bool kill_split_loops = true;

  bool operator==(const QuotientConfig&) const = default;
};

inline bool has_split_loop(const Diagram& d) {
  if (d.component_count() < 2) return false;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    if (d.is_closed(c) && d.components[c].word.empty()) return true;
  return false;
}

/// Element of a mod-2 quotient space: the set of canonical R2-irreducible
/// representatives with coefficient 1.
class ZgElement {
public:
  ZgElement() = default;
  explicit ZgElement(QuotientConfig config) : config_(std::move(config)) {}

  const QuotientConfig& config() const { return config_; }
  const std::set<std::string>& members() const { return members_; }
  bool is_zero() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(const std::string& member) const { return members_.count(member) > 0; }

  /// Reduces, canonicalizes and adds d with coefficient 1 (mod 2).
  void add(const Diagram& d) {
    Diagram r = reduce_r2(d);
    if (config_.kill_split_loops && has_split_loop(r)) return;
    toggle(canonical_string(r, config_.symmetry));
  }

  void toggle(const std::string& member) {
    auto [it, inserted] = members_.insert(member);
    if (!inserted) members_.erase(it);
  }

  ZgElement& operator+=(const ZgElement& o) {
    for (const auto& m : o.members_) toggle(m);
    return *this;
  }

  bool operator==(const ZgElement& o) const { return config_ == o.config_ && members_ == o.members_; }

private:
  QuotientConfig config_;
  std::set<std::string> members_;
};

/// Mod-2 formal sum of diagrams, compared up to relabeling and each
/// diagram's own symmetries but with no R2 reduction.
class FormalSum {
public:
  void add(const Diagram& d) {
    std::string key = canonical_string(d, default_symmetry(d));
    auto it = terms_.find(key);
    if (it != terms_.end())
      terms_.erase(it);
    else
      terms_.emplace(std::move(key), d);
  }

  const std::map<std::string, Diagram>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const FormalSum& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
      if (a->first != b->first) return false;
    return true;
  }

private:
  std::map<std::string, Diagram> terms_;
};

inline ZgElement zg_project(const std::vector<Diagram>& diagrams, const QuotientConfig& cfg) {
  ZgElement out(cfg);
  for (const auto& d : diagrams) {
    if (d.long_flag != diagrams.front().long_flag || d.ordered_flag != diagrams.front().ordered_flag)
      throw DiagramError("zg_project: diagrams carry different flags");
    out.add(d);
  }
  return out;
}

inline ZgElement zg_project(const FormalSum& sum, const QuotientConfig& cfg) {
  std::vector<Diagram> ds;
  for (const auto& [key, d] : sum.terms()) ds.push_back(d);
  return zg_project(ds, cfg);
}

}  // namespace freeknot
