#include <gtest/gtest.h>

#include "support.hpp"

using namespace freeknot;

namespace {

const std::vector<int> kBeta{3, 3, 3, 4, 6, 7, 6, 2, 6, 9, 6};

// Test-side oracle: position of each chord of component 2, then differences mod n.
std::vector<int> beta_oracle(const std::vector<Label>& a, const std::vector<Label>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    auto p = std::find(b.begin(), b.end(), a[static_cast<std::size_t>(i)]) - b.begin();
    auto q = std::find(b.begin(), b.end(), a[static_cast<std::size_t>((i + 1) % n)]) - b.begin();
    out.push_back(static_cast<int>(((q - p) % n + n) % n));
  }
  return out;
}

}  // namespace

TEST(Beta, ExampleLink) {
  Diagram l = builtin_example_link();
  BetaOrbit b = beta_sequence(l);
  EXPECT_EQ(b.n, 11);
  EXPECT_TRUE(b.contains(kBeta));
  EXPECT_EQ(b.sequence, beta_oracle(l.components[0].word, l.components[1].word));
  std::vector<int> neg;
  for (int x : kBeta) neg.push_back((11 - x) % 11);
  EXPECT_TRUE(cyclically_equal(neg, {8, 8, 8, 7, 5, 4, 5, 9, 5, 2, 5}));
  EXPECT_TRUE(dihedrally_equal(neg, {8, 8, 8, 5, 2, 5, 9, 5, 4, 5, 7}));
  EXPECT_FALSE(cyclically_equal(neg, {8, 8, 8, 5, 2, 5, 9, 5, 4, 5, 7}));
}

TEST(Beta, PartialSumsArePermutation) {
  BetaOrbit b = beta_sequence(builtin_example_link());
  std::set<int> sums;
  int acc = 0;
  for (int x : b.sequence) {
    EXPECT_GE(x, 1);
    EXPECT_LE(x, 10);
    sums.insert(acc);
    acc = (acc + x) % 11;
  }
  EXPECT_EQ(acc, 0);
  EXPECT_EQ(sums.size(), 11u);
}

TEST(Beta, ReversalOfFirstComponent) {
  Diagram l = builtin_example_link();
  BetaOrbit r = beta_sequence(reverse_orientation(l, {0}));
  EXPECT_FALSE(r == beta_sequence(l));
  bool fragment = false;
  for (const auto& m : r.members()) fragment = fragment || has_cyclic_fragment(m, {4, 3, 3, 3, 6});
  EXPECT_TRUE(fragment);
  for (const auto& m : beta_sequence(l).members()) EXPECT_FALSE(has_cyclic_fragment(m, {4, 3, 3, 3, 6}));
}

TEST(Beta, OrbitInvariances) {
  Diagram l = builtin_example_link();
  BetaOrbit base = beta_sequence(l);
  fktest::Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    Diagram g = l;
    for (auto& c : g.components) {
      auto& w = c.word;
      std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(fktest::pick(rng, w.size())), w.end());
    }
    if (t % 2) g = reverse_orientation(g, {1});
    for (auto& c : g.components)
      for (auto& x : c.word) x += 40;
    EXPECT_TRUE(beta_sequence(g) == base);
  }
  EXPECT_THROW(beta_sequence(parse_diagram("+1 2 1 3 ; 2 3")), DiagramError);
}

TEST(BuiltinKnot, Structure) {
  Diagram k = builtin_example_knot();
  EXPECT_EQ(k.crossing_count(), 12u);
  EXPECT_TRUE(is_irreducible_r2(k));
  EXPECT_EQ(parity_of(k, ParityKind::Gaussian, 1), Parity::Odd);
  int all_linked = 0;
  for (Label x : labels_of(k)) {
    bool every = true;
    for (Label y : labels_of(k))
      if (y != x && !linked(k, x, y)) every = false;
    all_linked += every;
  }
  EXPECT_EQ(all_linked, 1);
  for (Label y = 2; y <= 12; ++y) EXPECT_TRUE(linked(k, 1, y));
}

TEST(BuiltinKnot, DeltaSummands) {
  Diagram k = builtin_example_knot();
  k.components[0].oriented = true;
  const std::string l = canonical_string(strip_orientation(builtin_example_link()), {true, true, true});
  auto terms = delta_terms(k);
  ASSERT_EQ(terms.size(), 12u);
  for (const auto& [x, s] : terms) {
    bool is_l = canonical_string(strip_orientation(s), {true, true, true}) == l;
    EXPECT_EQ(is_l, x == 1);
    if (x == 1) continue;
    EXPECT_LT(intercomponent_count(s), 11u);
    for (std::size_t i = 0; i < 2; ++i) {
      Diagram role;
      role.components = {s.components[i], s.components[1 - i]};
      role.components[0].oriented = !role.components[0].word.empty();
      role.components[1].oriented = false;
      if (role.components[0].word.empty()) continue;
      for (const auto& m : bracket_curly2(role).members()) EXPECT_LT(parse_diagram(m).crossing_count(), 11u);
    }
  }
}

TEST(Certificates, Link) {
  Certificate c = check_link_theorem(builtin_example_link());
  EXPECT_EQ(c.verdict, Verdict::NonInvertible);
  for (const auto& cond : c.conditions) EXPECT_TRUE(cond.holds) << cond.name;
  EXPECT_EQ(check_link_theorem(parse_diagram("+1 2 3 ; 1 2 3")).verdict, Verdict::Inconclusive);
  EXPECT_FALSE(check_link_theorem(parse_diagram("+1 2 3 ; 1 2 3")).condition("not_reversal_isomorphic").holds);
  Certificate mixed = check_link_theorem(parse_diagram("+1 2 1 3 4 ; 2 3 4"));
  EXPECT_EQ(mixed.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(mixed.condition("all_crossings_intercomponent").holds);
  EXPECT_NE(mixed.condition("all_crossings_intercomponent").witness.find('1'), std::string::npos);
  EXPECT_THROW(check_link_theorem(parse_diagram("+1 2 ; 1 2")), DiagramError);
}

TEST(Certificates, Long) {
  Certificate r = check_long_theorem(parse_diagram("@long 1 2 1 2"));
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(r.condition("r2_irreducible").holds);
  Certificate e = check_long_theorem(parse_diagram("@long 1 2 3 1 2 3"));
  EXPECT_EQ(e.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(e.condition("all_crossings_odd").holds);
  EXPECT_THROW(check_long_theorem(parse_diagram("1 1")), DiagramError);
}

TEST(Certificates, LongSearch) {
  EXPECT_FALSE(search_long_example(1).has_value());
  EXPECT_FALSE(search_long_example(2).has_value());
  auto w = search_long_example(6);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(check_long_theorem(*w).verdict, Verdict::NonInvertible);
  EXPECT_EQ(bracket_square_or(*w).members(), std::set<std::string>{emit_diagram(canonical_form(*w, {false, false, false}))});
  EXPECT_THROW(search_long_example(9), DiagramError);
}

TEST(Certificates, KnotViaDelta) {
  Certificate k = knot_noninvertibility_via_delta(builtin_example_knot());
  EXPECT_EQ(k.verdict, Verdict::NonInvertible);
  Diagram l = builtin_example_link();
  ZgElement forward = oriented_delta_bracket([] {
    Diagram d = builtin_example_knot();
    d.components[0].oriented = true;
    return d;
  }());
  EXPECT_TRUE(forward.contains(canonical_string(l, curly2_config().symmetry)));
  EXPECT_EQ(knot_noninvertibility_via_delta(parse_diagram("1 2 1 2")).verdict, Verdict::Inconclusive);
  EXPECT_EQ(knot_noninvertibility_via_delta(parse_diagram("o")).verdict, Verdict::Inconclusive);
}

TEST(Certificates, ReversalSymmetryRemovesTheObstruction) {
  Diagram l = builtin_example_link();
  Diagram u = strip_orientation(l);
  EXPECT_FALSE(is_isomorphic(l, reverse_orientation(l, {0}), {false, true, true}));
  EXPECT_TRUE(is_isomorphic(u, reverse_orientation(u, {0}), {false, true, true}));
}
