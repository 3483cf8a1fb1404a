#include <gtest/gtest.h>

#include "support.hpp"

using namespace freeknot;

TEST(Parity, Gaussian) {
  for (const auto& [x, p] : parity_table(parse_diagram("1 2 1 2"), ParityKind::Gaussian)) EXPECT_EQ(p, Parity::Odd);
  for (const auto& [x, p] : parity_table(parse_diagram("1 2 3 1 2 3"), ParityKind::Gaussian))
    EXPECT_EQ(p, Parity::Even);
  EXPECT_EQ(parity_of(parse_diagram("@long 1 2 1 3 3 2"), ParityKind::Gaussian, 3), Parity::Even);
}

TEST(Parity, Component) {
  Diagram d = parse_diagram("1 2 1 3 4 ; 2 3 4");
  EXPECT_EQ(parity_of(d, ParityKind::Component, 1), Parity::Even);
  for (Label x : {2, 3, 4}) EXPECT_EQ(parity_of(d, ParityKind::Component, x), Parity::Odd);
}

TEST(Parity, StructuralErrors) {
  EXPECT_THROW(parity_table(parse_diagram("1 2 ; 1 2"), ParityKind::Gaussian), DiagramError);
  EXPECT_THROW(parity_table(parse_diagram("1 1"), ParityKind::Component), DiagramError);
  EXPECT_THROW(parity_table(parse_diagram("1 ; 1 ; o"), ParityKind::Component), DiagramError);
  EXPECT_THROW(parity_of(parse_diagram("1 1"), ParityKind::Gaussian, 7), DiagramError);
}

TEST(ParityAxioms, Examples) {
  Diagram a = parse_diagram("1 1 2 2");
  EXPECT_TRUE(check_parity_axioms(a, ParityKind::Gaussian, find_moves(a, {MoveKind::R1_remove}).front()));
  Diagram b = parse_diagram("1 2 1 2");
  EXPECT_TRUE(check_parity_axioms(b, ParityKind::Gaussian, find_moves(b, {MoveKind::R2_remove}).front()));
  Diagram c = parse_diagram("1 2 3 1 2 3");
  EXPECT_TRUE(check_parity_axioms(c, ParityKind::Gaussian, find_moves(c, {MoveKind::R3}).front()));
}

TEST(ParityAxioms, RandomMoves) {
  fktest::Rng rng(21);
  int checked = 0;
  for (int t = 0; t < 1500; ++t) {
    bool link = t % 2 == 1;
    Diagram d = link ? fktest::random_link2(rng, 8)
                     : fktest::random_diagram(rng, 1 + fktest::pick(rng, 8), 1, t % 4 == 0);
    ParityKind kind = link ? ParityKind::Component : ParityKind::Gaussian;
    auto m = fktest::random_move(d, rng, 10);
    if (!m) continue;
    EXPECT_TRUE(check_parity_axioms(d, kind, *m)) << emit_diagram(d) << " " << to_string(m->kind);
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(Parity, ComponentParityIsMoveInvariant) {
  fktest::Rng rng(22);
  for (int t = 0; t < 400; ++t) {
    Diagram d = fktest::random_link2(rng, 8);
    auto m = fktest::random_move(d, rng, 10);
    if (!m) continue;
    Diagram e = apply_move(d, *m);
    auto before = parity_table(d, ParityKind::Component);
    auto after = parity_table(e, ParityKind::Component);
    for (const auto& [x, p] : before)
      if (after.count(x)) EXPECT_EQ(after.at(x), p);
  }
}

TEST(Parity, CurlsAreEven) {
  fktest::Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    Diagram d = fktest::random_knot(rng, 9);
    for (const auto& m : find_moves(d, {MoveKind::R1_remove})) {
      Label x = d.components[m.site[0].component].word[m.site[0].index];
      EXPECT_EQ(parity_of(d, ParityKind::Gaussian, x), Parity::Even);
    }
  }
}

TEST(ParityAxioms, EveryMoveOfOneKnot) {
  Diagram b = parse_diagram("1 2 1 3 3 2");
  for (const auto& m : find_moves(b)) EXPECT_TRUE(check_parity_axioms(b, ParityKind::Gaussian, m));
}
