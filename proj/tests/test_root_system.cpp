#include "abideal/root_system.hpp"

#include <doctest.h>

#include <set>

using namespace abideal;

namespace {

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "B3",
                                              "C2", "C3", "D4", "F4", "G2"};

Root coords(std::vector<int> c) { return Root(std::move(c)); }

}  // namespace

TEST_CASE("rank constraints per family") {
  CHECK_THROWS_AS(LieType::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("E5"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("F3"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("Z4"), std::invalid_argument);
  CHECK(LieType::parse("e7").name() == "E7");
}

TEST_CASE("positive root counts and highest roots") {
  auto g2 = RootSystem::build(LieType::parse("G2"));
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.highest_root() == coords({3, 2}));

  auto a1 = RootSystem::build(LieType::parse("A1"));
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.highest_root() == a1.simple_root(1));

  auto f4 = RootSystem::build(LieType::parse("F4"));
  CHECK(f4.positive_roots().size() == 24);
  CHECK(f4.highest_root() == coords({2, 4, 3, 2}));

  auto e6 = RootSystem::build(LieType::parse("E6"));
  CHECK(e6.positive_roots().size() == 36);
  CHECK(e6.highest_root() == coords({1, 2, 3, 2, 1, 2}));

  auto e7 = RootSystem::build(LieType::parse("E7"));
  CHECK(e7.positive_roots().size() == 63);
  CHECK(e7.highest_root() == coords({1, 2, 3, 4, 3, 2, 2}));

  auto e8 = RootSystem::build(LieType::parse("E8"));
  CHECK(e8.positive_roots().size() == 120);
  CHECK(e8.highest_root() == coords({2, 3, 4, 5, 6, 4, 2, 3}));
}

TEST_CASE("inner product normalization and lengths") {
  auto g2 = RootSystem::build(LieType::parse("G2"));
  const Root alpha = g2.simple_root(1), beta = g2.simple_root(2);
  CHECK(g2.inner(g2.highest_root(), g2.highest_root()) == Rat(2));
  CHECK(g2.inner(beta, beta) == Rat(2));
  CHECK(g2.inner(alpha, alpha) == Rat(2, 3));
  CHECK(g2.is_long(beta));
  CHECK_FALSE(g2.is_long(alpha));

  // The long simple root adjacent to the lowest root in the extended diagram
  // of F4 (Bourbaki alpha_1) pairs to 1 with theta.
  auto f4 = RootSystem::build(LieType::parse("F4"));
  const int i = f4.from_bourbaki(1);
  CHECK(f4.is_long(f4.simple_root(i)));
  CHECK(f4.inner(f4.highest_root(), f4.simple_root(i)) == Rat(1));

  auto e8 = RootSystem::build(LieType::parse("E8"));
  for (const Root& g : e8.positive_roots()) CHECK(e8.is_long(g));

  for (const auto& name : kSmallTypes) {
    auto rs = RootSystem::build(LieType::parse(name));
    CHECK(rs.inner(rs.highest_root(), rs.highest_root()) == Rat(2));
    for (const Root& x : rs.positive_roots())
      for (const Root& y : rs.positive_roots()) CHECK(rs.inner(x, y) == rs.inner(y, x));
  }
}

TEST_CASE("coroot pairings") {
  for (const auto& name : kSmallTypes) {
    auto rs = RootSystem::build(LieType::parse(name));
    const Root& theta = rs.highest_root();
    CHECK(rs.coroot_pairing(theta, theta) == Rat(2));
    for (int i = 1; i <= rs.rank(); ++i) {
      const Root a = rs.simple_root(i);
      if (a == theta) continue;
      const Rat p = rs.coroot_pairing(a, theta);
      CHECK((p == Rat(0) || p == Rat(1)));
    }
    // integrality on the root lattice
    for (const Root& x : rs.positive_roots())
      for (const Root& mu : rs.positive_roots())
        CHECK(rs.coroot_pairing(x, mu).denominator() == 1);
  }
  auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK_THROWS_AS(a2.coroot_pairing(a2.simple_root(1), coords({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("rho pairings") {
  for (const auto& name : kSmallTypes) {
    auto rs = RootSystem::build(LieType::parse(name));
    for (int i = 1; i <= rs.rank(); ++i) CHECK(rs.rho_pairing(rs.simple_root(i)) == Rat(1));
  }
  auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK(a2.rho_pairing(a2.highest_root()) == Rat(2));
  auto g2 = RootSystem::build(LieType::parse("G2"));
  CHECK(g2.rho_pairing(g2.highest_root()) == Rat(3));

  // 2(rho,theta^vee) - 2 counts the roots pairing to one with theta^vee.
  for (const auto& name : {"F4", "G2", "B3", "A3"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    long long ones = 0;
    for (const Root& g : rs.positive_roots())
      if (rs.coroot_pairing(g, rs.highest_root()) == Rat(1)) ++ones;
    CHECK(Rat(2) * rs.rho_pairing(rs.highest_root()) - Rat(2) == Rat(ones));
  }
}

TEST_CASE("partial order") {
  for (const auto& name : kSmallTypes) {
    auto rs = RootSystem::build(LieType::parse(name));
    for (const Root& g : rs.positive_roots()) {
      CHECK(rs.leq(g, g));
      CHECK(rs.leq(g, rs.highest_root()));
    }
    // antisymmetry
    for (const Root& x : rs.positive_roots())
      for (const Root& y : rs.positive_roots())
        if (rs.leq(x, y) && rs.leq(y, x)) CHECK(x == y);
  }
  auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK_FALSE(a2.leq(a2.simple_root(1), a2.simple_root(2)));
  CHECK_FALSE(a2.leq(a2.simple_root(2), a2.simple_root(1)));
}

TEST_CASE("simple reflections") {
  for (const auto& name : kSmallTypes) {
    auto rs = RootSystem::build(LieType::parse(name));
    for (int i = 1; i <= rs.rank(); ++i) {
      CHECK(rs.simple_reflection(i, rs.simple_root(i)) == -rs.simple_root(i));
      for (const Root& g : rs.positive_roots()) {
        CHECK(rs.is_root(rs.simple_reflection(i, g)));  // closure
        if (rs.inner(g, rs.simple_root(i)) == Rat(0))
          CHECK(rs.simple_reflection(i, g) == g);
        // involution
        CHECK(rs.simple_reflection(i, rs.simple_reflection(i, g)) == g);
      }
    }
  }
  auto a2 = RootSystem::build(LieType::parse("A2"));
  CHECK(a2.simple_reflection(1, a2.highest_root()) == a2.simple_root(2));
}

TEST_CASE("long positive root counts") {
  CHECK(RootSystem::build(LieType::parse("F4")).long_positive_roots().size() == 12);
  CHECK(RootSystem::build(LieType::parse("G2")).long_positive_roots().size() == 3);
  CHECK(RootSystem::build(LieType::parse("B3")).long_positive_roots().size() == 6);
  CHECK(RootSystem::build(LieType::parse("C3")).long_positive_roots().size() == 3);
  CHECK(RootSystem::build(LieType::parse("D4")).long_positive_roots().size() == 12);
}

TEST_CASE("pairing bound for long roots") {
  for (const auto& name : kSmallTypes) {
    auto rs = RootSystem::build(LieType::parse(name));
    for (const Root& mu : rs.long_positive_roots())
      for (const Root& nu : rs.positive_roots()) {
        const long long p = as_integer(rs.coroot_pairing(nu, mu));
        CHECK(p <= 2);
        CHECK(p >= -2);
        if (p == 2) CHECK(nu == mu);
      }
  }
}

TEST_CASE("Bourbaki numbering map") {
  auto f4 = RootSystem::build(LieType::parse("F4"));
  for (int i = 1; i <= 4; ++i) CHECK(f4.bourbaki_label(i) == 5 - i);
  auto e6 = RootSystem::build(LieType::parse("E6"));
  CHECK(e6.bourbaki_label(6) == 2);  // the branch node
  CHECK(e6.from_bourbaki(2) == 6);
  auto e7 = RootSystem::build(LieType::parse("E7"));
  CHECK(e7.bourbaki_label(7) == 2);
  auto e8 = RootSystem::build(LieType::parse("E8"));
  CHECK(e8.bourbaki_label(8) == 2);
  auto a3 = RootSystem::build(LieType::parse("A3"));
  for (int i = 1; i <= 3; ++i) CHECK(a3.bourbaki_label(i) == i);
  // label maps are permutations
  for (const auto& name : {"E6", "E7", "E8", "F4"}) {
    auto rs = RootSystem::build(LieType::parse(name));
    std::set<int> image;
    for (int i = 1; i <= rs.rank(); ++i) image.insert(rs.bourbaki_label(i));
    CHECK(image.size() == static_cast<size_t>(rs.rank()));
    for (int i = 1; i <= rs.rank(); ++i) CHECK(rs.bourbaki_label(rs.from_bourbaki(i)) == i);
  }
}

TEST_CASE("epsilon coordinates") {
  auto b3 = RootSystem::build(LieType::parse("B3"));
  CHECK(b3.epsilon_coords(b3.highest_root()) == std::vector<int>{1, 1, 0});
  CHECK(b3.epsilon_coords(b3.simple_root(3)) == std::vector<int>{0, 0, 1});
  auto c3 = RootSystem::build(LieType::parse("C3"));
  CHECK(c3.epsilon_coords(c3.highest_root()) == std::vector<int>{2, 0, 0});
  auto d4 = RootSystem::build(LieType::parse("D4"));
  CHECK(d4.epsilon_coords(d4.simple_root(4)) == std::vector<int>{0, 0, 1, 1});
  CHECK(d4.epsilon_coords(d4.highest_root()) == std::vector<int>{1, 1, 0, 0});
  auto a3 = RootSystem::build(LieType::parse("A3"));
  CHECK(a3.type_a_pair(a3.highest_root()) == std::pair<int, int>{1, 4});
  CHECK(a3.type_a_pair(a3.simple_root(2)) == std::pair<int, int>{2, 3});
}
