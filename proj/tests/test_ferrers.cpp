#include "abideal/ferrers.hpp"
#include "abideal/fibers.hpp"

#include <doctest.h>

#include <numeric>

using namespace abideal;

namespace {

Root a_root(const RootSystem& rs, int i, int j) {
  Root g = rs.zero();
  for (int k = i; k < j; ++k) g.c[k - 1] = 1;
  return g;
}

}  // namespace

TEST_CASE("diagram shape validation") {
  CHECK(valid_ferrers(FerrersIdeal{5, {4, 5}}));
  CHECK(valid_ferrers(FerrersIdeal{10, {5, 7, 8, 9}}));
  CHECK(valid_ferrers(FerrersIdeal{5, {2}}));
  CHECK_FALSE(valid_ferrers(FerrersIdeal{5, {5, 4}}));  // not nested
  CHECK_FALSE(valid_ferrers(FerrersIdeal{5, {2, 3}}));  // rows + columns > n
  CHECK_FALSE(valid_ferrers(FerrersIdeal{5, {1}}));     // touches the diagonal
  CHECK_FALSE(valid_ferrers(FerrersIdeal{4, {2, 3, 4}}));
  CHECK(valid_ferrers(FerrersIdeal{4, {3, 4}}));
}

TEST_CASE("from_ideal basics") {
  auto a3 = RootSystem::build(LieType::parse("A3"));
  const IdealPoset poset = enumerate_ideals(a3);
  const int idx = poset.index_of({a3.highest_root()});
  REQUIRE(idx >= 0);
  const FerrersIdeal f = from_ideal(a3, poset.ideals[idx]);
  CHECK(f.n == 4);
  CHECK(f.row_starts == std::vector<int>{4});  // single cell (1, n)

  // maximal ideal of the fiber of an interior root is a rectangle
  const FiberAnalysis fa = analyze_fibers(a3, poset);
  const FiberReport* r = fa.find(a_root(a3, 2, 3));
  REQUIRE(r != nullptr);
  const FerrersIdeal rect = from_ideal(a3, poset.ideals[r->max_index]);
  CHECK(rect.row_starts == std::vector<int>{3, 3});  // 2 x (n+1-j) rectangle
  CHECK(rect.cell_count() == 4);

  CHECK_THROWS_AS(from_ideal(RootSystem::build(LieType::parse("B3")),
                             poset.ideals[idx]),
                  std::invalid_argument);
}

TEST_CASE("hook decomposition") {
  // single cell
  auto hooks = hook_decompose(FerrersIdeal{6, {6}});
  REQUIRE(hooks.size() == 1);
  CHECK(hooks[0].size() == 1);

  // the 15-cell sl_10 diagram with rows starting at 5,7,8,9
  hooks = hook_decompose(FerrersIdeal{10, {5, 7, 8, 9}});
  REQUIRE(hooks.size() == 3);
  CHECK(hooks[0].size() == 1);
  CHECK(hooks[1].size() == 5);
  CHECK(hooks[2].size() == 9);
  CHECK(hooks[2] == Hook{1, 4, 5, 10});
  CHECK(hooks[1] == Hook{2, 4, 7, 9});
  CHECK(hooks[0] == Hook{3, 3, 8, 8});

  // a minimal-ideal hook stays a single hook
  hooks = hook_decompose(FerrersIdeal{6, {4, 6, 6}});
  REQUIRE(hooks.size() == 1);
  CHECK(hooks[0].size() == 5);  // n + i - j = 6 + 3 - 4
}

TEST_CASE("hook filling words") {
  CHECK(fill_word(FerrersIdeal{6, {6}}).str() == "s0");
  // minimal ideal (i,j) = (2,4) in sl_6: (s_1)(s_4 s_5) s_0
  CHECK(fill_word(FerrersIdeal{6, {4, 6}}).str() == "s1 s4 s5 s0");
  // the printed sl_10 word, byte for byte
  CHECK(fill_word(FerrersIdeal{10, {5, 7, 8, 9}}).str() ==
        "s0 s2 s1 s8 s9 s0 s3 s2 s1 s5 s6 s7 s8 s9 s0");
}

TEST_CASE("round trip and word agreement") {
  auto a4 = RootSystem::build(LieType::parse("A4"));
  const IdealPoset poset = enumerate_ideals(a4);
  for (const AbelianIdeal& ideal : poset.ideals) {
    if (ideal.roots.empty()) continue;
    const FerrersIdeal f = from_ideal(a4, ideal);
    CHECK(valid_ferrers(f));
    const AbelianIdeal back = to_ideal(a4, f);
    CHECK(back.roots == ideal.roots);
    CHECK(canonical_element(a4, back.word) == canonical_element(a4, ideal.word));
  }
}

TEST_CASE("south-west corners are the generators") {
  auto a4 = RootSystem::build(LieType::parse("A4"));
  const IdealPoset poset = enumerate_ideals(a4);
  for (const AbelianIdeal& ideal : poset.ideals) {
    if (ideal.roots.empty()) continue;
    const FerrersIdeal f = from_ideal(a4, ideal);
    std::vector<Root> corners;
    for (int p = 1; p <= f.rows(); ++p) {
      if (p < f.rows() && f.row_starts[p] == f.row_starts[p - 1]) continue;
      corners.push_back(a_root(a4, p, f.row_starts[p - 1]));
    }
    std::sort(corners.begin(), corners.end(), root_less);
    CHECK(corners == generators(a4, ideal));
  }
}

TEST_CASE("the sl_10 sample ideal") {
  // generators (1,5), (2,7), (3,8), (4,9): rows start at columns 5,7,8,9
  auto a9 = RootSystem::build(LieType::parse("A9"));
  const FerrersIdeal f{10, {5, 7, 8, 9}};
  const AbelianIdeal ideal = to_ideal(a9, f);
  CHECK(ideal.size() == 15);
  CHECK(from_ideal(a9, ideal) == f);
  std::vector<Root> expected_gens = {a_root(a9, 1, 5), a_root(a9, 2, 7), a_root(a9, 3, 8),
                                     a_root(a9, 4, 9)};
  std::sort(expected_gens.begin(), expected_gens.end(), root_less);
  CHECK(generators(a9, ideal) == expected_gens);
}

TEST_CASE("fiber size formula") {
  CHECK(fiber_size_formula(6, 1, 4) == 1);
  CHECK(fiber_size_formula(6, 3, 6) == 1);
  CHECK(fiber_size_formula(10, 2, 9) == 2);
  CHECK(fiber_size_formula(6, 3, 4) == binomial(4, 2));
  CHECK_THROWS_AS(fiber_size_formula(6, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(fiber_size_formula(6, 0, 3), std::invalid_argument);

  // the sizes over all (i,j) partition 2^{n-1} - 1
  for (int n = 2; n <= 8; ++n) {
    int total = 0;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) total += fiber_size_formula(n, i, j);
    CHECK(total == (1 << (n - 1)) - 1);
  }
}

TEST_CASE("filled rendering") {
  const std::string got = render_filled(FerrersIdeal{5, {4, 5}});
  CHECK(got ==
        ".  .  .  s4 s0\n"
        ".  .  .  .  s1\n");
  // one labelled cell per diagram cell
  const FerrersIdeal big{10, {5, 7, 8, 9}};
  const std::string r = render_filled(big);
  size_t labels = 0;
  for (size_t k = 0; k + 1 < r.size(); ++k)
    if (r[k] == 's' && std::isdigit(static_cast<unsigned char>(r[k + 1]))) ++labels;
  CHECK(labels == static_cast<size_t>(big.cell_count()));
}
