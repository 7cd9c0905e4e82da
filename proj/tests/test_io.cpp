#include "abideal/io.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace abideal;

TEST_CASE("coordinate strings") {
  auto f4 = RootSystem::build(LieType::parse("F4"));
  CHECK(coord_string(f4, f4.highest_root()) == "2432");
  CHECK(coord_string(f4, -f4.highest_root()) == "(-2,-4,-3,-2)");
  auto e8 = RootSystem::build(LieType::parse("E8"));
  CHECK(coord_string(e8, e8.highest_root()) == "23456423");
}

TEST_CASE("labels") {
  auto b3 = RootSystem::build(LieType::parse("B3"));
  CHECK(root_label(b3, b3.highest_root()) == "e1+e2");
  CHECK(root_label(b3, b3.simple_root(1)) == "e1-e2");
  CHECK(root_label(b3, b3.simple_root(3)) == "e3");
  auto c3 = RootSystem::build(LieType::parse("C3"));
  CHECK(root_label(c3, c3.highest_root()) == "2e1");
  auto a3 = RootSystem::build(LieType::parse("A3"));
  CHECK(root_label(a3, a3.highest_root()) == "(1,4)");
  auto g2 = RootSystem::build(LieType::parse("G2"));
  CHECK(root_label(g2, g2.highest_root()) == "32");
}

TEST_CASE("root parsing") {
  auto f4 = RootSystem::build(LieType::parse("F4"));
  CHECK(parse_root(f4, "2431") == Root({2, 4, 3, 1}));
  CHECK(parse_root(f4, "(2 4 3 1)") == Root({2, 4, 3, 1}));
  CHECK(parse_root(f4, "2,4,3,1") == Root({2, 4, 3, 1}));
  CHECK_THROWS_AS(parse_root(f4, "banana"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root(f4, "243"), std::invalid_argument);

  auto b3 = RootSystem::build(LieType::parse("B3"));
  CHECK(parse_root(b3, "e1-e2") == b3.simple_root(1));
  CHECK(parse_root(b3, "e1 + e2") == b3.highest_root());
  auto c3 = RootSystem::build(LieType::parse("C3"));
  CHECK(parse_root(c3, "2e2") == parse_root(c3, "021", RootParse::Coords));
  auto a3 = RootSystem::build(LieType::parse("A3"));
  CHECK(parse_root(a3, "(2,4)") == Root({0, 1, 1}));
  CHECK(parse_root(a3, "011", RootParse::Coords) == Root({0, 1, 1}));
  CHECK_THROWS_AS(parse_root(a3, "(4,2)"), std::invalid_argument);
}

TEST_CASE("word parsing") {
  const WeylWord w = parse_word("s2 s3 s4 s0");
  CHECK(w.letters == std::vector<int>{2, 3, 4, 0});
  CHECK(w.str() == "s2 s3 s4 s0");
  CHECK(parse_word("").letters.empty());
  CHECK_THROWS_AS(parse_word("x1"), std::invalid_argument);
}

TEST_CASE("poset JSON round trip") {
  auto g2 = RootSystem::build(LieType::parse("G2"));
  const IdealPoset poset = enumerate_ideals(g2);
  const json j = poset_json(g2, poset);
  // stable serialization
  CHECK(j.dump(2) == json::parse(j.dump(2)).dump(2));

  const IdealPoset back = poset_from_json(g2, json::parse(j.dump()));
  REQUIRE(back.ideals.size() == poset.ideals.size());
  for (size_t k = 0; k < poset.ideals.size(); ++k) {
    CHECK(back.ideals[k].roots == poset.ideals[k].roots);
    CHECK(back.ideals[k].word == poset.ideals[k].word);
    CHECK(back.ideals[k].rootlet == poset.ideals[k].rootlet);
  }
  REQUIRE(back.edges.size() == poset.edges.size());
  for (size_t k = 0; k < poset.edges.size(); ++k) {
    CHECK(back.edges[k].from == poset.edges[k].from);
    CHECK(back.edges[k].to == poset.edges[k].to);
  }

  auto b2 = RootSystem::build(LieType::parse("B2"));
  CHECK_THROWS_AS(poset_from_json(b2, j), std::invalid_argument);
}

TEST_CASE("fiber JSON") {
  auto f4 = RootSystem::build(LieType::parse("F4"));
  const IdealPoset poset = enumerate_ideals(f4);
  const FiberAnalysis fa = analyze_fibers(f4, poset);
  const FiberReport* r = fa.find(Root({0, 2, 1, 0}));
  REQUIRE(r != nullptr);
  const json j = fiber_json(f4, poset, *r);
  CHECK(j.at("mu") == "0210");
  CHECK(j.at("size") == 2);
  CHECK(j.at("min").at("cardinality") == 7);
  CHECK(j.at("max").at("cardinality") == 8);
  CHECK(j.at("checks").at("max_conjecture") == true);
  CHECK(j.contains("gamma_nodes"));
  CHECK(j.contains("M_mu"));
}

TEST_CASE("dot output") {
  auto a1 = RootSystem::build(LieType::parse("A1"));
  const std::string dot = poset_dot(a1, enumerate_ideals(a1));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 [label=\"0|-\"]") != std::string::npos);
  CHECK(dot.find("n1 [label=\"1|1\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
}

TEST_CASE("golden text output") {
  auto g2 = RootSystem::build(LieType::parse("G2"));
  const IdealPoset poset = enumerate_ideals(g2);
  const FiberAnalysis fa = analyze_fibers(g2, poset);
  CHECK(tables_text(g2, poset, fa) ==
        "Abelian ideals of G2 (alpha short = s1, beta long = s2)\n"
        "I1 = {32}  word: s0  rootlet: 32\n"
        "I2 = {31,32}  word: s2 s0  rootlet: 31\n"
        "I3 = {21,31,32}  word: s1 s2 s0  rootlet: 01\n");
  CHECK(enumerate_text(g2, poset) ==
        "G2: 4 Abelian ideals (2^2)\n"
        "#0  dim 0  {}  word: e  rootlet: -\n"
        "#1  dim 1  {32}  word: s0  rootlet: 32  generators: {32}\n"
        "#2  dim 2  {31,32}  word: s2 s0  rootlet: 31  generators: {31}\n"
        "#3  dim 3  {21,31,32}  word: s1 s2 s0  rootlet: 01  generators: {21}\n");
  // identical invocations produce identical bytes
  CHECK(tables_text(g2, poset, fa) == tables_text(g2, poset, fa));
}

TEST_CASE("frozen table snippets") {
  auto f4 = RootSystem::build(LieType::parse("F4"));
  const IdealPoset f4poset = enumerate_ideals(f4);
  const std::string f4text = tables_text(f4, f4poset, analyze_fibers(f4, f4poset));
  CHECK(f4text.substr(0, f4text.find('\n', f4text.find("1 |"))) ==
        "Abelian ideals of F4 (theta = 2432)\n"
        "No. | dim | I | word | rootlet\n"
        "1 | 1 | {2432} | s0 | 2432");
  CHECK(f4text.find("15 | 9 | ") != std::string::npos);

  auto e6 = RootSystem::build(LieType::parse("E6"));
  const IdealPoset e6poset = enumerate_ideals(e6);
  const std::string e6text = tables_text(e6, e6poset, analyze_fibers(e6, e6poset));
  CHECK(e6text.find("m_1 = 21\nm_2 = 9\nm_3 = 4\nm_6 = 2\n"
                    "control sum = 63 (2^6-1 = 63)\n") != std::string::npos);
  CHECK(e6text.find("size 6: 000010 100000\n") != std::string::npos);

  auto a5 = RootSystem::build(LieType::parse("A5"));
  const IdealPoset a5poset = enumerate_ideals(a5);
  CHECK(tables_text(a5, a5poset, analyze_fibers(a5, a5poset)) ==
        "fiber sizes for A5 (rows i, columns j)\n"
        "i=1: 1 1 1 1 1\n"
        "i=2: 4 3 2 1\n"
        "i=3: 6 3 1\n"
        "i=4: 4 1\n"
        "i=5: 1\n");

  auto c3 = RootSystem::build(LieType::parse("C3"));
  const IdealPoset c3poset = enumerate_ideals(c3);
  CHECK(tables_text(c3, c3poset, analyze_fibers(c3, c3poset)) ==
        "fiber sizes for C3\n"
        "2e3 : 4\n"
        "2e2 : 2\n"
        "2e1 : 1\n");
}
