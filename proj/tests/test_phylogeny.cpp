#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "phylocover/baselines.hpp"
#include "phylocover/errors.hpp"
#include "phylocover/phylogeny.hpp"
#include "phylocover/rng.hpp"
#include "test_util.hpp"

using namespace phylocover;
using namespace testutil;

TEST_CASE("species_set") {
  const auto mtx = matrix_from_columns(4, {{0, 1}, {}, {0, 1, 2, 3}});
  CHECK(species_set(mtx, 0).species == std::vector<int>{0, 1});
  CHECK(species_set(mtx, 1).species.empty());
  CHECK(species_set(mtx, 2).species == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(species_set(mtx, 3), std::out_of_range);
}

TEST_CASE("compatible is the disjoint-or-nested test") {
  const auto set = [](std::vector<int> v) {
    CharacterSpeciesSet s;
    s.species = std::move(v);
    return s;
  };
  CHECK(compatible(set({0, 1}), set({2, 3})));
  CHECK(compatible(set({0, 1, 2}), set({1, 2})));
  CHECK(!compatible(set({0, 1}), set({1, 2})));
  CHECK(compatible(set({}), set({1, 2})));  // empty is disjoint from all

  // symmetry over random pairs
  Rng rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> a, b;
    for (int i = 0; i < 8; ++i) {
      if (rng.next_bit()) a.push_back(i);
      if (rng.next_bit()) b.push_back(i);
    }
    CHECK(compatible(set(a), set(b)) == compatible(set(b), set(a)));
  }
}

TEST_CASE("conflict_graph on the named matrices") {
  CHECK(conflict_graph(matrix_from_columns(6, {{0, 1}, {2, 3}, {4, 5}}))
            .edge_count() == 0);

  const auto triangle = matrix_from_columns(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph tg = conflict_graph(triangle);
  CHECK(tg.edge_count() == 3);
  CHECK(tg.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(conflict_graph(matrix_from_columns(3, {{0}, {0, 1}, {0, 1, 2}}))
            .edge_count() == 0);
}

TEST_CASE("is_perfect_phylogeny") {
  CHECK(is_perfect_phylogeny(matrix_from_columns(3, {{0}, {0, 1}, {0, 1, 2}})));
  CHECK(!is_perfect_phylogeny(matrix_from_columns(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(is_perfect_phylogeny(BinaryCharacterMatrix(1, 1)));
  // conflict-graph equivalence on random matrices
  Rng rng(86);
  for (int trial = 0; trial < 50; ++trial) {
    const auto mtx = random_matrix(5, 6, 0.4, rng);
    CHECK(is_perfect_phylogeny(mtx) == (conflict_graph(mtx).edge_count() == 0));
  }
}

TEST_CASE("build_perfect_phylogeny on the single-cell matrix") {
  BinaryCharacterMatrix mtx(1, 1);
  mtx.set(0, 0, true);
  const PhyloTree t = build_perfect_phylogeny(mtx);
  CHECK(verify_phylo_tree(mtx, t));
  REQUIRE(t.nodes.size() == 2);  // root -- edge(c0) -- leaf(s0)
  CHECK(t.nodes[1].parent == 0);
  CHECK(t.nodes[1].edge_characters == std::vector<int>{0});
  CHECK(t.nodes[1].species == 0);
}

TEST_CASE("build_perfect_phylogeny splits a two-species matrix as expected") {
  // columns: {0,1}, {0}, {1}
  const auto mtx = matrix_from_columns(2, {{0, 1}, {0}, {1}});
  const PhyloTree t = build_perfect_phylogeny(mtx);
  CHECK(verify_phylo_tree(mtx, t));

  // shared stem carries c0; below it one branch per species
  REQUIRE(t.nodes[0].children.size() == 1);
  const auto& stem = t.nodes[static_cast<std::size_t>(t.nodes[0].children[0])];
  CHECK(stem.edge_characters == std::vector<int>{0});
  REQUIRE(stem.children.size() == 2);
  const auto& left = t.nodes[static_cast<std::size_t>(stem.children[0])];
  const auto& right = t.nodes[static_cast<std::size_t>(stem.children[1])];
  CHECK(left.edge_characters == std::vector<int>{1});
  CHECK(left.species == 0);
  CHECK(right.edge_characters == std::vector<int>{2});
  CHECK(right.species == 1);
}

TEST_CASE("build_perfect_phylogeny verifies over random compatible matrices") {
  Rng rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.index(6));
    const int n = 1 + static_cast<int>(rng.index(6));
    const auto mtx = random_compatible_matrix(m, n, rng);
    REQUIRE(is_perfect_phylogeny(mtx));
    const PhyloTree t = build_perfect_phylogeny(mtx);
    CHECK(verify_phylo_tree(mtx, t));
  }
}

TEST_CASE("build_perfect_phylogeny rejects conflicts naming a pair") {
  const auto mtx = matrix_from_columns(3, {{0, 2}, {0, 1}, {1, 2}});
  try {
    build_perfect_phylogeny(mtx);
    FAIL_CHECK("expected IncompatibleMatrixError");
  } catch (const IncompatibleMatrixError& e) {
    CHECK(e.char_a() == 0);
    CHECK(e.char_b() == 1);
    CHECK(std::string(e.what()).find("0") != std::string::npos);
  }
}

TEST_CASE("duplicate columns share one edge; all-zero columns attach nowhere") {
  // c0 and c1 identical, c2 all-zero
  const auto mtx = matrix_from_columns(3, {{0, 1}, {0, 1}, {}});
  const PhyloTree t = build_perfect_phylogeny(mtx);
  CHECK(verify_phylo_tree(mtx, t));
  int edges_with_both = 0, uses_c2 = 0;
  for (const auto& node : t.nodes) {
    if (node.edge_characters == std::vector<int>{0, 1}) ++edges_with_both;
    for (int c : node.edge_characters) uses_c2 += c == 2;
  }
  CHECK(edges_with_both == 1);
  CHECK(uses_c2 == 0);
}

TEST_CASE("species with no characters hangs off the root") {
  const auto mtx = matrix_from_columns(2, {{0}});  // species 1 has nothing
  const PhyloTree t = build_perfect_phylogeny(mtx);
  CHECK(verify_phylo_tree(mtx, t));
  bool found = false;
  for (const auto& node : t.nodes)
    if (node.species == 1) {
      CHECK(node.parent == t.root());
      CHECK(node.edge_characters.empty());
      found = true;
    }
  CHECK(found);
}

TEST_CASE("verify_phylo_tree rejects broken trees") {
  const auto mtx = matrix_from_columns(2, {{0, 1}, {0}, {1}});
  PhyloTree good = build_perfect_phylogeny(mtx);
  REQUIRE(verify_phylo_tree(mtx, good));

  PhyloTree missing_label = good;
  for (auto& node : missing_label.nodes)
    if (node.species == 0) node.edge_characters.clear();
  CHECK(!verify_phylo_tree(mtx, missing_label));

  PhyloTree wrong_leaf_count = good;
  // drop one leaf from its parent's child list
  for (auto& node : wrong_leaf_count.nodes) {
    auto& kids = node.children;
    for (std::size_t k = 0; k < kids.size(); ++k) {
      if (wrong_leaf_count.nodes[static_cast<std::size_t>(kids[k])].species == 1) {
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(k));
        break;
      }
    }
  }
  CHECK(!verify_phylo_tree(mtx, wrong_leaf_count));

  PhyloTree duplicate_species = good;
  for (auto& node : duplicate_species.nodes)
    if (node.species == 1) node.species = 0;
  CHECK(!verify_phylo_tree(mtx, duplicate_species));
}

TEST_CASE("largest_compatible_subset on the worked conflict shapes") {
  // perfect input: keep everything
  const auto nested = matrix_from_columns(3, {{0}, {0, 1}, {0, 1, 2}});
  const auto all = largest_compatible_subset(nested, "exact", 0);
  CHECK(all.kept == std::vector<int>{0, 1, 2});
  CHECK(all.dropped.empty());

  // pairwise conflicting triple: drop two
  const auto triangle = matrix_from_columns(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto tri = largest_compatible_subset(triangle, "exact", 0);
  CHECK(tri.kept.size() == 1);
  CHECK(tri.dropped.size() == 2);

  // conflict path c0-c1-c2: the middle character goes
  const auto p3 = matrix_from_columns(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto kept = largest_compatible_subset(p3, "exact", 0);
  CHECK(kept.dropped == std::vector<int>{1});
  CHECK(kept.kept == std::vector<int>{0, 2});

  CHECK_THROWS_AS(largest_compatible_subset(p3, "nope", 0),
                  std::invalid_argument);
}

TEST_CASE("largest_compatible_subset keeps a perfect phylogeny with any solver") {
  Rng rng(640);
  for (const char* solver : {"exact", "2approx", "hybrid-ga"}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto mtx = random_matrix(6, 8, 0.45, rng);
      const auto result = largest_compatible_subset(mtx, solver, trial);
      CHECK(result.kept.size() + result.dropped.size() ==
            static_cast<std::size_t>(mtx.char_count()));
      if (result.kept.empty()) continue;
      BinaryCharacterMatrix sub(mtx.species_count(),
                                static_cast<int>(result.kept.size()));
      for (int i = 0; i < mtx.species_count(); ++i)
        for (std::size_t k = 0; k < result.kept.size(); ++k)
          sub.set(i, static_cast<int>(k), mtx.at(i, result.kept[k]));
      CHECK(is_perfect_phylogeny(sub));
    }
  }
}

TEST_CASE("exact subset size matches brute-force column enumeration") {
  Rng rng(50);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 3 + static_cast<int>(rng.index(6));
    const int n = 2 + static_cast<int>(rng.index(10));
    const auto mtx = random_matrix(m, n, 0.4, rng);
    const auto result = largest_compatible_subset(mtx, "exact", 0);
    CHECK(static_cast<int>(result.kept.size()) ==
          brute_max_compatible_columns(mtx));
  }
}

TEST_CASE("matrix text format") {
  std::istringstream spaced(
      "# labels\n"
      "3 4\n"
      "1 0 1 0\n"
      "0110\n"
      "\n"
      "0 001\n");
  const auto mtx = read_matrix(spaced);
  CHECK(mtx.species_count() == 3);
  CHECK(mtx.char_count() == 4);
  CHECK(mtx.at(0, 0));
  CHECK(!mtx.at(0, 1));
  CHECK(mtx.at(1, 2));
  CHECK(mtx.at(2, 3));

  std::ostringstream out;
  write_matrix(out, mtx);
  std::istringstream back(out.str());
  const auto again = read_matrix(back);
  std::ostringstream out2;
  write_matrix(out2, again);
  CHECK(out.str() == out2.str());
}

TEST_CASE("matrix parse errors name the row and column") {
  std::istringstream bad(
      "2 3\n"
      "101\n"
      "1x1\n");
  try {
    read_matrix(bad);
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("row 1") != std::string::npos);
    CHECK(what.find("column 1") != std::string::npos);
    CHECK(e.line() == 3);
    CHECK(e.column() == 2);
  }

  std::istringstream short_row("2 3\n101\n10\n");
  CHECK_THROWS_AS(read_matrix(short_row), ParseError);
  std::istringstream long_row("1 2\n101\n");
  CHECK_THROWS_AS(read_matrix(long_row), ParseError);
  std::istringstream missing_rows("3 2\n10\n");
  CHECK_THROWS_AS(read_matrix(missing_rows), ParseError);
  std::istringstream no_header("");
  CHECK_THROWS_AS(read_matrix(no_header), ParseError);
}

TEST_CASE("format_phylo_tree renders the indented parent-child layout") {
  const auto mtx = matrix_from_columns(2, {{0, 1}, {0}, {1}});
  const PhyloTree t = build_perfect_phylogeny(mtx);
  std::ostringstream out;
  format_phylo_tree(out, t);
  CHECK(out.str() ==
        "root\n"
        "  [0] internal\n"
        "    [1] species 0\n"
        "    [2] species 1\n");
}
