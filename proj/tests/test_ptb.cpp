#include "chunker/ptb.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

#include "chunker/error.hpp"

using namespace chunker;

TEST_SUITE("ptb") {

TEST_CASE("parses a minimal tree") {
  const TreeNode tree = parse_tree("(NP (DT The) (NN form))");
  REQUIRE(!tree.is_terminal());
  CHECK(tree.label().category == "NP");
  REQUIRE(tree.children().size() == 2);
  CHECK(tree.children()[0].pos() == "DT");
  CHECK(tree.children()[0].word() == "The");
  CHECK(tree.children()[1].word() == "form");
}

TEST_CASE("decomposes labels with function tags and coindices") {
  const TreeNode tree = parse_tree("(NP-SBJ-3 (NNP Mr.) (NNP Icahn))");
  CHECK(tree.label().category == "NP");
  CHECK(tree.label().function_tags == std::vector<std::string>{"SBJ"});
  CHECK(tree.label().coindex == 3);
}

TEST_CASE("keeps mixed internal/terminal children in order") {
  const TreeNode tree =
      parse_tree("(ADVP-TMP (NP (DT a) (NN year)) (RB earlier))");
  CHECK(tree.label().category == "ADVP");
  CHECK(tree.label().has_function_tag("TMP"));
  REQUIRE(tree.children().size() == 2);
  CHECK(!tree.children()[0].is_terminal());
  CHECK(tree.children()[1].is_terminal());
  const auto terminals = tree.terminals();
  REQUIRE(terminals.size() == 3);
  CHECK(terminals[0]->word() == "a");
  CHECK(terminals[2]->word() == "earlier");
}

TEST_CASE("removes the unlabeled wrapper") {
  const TreeNode tree = parse_tree("((S (NP (PRP He)) (VP (VBZ runs))))");
  CHECK(tree.label().category == "S");
}

TEST_CASE("parses a stream of several trees") {
  std::istringstream input(
      "((NP (NN dog)))\n\n( (S (NP (PRP He)) (VP (VBZ runs)) (. .)) )\n"
      "(NP (DT that))\n");
  const auto trees = parse_trees(input);
  REQUIRE(trees.size() == 3);
  CHECK(trees[0].label().category == "NP");
  CHECK(trees[1].label().category == "S");
  CHECK(trees[2].yield_size() == 1);
}

TEST_CASE("split_label") {
  SUBCASE("category, function tag, coindex") {
    const ConstituentLabel label = split_label("NP-SBJ-3");
    CHECK(label.category == "NP");
    CHECK(label.function_tags == std::vector<std::string>{"SBJ"});
    CHECK(label.coindex == 3);
    CHECK(!label.gap_index);
    CHECK(label.to_string() == "NP-SBJ-3");
  }
  SUBCASE("bare category") {
    const ConstituentLabel label = split_label("VP");
    CHECK(label.category == "VP");
    CHECK(label.function_tags.empty());
    CHECK(!label.coindex);
  }
  SUBCASE("single function tag") {
    const ConstituentLabel label = split_label("ADJP-PRD");
    CHECK(label.category == "ADJP");
    CHECK(label.function_tags == std::vector<std::string>{"PRD"});
  }
  SUBCASE("multiple function tags") {
    const ConstituentLabel label = split_label("PP-LOC-CLR-4");
    CHECK(label.category == "PP");
    CHECK(label.function_tags == std::vector<std::string>{"LOC", "CLR"});
    CHECK(label.coindex == 4);
  }
  SUBCASE("gap index") {
    const ConstituentLabel label = split_label("NP-SBJ=2");
    CHECK(label.category == "NP");
    CHECK(label.function_tags == std::vector<std::string>{"SBJ"});
    CHECK(label.gap_index == 2);
    CHECK(!label.coindex);
  }
  SUBCASE("a leading dash is part of the category") {
    CHECK(split_label("-NONE-").category == "-NONE-");
    CHECK(split_label("-LRB-").category == "-LRB-");
  }
  SUBCASE("bare categories have no tags or indices") {
    for (const char* category : {"S", "SINV", "UCP", "NAC", "NX", "WHNP"}) {
      const ConstituentLabel label = split_label(category);
      CHECK(label.category == category);
      CHECK(label.function_tags.empty());
      CHECK(!label.coindex);
      CHECK(!label.gap_index);
    }
  }
}

TEST_CASE("strip_null_elements removes traces and emptied constituents") {
  const TreeNode tree = parse_tree(
      "(S (NP-SBJ (-NONE- *-3)) (VP (TO to) (VP (VB sell))))");
  const auto stripped = strip_null_elements(tree);
  REQUIRE(stripped.has_value());
  const auto terminals = stripped->terminals();
  REQUIRE(terminals.size() == 2);
  CHECK(terminals[0]->word() == "to");
  CHECK(terminals[1]->word() == "sell");
  REQUIRE(stripped->children().size() == 1);
  CHECK(stripped->children()[0].label().category == "VP");
}

TEST_CASE("strip_null_elements is the identity on trace-free trees") {
  const TreeNode tree = parse_tree("(NP (DT The) (NN form))");
  const auto stripped = strip_null_elements(tree);
  REQUIRE(stripped.has_value());
  CHECK(*stripped == tree);
}

TEST_CASE("strip_null_elements of an all-trace tree is empty") {
  CHECK(!strip_null_elements(parse_tree("(NP (-NONE- *))")));
  CHECK(!strip_null_elements(
      parse_tree("(S (NP (-NONE- *T*)) (VP (-NONE- *?*)))")));
}

TEST_CASE("printing and reparsing reproduces the tree") {
  for (const char* text :
       {"(NP (DT The) (NN form))",
        "(S (NP-SBJ-3 (NNP Mr.) (NNP Icahn)) (VP (MD may) (VP (VB sell))))",
        "(ADVP-TMP (NP (DT a) (NN year)) (RB earlier))",
        "(NP-SBJ=2 (-NONE- *))"}) {
    const TreeNode tree = parse_tree(text);
    CHECK(print_tree(tree) == text);
    CHECK(parse_tree(print_tree(tree)) == tree);
  }
}

TEST_CASE("reports malformed trees with a position") {
  CHECK_THROWS_AS(parse_tree("(NP (DT the)"), ParseError);
  CHECK_THROWS_AS(parse_tree("()"), ParseError);
  CHECK_THROWS_AS(parse_tree("(NN)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(NP (DT the) fox)"), ParseError);
  CHECK_THROWS_AS(parse_tree("(NP (NN the fox))"), ParseError);
  CHECK_THROWS_AS(parse_tree(")"), ParseError);
  CHECK_THROWS_WITH_AS(parse_tree("(NP\n  (DT the)"),
                       "line 1, column 1: unbalanced '('", ParseError);
}

TEST_CASE("arbitrary byte soup either parses or raises ParseError") {
  std::mt19937 rng(86753);
  const char alphabet[] = "(()) ABab-=*.\n\t$";
  for (int round = 0; round < 3000; ++round) {
    std::string soup;
    const std::size_t length = rng() % 60;
    for (std::size_t i = 0; i < length; ++i) {
      soup += alphabet[rng() % (sizeof(alphabet) - 1)];
    }
    try {
      const auto trees = parse_trees(soup);
      for (const TreeNode& tree : trees) {
        CHECK(parse_tree(print_tree(tree)) == tree);
      }
    } catch (const ParseError&) {
      // fine: rejected with a diagnostic
    }
  }
}

}  // TEST_SUITE
