#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "negscope/scope.hpp"
#include "support/gen.hpp"

using namespace negscope;
using negscope::testing::make_aligned;
using negscope::testing::make_sentence;
using negscope::testing::Tok;

namespace {

const CueLexicon& kCues = CueLexicon::defaults();
const NrpCopulaList& kNrp = NrpCopulaList::defaults();
const ConnectiveList& kConn = ConnectiveList::defaults();

// "There are no details on the return page"
Sentence no_details() {
  return make_aligned(
      "(S (NP (EX There)) (VP (VBP are) (NP (NP (DT no) (NNS details)) "
      "(PP (IN on) (NP (DT the) (NN return) (NN page))))))",
      {{"There", "EX"}, {"are", "VBP"}, {"no", "DT"}, {"details", "NNS"},
       {"on", "IN"}, {"the", "DT"}, {"return", "NN"}, {"page", "NN"}});
}

// "I do not want to update it anymore"
Sentence not_want() {
  return make_aligned(
      "(S (NP (PRP I)) (VP (VBP do) (RB not) (VP (VB want) (S (VP (TO to) "
      "(VP (VB update) (NP (PRP it)) (ADVP (RB anymore))))))))",
      {{"I", "PRP"}, {"do", "VBP"}, {"not", "RB"}, {"want", "VB"},
       {"to", "TO"}, {"update", "VB"}, {"it", "PRP"}, {"anymore", "RB"}});
}

// "To be honest I am not angry but upset"
Sentence not_angry() {
  return make_aligned(
      "(S (S (VP (TO To) (VP (VB be) (ADJP (JJ honest))))) (NP (PRP I)) "
      "(VP (VBP am) (RB not) (ADJP (JJ angry) (CC but) (JJ upset))))",
      {{"To", "TO"}, {"be", "VB"}, {"honest", "JJ"}, {"I", "PRP"},
       {"am", "VBP"}, {"not", "RB"}, {"angry", "JJ"}, {"but", "CC"},
       {"upset", "JJ"}});
}

}  // namespace

TEST_CASE("find_anchor: noun right after the cue") {
  Sentence sent = no_details();
  auto anchor = find_anchor(sent, 2, kNrp);
  REQUIRE(anchor.has_value());
  CHECK(anchor->first == 3);  // details
  CHECK(anchor->second == PosClass::Noun);
}

TEST_CASE("find_anchor: adjective; preceding copula is before the cue") {
  Sentence sent = not_angry();
  auto anchor = find_anchor(sent, 5, kNrp);
  REQUIRE(anchor.has_value());
  CHECK(anchor->first == 6);  // angry
  CHECK(anchor->second == PosClass::Adjective);
}

TEST_CASE("find_anchor: plain verb is not skipped") {
  Sentence sent = not_want();
  auto anchor = find_anchor(sent, 2, kNrp);
  REQUIRE(anchor.has_value());
  CHECK(anchor->first == 3);  // want
  CHECK(anchor->second == PosClass::Verb);
}

TEST_CASE("find_anchor skips NRP/copula verbs and continues") {
  // "I do not think it works" -- think is neg-raising, works is not
  Sentence sent = make_sentence({{"I", "PRP"}, {"do", "VBP"}, {"not", "RB"},
                                 {"think", "VB"}, {"it", "PRP"},
                                 {"works", "VBZ"}});
  auto anchor = find_anchor(sent, 2, kNrp);
  REQUIRE(anchor.has_value());
  CHECK(anchor->first == 5);
  CHECK(anchor->second == PosClass::Verb);

  // MD counts as verb, so "might" is skippable too
  Sentence md = make_sentence({{"not", "RB"}, {"might", "MD"}, {"go", "VB"}});
  auto a2 = find_anchor(md, 0, kNrp);
  REQUIRE(a2.has_value());
  CHECK(a2->first == 2);
}

TEST_CASE("find_anchor: none when nothing anchors after the cue") {
  Sentence sent = make_sentence({{"of", "IN"}, {"course", "NN"},
                                 {"not", "RB"}, {"!", "."}});
  CHECK_FALSE(find_anchor(sent, 2, kNrp).has_value());
  CHECK_THROWS_AS(find_anchor(sent, 9, kNrp), std::out_of_range);
}

TEST_CASE("raw_scope: noun ancestor is the inner NP") {
  Sentence sent = no_details();
  auto raw = raw_scope(sent, 2, 3, PosClass::Noun);
  REQUIRE(raw.has_value());
  CHECK(*raw == std::vector<int>{2, 3});  // {no, details}
}

TEST_CASE("raw_scope: adjective ancestor spans 'angry but upset'") {
  Sentence sent = not_angry();
  auto raw = raw_scope(sent, 5, 6, PosClass::Adjective);
  REQUIRE(raw.has_value());
  CHECK(*raw == std::vector<int>{6, 7, 8});
}

TEST_CASE("raw_scope: verb ancestor is the VP to the sentence end") {
  Sentence sent = not_want();
  auto raw = raw_scope(sent, 2, 3, PosClass::Verb);
  REQUIRE(raw.has_value());
  CHECK(*raw == std::vector<int>{3, 4, 5, 6, 7});
}

TEST_CASE("raw_scope prunes right modifier children for nouns") {
  // anchor "details" with a trailing PP inside the chosen NP
  Sentence sent = make_aligned(
      "(S (NP (EX There)) (VP (VBP are) (NP (DT no) (NNS details) "
      "(PP (IN on) (NP (DT the) (NN page))))))",
      {{"There", "EX"}, {"are", "VBP"}, {"no", "DT"}, {"details", "NNS"},
       {"on", "IN"}, {"the", "DT"}, {"page", "NN"}});
  auto raw = raw_scope(sent, 2, 3, PosClass::Noun);
  REQUIRE(raw.has_value());
  CHECK(*raw == std::vector<int>{2, 3});  // PP pruned
}

TEST_CASE("raw_scope keeps left siblings and the anchor child intact") {
  // PP left of the anchor is not a right child; nothing is pruned
  Sentence sent = make_aligned(
      "(NP (PP (IN on) (NN paper)) (DT no) (NNS details))",
      {{"on", "IN"}, {"paper", "NN"}, {"no", "DT"}, {"details", "NNS"}});
  auto raw = raw_scope(sent, 2, 3, PosClass::Noun);
  REQUIRE(raw.has_value());
  CHECK(*raw == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("raw_scope: verbs prune only clause-level right children") {
  // trailing SBAR removed, trailing PP kept for a verb anchor
  Sentence sent = make_aligned(
      "(VP (VB want) (PP (IN in) (NN red)) (SBAR (IN because) (S (NP (PRP it)) "
      "(VP (VBZ matches)))))",
      {{"want", "VB"}, {"in", "IN"}, {"red", "NN"}, {"because", "IN"},
       {"it", "PRP"}, {"matches", "VBZ"}});
  auto raw = raw_scope(sent, 0, 0, PosClass::Verb);
  // "want" is the anchor; its own VP is the root here via climb from leaf
  // parent: leaf (VB want) -> VP
  REQUIRE(raw.has_value());
  CHECK(*raw == std::vector<int>{0, 1, 2});
}

TEST_CASE("raw_scope: no accepted ancestor gives nullopt") {
  Sentence sent = make_aligned("(FRAG (INTJ (UH no)) (X (SYM x)))",
                               {{"no", "UH"}, {"x", "SYM"}});
  CHECK_FALSE(raw_scope(sent, 0, 1, PosClass::Noun).has_value());
}

TEST_CASE("raw_scope without a tree is an error") {
  Sentence sent = make_sentence({{"no", "DT"}, {"details", "NNS"}});
  CHECK_THROWS_AS(raw_scope(sent, 0, 1, PosClass::Noun), MissingTreeError);
}

TEST_CASE("post_process: connective delimits before it") {
  Sentence sent = not_angry();
  ScopeResult res = post_process(sent, 5, {6, 7, 8}, kConn, kCues);
  CHECK(res.scope == std::vector<int>{6});
  REQUIRE(!res.trace.empty());
  CHECK(res.trace[0].rule == "prune-connective");
  CHECK(res.trace[0].before == std::vector<int>{6, 7, 8});
  CHECK(res.trace[0].after == std::vector<int>{6});
}

TEST_CASE("post_process: cue removal leaves the gold noun scope") {
  Sentence sent = no_details();
  ScopeResult res = post_process(sent, 2, {2, 3}, kConn, kCues);
  CHECK(res.scope == std::vector<int>{3});
}

TEST_CASE("post_process: cue tokens never act as connective delimiters") {
  // "nothing" is both a cue (Table 2) and a connective (Table 6)
  Sentence sent = make_sentence({{"no", "DT"}, {"nothing", "NN"},
                                 {"helps", "VBZ"}});
  ScopeResult res = post_process(sent, 0, {0, 1, 2}, kConn, kCues);
  CHECK(res.scope == std::vector<int>{1, 2});
}

TEST_CASE("post_process: punctuation truncates the scope") {
  Sentence sent = make_sentence({{"not", "RB"}, {"here", "RB"}, {",", ","},
                                 {"sorry", "JJ"}});
  ScopeResult res = post_process(sent, 0, {0, 1, 2, 3}, kConn, kCues);
  CHECK(res.scope == std::vector<int>{1});
}

TEST_CASE("post_process: empty raw falls back to the default scope") {
  // default scope runs to the first noun/adjective/verb inclusive
  Sentence sent = make_sentence({{"not", "RB"}, {"really", "RB"},
                                 {"want", "VB"}, {"to", "TO"}});
  ScopeResult res = post_process(sent, 0, {}, kConn, kCues);
  CHECK(res.scope == std::vector<int>{1, 2});
  REQUIRE(!res.trace.empty());
  CHECK(res.trace.back().rule == "default-scope-inclusive");
}

TEST_CASE("post_process: default scope is empty when nothing anchors") {
  Sentence sent = make_sentence({{"why", "WRB"}, {"not", "RB"}, {"?", "."}});
  ScopeResult res = post_process(sent, 1, {}, kConn, kCues);
  CHECK(res.scope.empty());
}

TEST_CASE("post_process: fill-to-cue closes the gap after pruning") {
  // raw scope starts past cue+1; rule 6 pulls it back to the cue
  Sentence sent = make_sentence({{"not", "RB"}, {"the", "DT"}, {"best", "JJS"},
                                 {"day", "NN"}});
  ScopeResult res = post_process(sent, 0, {2, 3}, kConn, kCues);
  CHECK(res.scope == std::vector<int>{1, 2, 3});
  CHECK(res.trace.back().rule == "fill-to-cue");
}

TEST_CASE("detect_scope end-to-end on the three annotated sentences") {
  CueOccurrence no_occ{2, "no", true, 1.0};
  CHECK(detect_scope(no_details(), no_occ, kCues, kNrp, kConn).scope ==
        std::vector<int>{3});

  CueOccurrence not_occ{2, "not", true, 1.0};
  CHECK(detect_scope(not_want(), not_occ, kCues, kNrp, kConn).scope ==
        std::vector<int>{3, 4, 5, 6, 7});

  CueOccurrence angry_occ{5, "not", true, 1.0};
  CHECK(detect_scope(not_angry(), angry_occ, kCues, kNrp, kConn).scope ==
        std::vector<int>{6});
}

TEST_CASE("detect_scope: false cue has no scope") {
  Sentence sent = no_details();
  CueOccurrence occ{2, "no", false, 0.2};
  ScopeResult res = detect_scope(sent, occ, kCues, kNrp, kConn);
  CHECK(res.scope.empty());
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].rule == "false-cue");
}

TEST_CASE("detect_scope: cue as final token gives empty scope with trace") {
  Sentence sent = make_aligned(
      "(S (NP (PRP I)) (VP (VBP guess) (RB not)))",
      {{"I", "PRP"}, {"guess", "VBP"}, {"not", "RB"}});
  CueOccurrence occ{2, "not", true, 1.0};
  ScopeResult res = detect_scope(sent, occ, kCues, kNrp, kConn);
  CHECK(res.scope.empty());
  REQUIRE(!res.trace.empty());
  CHECK(res.trace[0].rule == "no-anchor");
}

TEST_CASE("detect_scope without a tree reports the missing tree") {
  Sentence sent = make_sentence({{"no", "DT"}, {"details", "NNS"}});
  CueOccurrence occ{0, "no", true, 1.0};
  CHECK_THROWS_AS(detect_scope(sent, occ, kCues, kNrp, kConn),
                  MissingTreeError);
}

TEST_CASE("punctuation_scope runs from cue+1 to the next punctuation") {
  Sentence sent = make_sentence({{"I", "PRP"}, {"do", "VBP"}, {"not", "RB"},
                                 {"want", "VB"}, {"it", "PRP"}, {",", ","},
                                 {"thanks", "NNS"}});
  CueOccurrence occ{2, "not", true, 1.0};
  CHECK(punctuation_scope(sent, occ).scope == std::vector<int>{3, 4});
}

TEST_CASE("punctuation_scope: cue immediately before punctuation") {
  Sentence sent = make_sentence({{"not", "RB"}, {",", ","}, {"ok", "JJ"}});
  CHECK(punctuation_scope(sent, CueOccurrence{0, "not", true, 1.0})
            .scope.empty());
}

TEST_CASE("punctuation_scope runs to sentence end without punctuation") {
  Sentence sent = make_sentence({{"I", "PRP"}, {"do", "VBP"}, {"not", "RB"},
                                 {"want", "VB"}, {"to", "TO"},
                                 {"update", "VB"}, {"it", "PRP"},
                                 {"anymore", "RB"}});
  CHECK(punctuation_scope(sent, CueOccurrence{2, "not", true, 1.0}).scope ==
        std::vector<int>{3, 4, 5, 6, 7});
}

TEST_CASE("punctuation_scope: false cues scoped only on request") {
  Sentence sent = make_sentence({{"not", "RB"}, {"bad", "JJ"}});
  CueOccurrence occ{0, "not", false, 0.1};
  CHECK(punctuation_scope(sent, occ).scope.empty());
  CHECK(punctuation_scope(sent, occ, /*include_false_cues=*/true).scope ==
        std::vector<int>{1});
}

namespace {

void check_invariants(const ScopeResult& res, int n_tokens) {
  for (int i : res.scope) {
    CHECK(i >= 0);
    CHECK(i < n_tokens);
    CHECK(i != res.cue_index);
  }
  if (!res.scope.empty()) {
    CHECK(res.scope.front() == res.cue_index + 1);
    for (std::size_t k = 1; k < res.scope.size(); ++k)
      CHECK(res.scope[k] == res.scope[k - 1] + 1);
  }
}

}  // namespace

TEST_CASE("property: scope invariants and determinism on random trees") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 2000; ++iter) {
    auto rs = negscope::testing::random_sentence(rng);
    Sentence sent = make_aligned(rs.bracketed, rs.tokens);
    CueOccurrence occ{rs.cue_index, sent.tokens[rs.cue_index].norm, true, 1.0};
    ScopeResult a = detect_scope(sent, occ, kCues, kNrp, kConn);
    ScopeResult b = detect_scope(sent, occ, kCues, kNrp, kConn);
    check_invariants(a, static_cast<int>(sent.tokens.size()));
    CHECK(a.scope == b.scope);
    REQUIRE(a.trace.size() == b.trace.size());
  }
}

TEST_CASE("property: trace replay reproduces the final scope") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 2000; ++iter) {
    auto rs = negscope::testing::random_sentence(rng);
    Sentence sent = make_aligned(rs.bracketed, rs.tokens);
    CueOccurrence occ{rs.cue_index, sent.tokens[rs.cue_index].norm, true, 1.0};

    auto anchor = find_anchor(sent, occ.token_index, kNrp);
    std::vector<int> raw;
    if (anchor) {
      auto indices =
          raw_scope(sent, occ.token_index, anchor->first, anchor->second);
      if (indices) raw = *indices;
    }
    ScopeResult res = detect_scope(sent, occ, kCues, kNrp, kConn);

    std::vector<int> state = raw;
    for (const auto& rec : res.trace) {
      if (rec.rule == "no-anchor" || rec.rule == "no-ancestor" ||
          rec.rule == "false-cue")
        continue;
      CHECK(rec.before == state);
      state = rec.after;
    }
    CHECK(state == res.scope);
  }
}
