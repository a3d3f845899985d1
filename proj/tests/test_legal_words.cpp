#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "monoquiv/error.hpp"
#include "monoquiv/legal_words.hpp"
#include "monoquiv/report.hpp"
#include "oracles.hpp"

using namespace monoquiv;

TEST_SUITE("legal_words") {

TEST_CASE("automaton agrees with naive factor search on all short words") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = trial_rng(11, t);
    MonomialPresentation p = oracle::random_presentation(rng);
    FactorAutomaton a(p);
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const Word& w : oracle::all_words(p.num_letters(), n)) {
        CHECK_MESSAGE(is_legal(a, w) == oracle::legal(w, p.forbidden()), "trial ", t);
      }
    }
  }
}

TEST_CASE("dead state absorbs") {
  MonomialPresentation p = testing::xyz_y4();
  FactorAutomaton a(p);
  auto s = a.run(p.parse_word("xx"));
  CHECK(a.is_dead(s));
  for (Letter x = 0; x < 3; ++x) CHECK(a.step(s, x) == a.dead());
  CHECK(a.state_word(a.run(p.parse_word("xyyy"))) == p.parse_word("yyy"));
}

TEST_CASE("enumeration and counts match brute force") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = trial_rng(12, t);
    MonomialPresentation p = oracle::random_presentation(rng, 3);
    FactorAutomaton a(p);
    DegreeSeries by_len = count_by_length(a, 7);
    for (std::size_t n = 0; n <= 7; ++n) {
      auto want = oracle::legal_words(p, n);
      CHECK(enumerate_by_length(a, n) == want);
      CHECK(by_len[n] == want.size());
    }
    auto want = oracle::legal_by_degree(p, 7);
    DegreeSeries by_deg = count_by_degree(a, 7);
    for (std::size_t d = 0; d <= 7; ++d) CHECK(by_deg[d] == want[d]);
  }
}

TEST_CASE("legal words of the weighted example") {
  MonomialPresentation p = testing::xy_weighted();
  FactorAutomaton a(p);
  CHECK(enumerate_by_length(a, 2) ==
        std::vector<Word>{p.parse_word("xx"), p.parse_word("xy"), p.parse_word("yy")});
  CHECK(enumerate_by_length(a, 3) ==
        std::vector<Word>{p.parse_word("xxy"), p.parse_word("xyy"), p.parse_word("yyy")});
  CHECK(count_by_degree(a, 6).to_string() == "[1,1,2,1,2,1,2]");
}

TEST_CASE("free algebra counts are powers") {
  auto p = testing::presentation(R"({"kind":"monomial","generators":[{"name":"x","degree":1},
    {"name":"y","degree":1}]})");
  FactorAutomaton a(p);
  CHECK(a.num_live_states() == 1);
  CHECK(count_by_length(a, 5).to_string() == "[1,2,4,8,16,32]");
  CHECK(count_by_length(a, 70)[70] == mpz_class(1) << 70);
}

TEST_CASE("enumeration budget") {
  auto p = testing::presentation(R"({"kind":"monomial","generators":[{"name":"x","degree":1},
    {"name":"y","degree":1}]})");
  CHECK_THROWS_AS(enumerate_by_length(FactorAutomaton(p), 12, 1000), BudgetExceeded);
}

}  // TEST_SUITE
