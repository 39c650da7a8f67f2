#include <doctest.h>

#include "oracle/brute.hpp"
#include "support.hpp"

using namespace pdfa;
using namespace pdfa::testing;

TEST_CASE("brute rank") {
    auto m = oracle::brute_rank(m2(), 3);
    CHECK(m.rank == 1);
    CHECK(m.witness == Word{0});

    auto c = oracle::brute_rank(c4(), 9);
    CHECK(c.rank == 1);
    CHECK(c.witness.size() == 9);
    CHECK(rank_of_word(c4(), c4().all_states(), c.witness) == 1);
    // Too short to synchronize C4.
    CHECK(oracle::brute_rank(c4(), 8).rank > 1);

    auto p = oracle::brute_rank(p2(), 5);
    CHECK(p.rank == 2);
    CHECK(p.witness.empty());
}

TEST_CASE("brute saturating word") {
    CHECK(oracle::brute_saturating_word(p2(), StateSet(2, {0}), 2) == Word{});
    CHECK_FALSE(oracle::brute_saturating_word(m2(), StateSet(2, {0}), 4).has_value());
}

TEST_CASE("brute language") {
    Acceptor parity(p2(), 0, StateSet(2, {0}));
    CHECK(oracle::brute_language(parity, 4) == std::set<Word>{{}, {0, 0}, {0, 0, 0, 0}});
    Acceptor plus(m2(), 0, StateSet(2, {1}));
    CHECK(oracle::brute_language(plus, 2) == std::set<Word>{{0}, {0, 0}});
}

TEST_CASE("word enumeration") {
    auto words = oracle::all_words(2, 3);
    CHECK(words.size() == 1 + 2 + 4 + 8);
    CHECK(words[1] == Word{0});
    CHECK(words.back() == Word{1, 1, 1});
    CHECK_THROWS_AS(oracle::all_words(2, 30, 1000), ResourceLimitError);
}
