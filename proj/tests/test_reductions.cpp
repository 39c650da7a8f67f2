#include <doctest.h>

#include <random>

#include "oracle/brute.hpp"
#include "pdfa/graph.hpp"
#include "pdfa/rank.hpp"
#include "pdfa/reductions.hpp"
#include "pdfa/saturation.hpp"
#include "support.hpp"

using namespace pdfa;
using namespace pdfa::testing;

namespace {

/// Complete machine over {a, b} accepting exactly the one-letter word `letter`.
Acceptor exactly_one_letter(Letter letter) {
    // 0 initial, 1 accepting, 2 trap
    DfaBuilder b(3, {"a", "b"});
    b.set(0, letter, 1).set(0, 1 - letter, 2);
    for (Letter a = 0; a < 2; ++a) b.set(1, a, 2).set(2, a, 2);
    return Acceptor(b.build(), 0, StateSet(3, {1}));
}

Acceptor universal_machine(const std::vector<std::string>& alphabet) {
    DfaBuilder b(1, alphabet);
    for (Letter a = 0; a < alphabet.size(); ++a) b.set(0, a, 0);
    return Acceptor(b.build(), 0, StateSet(1, {0}));
}

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

TEST_CASE("intersection instances are validated") {
    CHECK_THROWS_AS(IntersectionInstance({}), InputError);
    CHECK_THROWS_AS(IntersectionInstance({Acceptor(d2(), 0, StateSet(2, {1}))}), InputError);
    CHECK_THROWS_AS(IntersectionInstance({exactly_one_letter(0), universal_machine({"a"})}), InputError);
}

TEST_CASE("common word oracle") {
    IntersectionInstance single({universal_machine({"a", "b"})});
    CHECK(has_common_word(single) == Word{});

    IntersectionInstance disjoint({exactly_one_letter(0), exactly_one_letter(1)});
    CHECK_FALSE(has_common_word(disjoint).has_value());

    IntersectionInstance same({exactly_one_letter(1), exactly_one_letter(1)});
    CHECK(has_common_word(same) == Word{1});

    std::mt19937_64 rng(61);
    for (int round = 0; round < 100; ++round) {
        IntersectionInstance inst = random_instance(rng, 2, 3);
        auto fast = has_common_word(inst);
        auto brute = oracle::brute_common_word(inst, 9);
        REQUIRE(fast.has_value() == brute.has_value());
        if (fast) CHECK(fast->size() == brute->size());
    }
    CHECK_THROWS_AS(has_common_word(disjoint, SearchBudget{2}), ResourceLimitError);
}

TEST_CASE("sync gadget structure") {
    IntersectionInstance one({universal_machine({"a"})});
    Gadget g = build_sync_gadget(one);
    CHECK(g.dfa.state_count() == 4);
    CHECK(g.dfa.letter_count() == 3);
    const State y = g.layout.special_states.at("Y"), n = g.layout.special_states.at("N");
    const Letter z = g.layout.special_letters.at("z");
    CHECK_FALSE(g.dfa.defined(y, z));
    CHECK_FALSE(g.dfa.defined(n, z));
    // everything else is defined
    std::size_t undefined = 0;
    for (State s = 0; s < g.dfa.state_count(); ++s)
        for (Letter a = 0; a < g.dfa.letter_count(); ++a) undefined += !g.dfa.defined(s, a);
    CHECK(undefined == 2);
}

TEST_CASE("sync gadget on small instances") {
    IntersectionInstance same({exactly_one_letter(1), exactly_one_letter(1)});
    Gadget g = build_sync_gadget(same);
    const Letter r = g.layout.special_letters.at("r"), z = g.layout.special_letters.at("z");
    CHECK(g.dfa.state_count() == 3 + 3 + 1 + 2);
    CHECK(rank_of_word(g.dfa, g.dfa.all_states(), Word{r, 1, z}) == 1);
    CHECK(is_synchronizing(g.dfa));

    IntersectionInstance disjoint({exactly_one_letter(0), exactly_one_letter(1)});
    CHECK_FALSE(is_synchronizing(build_sync_gadget(disjoint).dfa));

    std::mt19937_64 rng(62);
    for (int round = 0; round < 100; ++round) {
        IntersectionInstance inst = random_instance(rng, 1 + rng() % 3, 3);
        Gadget sg = build_sync_gadget(inst);
        CHECK(sg.dfa.state_count() == inst.total_states() + 1 + 2);
        CHECK(sg.dfa.letter_count() == inst.alphabet().size() + 2);
        auto w = has_common_word(inst);
        CHECK(is_synchronizing(sg.dfa) == w.has_value());
        if (w) {
            Word rwz = concat({Word{sg.layout.special_letters.at("r")}, *w, Word{sg.layout.special_letters.at("z")}});
            CHECK(rank_of_word(sg.dfa, sg.dfa.all_states(), rwz) == 1);
        }
    }
}

TEST_CASE("saturation gadget") {
    IntersectionInstance same({exactly_one_letter(1), exactly_one_letter(1)});
    Gadget g = build_saturation_gadget(same);
    CHECK(g.dfa.state_count() == 7);
    CHECK(exact_rank(g.dfa).rank == 1);
    auto w = find_saturating_min_rank_word(g.dfa, g.dfa.all_states());
    REQUIRE(w);
    // Shape r w z.
    CHECK(w->front() == g.layout.special_letters.at("r"));
    CHECK(w->back() == g.layout.special_letters.at("z"));

    IntersectionInstance disjoint({exactly_one_letter(0), exactly_one_letter(1)});
    Gadget no = build_saturation_gadget(disjoint);
    CHECK(exact_rank(no.dfa).rank == 1);
    CHECK_FALSE(find_saturating_min_rank_word(no.dfa, no.dfa.all_states()).has_value());

    // A machine with no reachable accepting state violates the precondition.
    Acceptor hopeless(DfaBuilder(1, {"a", "b"}).set(0, "a", 0).set(0, "b", 0).build(), 0, StateSet(1));
    CHECK_THROWS_AS(build_saturation_gadget(IntersectionInstance({hopeless})), InputError);
}

TEST_CASE("strongly connecting a gadget") {
    Gadget unchanged = strongly_connect_gadget(p2(), 0);
    CHECK(unchanged.dfa == p2());
    CHECK(unchanged.layout.connector_letters.empty());

    CHECK_THROWS_AS(strongly_connect_gadget(m2(), 0), InputError);
    Gadget m = strongly_connect_gadget(m2(), 1);
    CHECK(is_strongly_connected(m.dfa));
    CHECK(m.layout.connector_targets == std::vector<State>{0});

    std::mt19937_64 rng(63);
    for (int round = 0; round < 60; ++round) {
        IntersectionInstance inst = random_saturation_instance(rng, 1 + rng() % 2, 3);
        Gadget base = build_saturation_gadget(inst);
        State y = base.layout.special_states.at("Y");
        Gadget sc = strongly_connect_gadget(base.dfa, y);
        CHECK(is_strongly_connected(sc.dfa));
        CHECK(sc.dfa.letter_count() == base.dfa.letter_count() + sc.layout.connector_letters.size());
        for (std::size_t i = 0; i < sc.layout.connector_letters.size(); ++i) {
            Letter l = sc.layout.connector_letters[i];
            for (State s = 0; s < sc.dfa.state_count(); ++s)
                CHECK(sc.dfa.target(s, l) == (s == y ? sc.layout.connector_targets[i] : kUndefined));
        }
        CHECK(exact_rank(sc.dfa).rank == 1);
        bool base_yes = find_saturating_min_rank_word(base.dfa, base.dfa.all_states()).has_value();
        CHECK(find_saturating_min_rank_word(sc.dfa, sc.dfa.all_states()).has_value() == base_yes);
        CHECK(base_yes == has_common_word(inst).has_value());
    }
}

TEST_CASE("binarization structure") {
    // 5 states, 4 letters -> 20 states.
    std::mt19937_64 rng(64);
    PartialDfa d = random_dfa(rng, 5, 4, 0.8);
    Gadget b = binarize(d, "d");
    CHECK(b.dfa.state_count() == 20);
    CHECK(b.dfa.alphabet() == std::vector<std::string>{"0", "1"});
    CHECK(b.layout.letter_order == std::vector<Letter>{0, 1, 2, 3});
    CHECK_THROWS_AS(binarize(d, "e"), InputError);

    Gadget reordered = binarize(d, "a");
    CHECK(reordered.layout.letter_order == std::vector<Letter>{1, 2, 3, 0});

    // M2 with an added self-loop letter: 2 states x 2 letters.
    Gadget m = binarize_with_selfloop(m2());
    CHECK(m.dfa.state_count() == 4);
}

TEST_CASE("binarization emulates the source automaton") {
    std::mt19937_64 rng(65);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % 5, k = 1 + rng() % 4;
        PartialDfa d = random_dfa(rng, n, k, 0.7);
        Letter last = static_cast<Letter>(rng() % k);
        Gadget b = binarize(d, last);
        const auto& order = b.layout.letter_order;
        // Letter x_i is emulated by 0^(i-1) 1 from the embedded states.
        for (std::size_t i = 0; i < k; ++i) {
            Word code(i, 0);
            code.push_back(1);
            for (State q = 0; q < n; ++q) {
                auto src = apply_letter(d, q, order[i]);
                auto bin = apply_word(b.dfa, b.layout.embedding[q], code);
                CHECK(bin.has_value() == src.has_value());
                if (src) CHECK(*bin == b.layout.embedding[*src]);
            }
        }
        // 0^(n-1) 1 sends every state to the embedded image of x_n.
        Word reset(k - 1, 0);
        reset.push_back(1);
        StateSet expected(b.dfa.state_count());
        for (State q : image(d, d.all_states(), Word{last})) expected.insert(b.layout.embedding[q]);
        if (is_complete(d)) CHECK(image(b.dfa, b.dfa.all_states(), reset) == expected);
        if (is_strongly_connected(d) && d.defined(0, last)) {
            bool total_last = true;
            for (State q = 0; q < n; ++q) total_last &= d.defined(q, last);
            if (total_last) CHECK(is_strongly_connected(b.dfa));
        }
    }
}

TEST_CASE("binarization with a self-loop keeps the rank of permutation automata") {
    std::mt19937_64 rng(66);
    for (int round = 0; round < 60; ++round) {
        PartialDfa d = random_permutation_dfa(rng, 1 + rng() % 4, 1 + rng() % 2);
        CHECK(exact_rank(binarize_with_selfloop(d).dfa).rank == exact_rank(d).rank);
    }
}

TEST_CASE("binarization with a self-loop keeps the sync gadget verdict") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 30; ++round) {
        IntersectionInstance inst = random_instance(rng, 1 + rng() % 2, 2);
        Gadget g = build_sync_gadget(inst);
        CHECK(is_synchronizing(binarize_with_selfloop(g.dfa).dfa) == is_synchronizing(g.dfa));
    }
}

TEST_CASE("complete gadget") {
    std::mt19937_64 rng(68);
    for (int round = 0; round < 25; ++round) {
        IntersectionInstance inst = random_complete_gadget_instance(rng, 5);
        CompleteGadget g = build_complete_gadget(inst);
        const std::size_t q_count = inst.total_states() + 1;
        CHECK(g.dfa.state_count() == 2 * q_count + 2);
        CHECK(is_complete(g.dfa));
        CHECK(is_strongly_connected(g.dfa));
        RankResult r = exact_rank(g.dfa);
        CHECK(r.rank == 2);
        const Letter l1 = g.layout.connector_letters.front();
        CHECK(rank_of_word(g.dfa, g.dfa.all_states(), Word{l1}) == 2);

        PairAutomaton pa(g.dfa);
        for (State q = 0; q < q_count; ++q) CHECK_FALSE(pa.collapse_distance(q, q + q_count).has_value());

        auto common = has_common_word(inst);
        auto w = find_saturating_min_rank_word(g.dfa, g.target);
        CHECK(w.has_value() == common.has_value());
        if (common) {
            const Letter r_letter = g.layout.special_letters.at("r"), z = g.layout.special_letters.at("z");
            Word with_z = concat({Word{r_letter}, *common, Word{z, l1}});
            CHECK(is_saturated_by(g.dfa, g.target, with_z));
            CHECK(rank_of_word(g.dfa, g.dfa.all_states(), with_z) == 2);
            // The candidate without z leaves accepting states and E_bar on
            // opposite sides of l1's image: not saturating.
            Word without_z = concat({Word{r_letter}, *common, Word{l1}});
            CHECK_FALSE(is_saturated_by(g.dfa, g.target, without_z));
        }
    }
}

TEST_CASE("complete gadget assumptions are checked") {
    // Accepts everything.
    CHECK_THROWS_AS(build_complete_gadget(IntersectionInstance({universal_machine({"a", "b"})})), InputError);
    // Trap state cannot reach acceptance.
    CHECK_THROWS_AS(build_complete_gadget(IntersectionInstance({exactly_one_letter(0)})), InputError);
}
