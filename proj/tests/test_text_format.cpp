#include <doctest.h>

#include <filesystem>
#include <random>

#include "pdfa/io/dot.hpp"
#include "pdfa/io/text_format.hpp"
#include "support.hpp"

using namespace pdfa;
using namespace pdfa::io;
using namespace pdfa::testing;

namespace {

std::filesystem::path data_dir() { return PDFA_TEST_DATA_DIR; }

} // namespace

TEST_CASE("parse a small automaton") {
    AutomatonFile f = parse_automaton("states: 2\nalphabet: a\ninitial: 0\naccepting: 1\ntrans: 0 a 1\ntrans: 1 a 1\n");
    CHECK(f.dfa == m2());
    CHECK(f.initial == State{0});
    CHECK(f.accepting == StateSet(2, {1}));
    CHECK(serialize_automaton(f) == "states: 2\nalphabet: a\ninitial: 0\naccepting: 1\ntrans: 0 a 1\ntrans: 1 a 1\n");
}

TEST_CASE("initial without accepting means no accepting states") {
    AutomatonFile f = parse_automaton("states: 1\nalphabet: a\ninitial: 0\n");
    CHECK(f.accepting == StateSet(1));
    CHECK(serialize_automaton(f) == "states: 1\nalphabet: a\ninitial: 0\naccepting:\n");
    CHECK_THROWS_AS(parse_automaton("states: 1\nalphabet: a\n").acceptor(), InputError);
}

TEST_CASE("malformed automaton files") {
    auto line_of = [](const char* text) {
        try {
            parse_automaton(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{9999};
    };
    CHECK(line_of("states: 2\nalphabet: a\ncolour: red\n") == 3);
    CHECK(line_of("states: 2\nalphabet: a\ntrans: 0 a 1\ntrans: 0 a 0\n") == 4);
    CHECK(line_of("states: 2\nalphabet: a\ntrans: 0 b 1\n") == 3);
    CHECK(line_of("states: 2\nalphabet: a\ntrans: 0 a 2\n") == 3);
    CHECK(line_of("states: -2\nalphabet: a\n") == 1);
    CHECK(line_of("states: 2\nstates: 2\nalphabet: a\n") == 2);
    CHECK(line_of("states: 2\nalphabet: a\naccepting: 1\n") == 3);
    CHECK(line_of("states: 2\nalphabet: a\ninitial: 5\n") == 3);
    CHECK(line_of("states: 2\nalphabet: a a\n") == 0);
    CHECK(line_of("alphabet: a\n") == 0);
    CHECK(line_of("states: 2\n") == 0);
    CHECK(line_of("states 2\nalphabet: a\n") == 1);
    CHECK(line_of("states: 2\nalphabet: a\ntrans: 0 a\n") == 3);
}

TEST_CASE("corpus round-trips") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir())) {
        if (entry.path().extension() != ".aut") continue;
        ++count;
        AutomatonFile f = read_automaton(entry.path());
        std::string canonical = serialize_automaton(f);
        AutomatonFile again = parse_automaton(canonical);
        CHECK(again == f);
        CHECK(serialize_automaton(again) == canonical);
    }
    CHECK(count >= 20);
}

TEST_CASE("messy file parses to the expected automaton") {
    AutomatonFile f = read_automaton(data_dir() / "messy.aut");
    CHECK(f.dfa.state_count() == 3);
    CHECK(f.dfa.target(1, 1) == 0);
    CHECK(f.dfa.target(1, 0) == 2);
    CHECK(f.accepting == StateSet(3, {1, 2}));
}

TEST_CASE("random automata round-trip through text") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = 1 + rng() % 9;
        AutomatonFile f{random_dfa(rng, n, 1 + rng() % 4, 0.6), std::nullopt, std::nullopt};
        if (rng() % 2) {
            f.initial = static_cast<State>(rng() % n);
            f.accepting = random_subset(rng, n);
        }
        CHECK(parse_automaton(serialize_automaton(f)) == f);
    }
}

TEST_CASE("instance files") {
    IntersectionInstance inst = read_instance(data_dir() / "disjoint.inst");
    CHECK(inst.size() == 2);
    CHECK(inst.alphabet() == std::vector<std::string>{"a", "b"});
    IntersectionInstance again = parse_instance(serialize_instance(inst));
    CHECK(again.machines() == inst.machines());

    CHECK_THROWS_AS(parse_instance("alphabet: a\nmachine:\nstates: 2\ninitial: 0\ntrans: 0 a 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("alphabet: a\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("alphabet: a\nmachine:\nstates: 1\ntrans: 0 a 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("machine:\nstates: 1\ninitial: 0\ntrans: 0 a 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("alphabet: a\nmachine:\nalphabet: a\n"), ParseError);
}

TEST_CASE("dot export") {
    AutomatonFile f = read_automaton(data_dir() / "multi_letter_names.aut");
    std::string dot = to_dot(f);
    CHECK(dot.find("digraph \"automaton\" {") == 0);
    CHECK(dot.find("__start -> 2;") != std::string::npos);
    CHECK(dot.find("0 [shape=doublecircle];") != std::string::npos);
    CHECK(dot.find("2 -> 0 [label=\"go,reset\"];") != std::string::npos);
    CHECK(dot.find("1 -> 0 [label=\"reset\"];") != std::string::npos);

    // Undefined transitions are omitted.
    std::string d2dot = to_dot(read_automaton(data_dir() / "d2.aut"));
    CHECK(d2dot.find("0 -> 1") != std::string::npos);
    CHECK(d2dot.find("1 -> ") == std::string::npos);
}
