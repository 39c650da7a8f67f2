#pragma once

// Named small automata and seeded random generators shared by the test suites.

#include <algorithm>
#include <random>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/graph.hpp"
#include "pdfa/reductions.hpp"

namespace pdfa::testing {

/// 2 states, a: 0->1, 1->1.
inline PartialDfa m2() { return DfaBuilder(2, {"a"}).set(0, "a", 1).set(1, "a", 1).build(); }

/// 2 states, a: 0->1, undefined on 1.
inline PartialDfa d2() { return DfaBuilder(2, {"a"}).set(0, "a", 1).build(); }

/// 2 states, a swaps them.
inline PartialDfa p2() { return DfaBuilder(2, {"a"}).set(0, "a", 1).set(1, "a", 0).build(); }

/// Cerny automaton on 4 states: a is the cyclic shift, b maps 0 to 1 and fixes the rest.
inline PartialDfa c4() {
    DfaBuilder b(4, {"a", "b"});
    for (State s = 0; s < 4; ++s) b.set(s, "a", (s + 1) % 4);
    b.set(0, "b", 1).set(1, "b", 1).set(2, "b", 2).set(3, "b", 3);
    return b.build();
}

/// 3-cycle under a; b: 0->0, 1->0, undefined on 2.
inline PartialDfa cycle3() {
    DfaBuilder b(3, {"a", "b"});
    for (State s = 0; s < 3; ++s) b.set(s, "a", (s + 1) % 3);
    b.set(0, "b", 0).set(1, "b", 0);
    return b.build();
}

inline std::vector<std::string> letters(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

/// Each transition is defined with probability `density`, target uniform.
inline PartialDfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k, double density) {
    std::bernoulli_distribution defined(density);
    std::uniform_int_distribution<State> target(0, static_cast<State>(n - 1));
    DfaBuilder b(n, letters(k));
    for (State s = 0; s < n; ++s)
        for (Letter a = 0; a < k; ++a)
            if (defined(rng)) b.set(s, a, target(rng));
    return b.build();
}

/// Rejection-samples a strongly connected automaton with n in [1, max_n],
/// k in [1, max_k] and density in [lo, hi].
inline PartialDfa random_sc_dfa(std::mt19937_64& rng, std::size_t max_n, std::size_t max_k, double lo = 0.6,
                                double hi = 1.0) {
    std::uniform_int_distribution<std::size_t> pick_n(1, max_n), pick_k(1, max_k);
    std::uniform_real_distribution<double> pick_density(lo, hi);
    for (;;) {
        PartialDfa d = random_dfa(rng, pick_n(rng), pick_k(rng), pick_density(rng));
        if (is_strongly_connected(d)) return d;
    }
}

inline StateSet random_subset(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    StateSet s(n);
    for (State q = 0; q < n; ++q)
        if (coin(rng)) s.insert(q);
    return s;
}

inline Acceptor random_acceptor(std::mt19937_64& rng, std::size_t n, std::size_t k, double density) {
    PartialDfa d = random_dfa(rng, n, k, density);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    return Acceptor(d, pick(rng), random_subset(rng, n));
}

/// Random permutation automaton.
inline PartialDfa random_permutation_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    DfaBuilder b(n, letters(k));
    std::vector<State> perm(n);
    for (Letter a = 0; a < k; ++a) {
        for (State s = 0; s < n; ++s) perm[s] = s;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (State s = 0; s < n; ++s) b.set(s, a, perm[s]);
    }
    return b.build();
}

inline Acceptor random_complete_machine(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    return random_acceptor(rng, n, k, 1.0);
}

/// k machines with 1..max_states states each over `letter_count` letters.
inline IntersectionInstance random_instance(std::mt19937_64& rng, std::size_t machines, std::size_t max_states,
                                            std::size_t letter_count = 2) {
    std::uniform_int_distribution<std::size_t> pick_n(1, max_states);
    std::vector<Acceptor> ms;
    for (std::size_t i = 0; i < machines; ++i) ms.push_back(random_complete_machine(rng, pick_n(rng), letter_count));
    return IntersectionInstance(std::move(ms));
}

/// Random instance whose machines all reach an accepting state from the
/// initial state (saturation gadget precondition).
inline IntersectionInstance random_saturation_instance(std::mt19937_64& rng, std::size_t machines,
                                                       std::size_t max_states) {
    for (;;) {
        IntersectionInstance inst = random_instance(rng, machines, max_states);
        bool ok = true;
        for (const auto& m : inst.machines()) {
            StateSet from(m.dfa().state_count(), {m.initial()});
            if (!reachable_from(m.dfa(), from).intersects(m.accepting())) ok = false;
        }
        if (ok) return inst;
    }
}

/// Random instance meeting the complete-gadget assumptions, with at most
/// `max_total` states overall.
inline IntersectionInstance random_complete_gadget_instance(std::mt19937_64& rng, std::size_t max_total) {
    std::uniform_int_distribution<std::size_t> pick_k(1, 2);
    for (;;) {
        std::size_t k = pick_k(rng);
        std::vector<Acceptor> ms;
        std::size_t budget = max_total;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            std::size_t remaining_machines = k - i - 1;
            std::size_t hi = budget - remaining_machines * 2;
            if (hi < 2) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick_n(2, std::min<std::size_t>(hi, 3));
            std::size_t n = pick_n(rng);
            budget -= n;
            Acceptor m = random_complete_machine(rng, n, 2);
            if (reachable_from(m.dfa(), StateSet(n, {m.initial()})).size() != n ||
                coreachable_to(m.dfa(), m.accepting()).size() != n || m.accepting().size() == n ||
                m.accepting().empty())
                ok = false;
            ms.push_back(std::move(m));
        }
        if (ok) return IntersectionInstance(std::move(ms));
    }
}

} // namespace pdfa::testing
