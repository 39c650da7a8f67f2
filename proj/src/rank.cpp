#include "pdfa/rank.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "pdfa/graph.hpp"

namespace pdfa {

namespace {

struct Parent {
    std::size_t node;
    Letter letter;
};

Word unwind(const std::vector<std::optional<Parent>>& parents, std::size_t node) {
    Word w;
    while (parents[node]) {
        w.push_back(parents[node]->letter);
        node = parents[node]->node;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace

RankResult exact_rank(const PartialDfa& dfa, SearchBudget budget) {
    const std::size_t n = dfa.state_count();
    if (n == 0) throw InputError("rank is undefined for an automaton without states");

    std::vector<StateSet> nodes;
    std::vector<std::optional<Parent>> parents;
    std::unordered_map<StateSet, std::size_t, StateSetHash> seen;

    nodes.push_back(dfa.all_states());
    parents.push_back(std::nullopt);
    seen.emplace(nodes.back(), 0);

    std::size_t best = 0;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].size() < nodes[best].size()) {
            best = head;
            if (nodes[best].size() == 1) break;
        }
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            StateSet next(n);
            for (State s : nodes[head])
                if (State t = dfa.target(s, a); t != kUndefined) next.insert(t);
            if (next.empty() || seen.contains(next)) continue;
            if (nodes.size() >= budget.max_configurations)
                throw ResourceLimitError("subset search exceeded budget of " +
                                         std::to_string(budget.max_configurations) + " configurations");
            seen.emplace(next, nodes.size());
            nodes.push_back(std::move(next));
            parents.push_back(Parent{head, a});
        }
    }
    return RankResult{nodes[best].size(), unwind(parents, best), nodes.size()};
}

std::optional<Word> find_synchronizing_word(const PartialDfa& dfa, SearchBudget budget) {
    RankResult r = exact_rank(dfa, budget);
    if (r.rank != 1) return std::nullopt;
    return std::move(r.witness);
}

bool is_synchronizing(const PartialDfa& dfa, SearchBudget budget) {
    return find_synchronizing_word(dfa, budget).has_value();
}

Word collapse_pairs(const PartialDfa& dfa, const StateSet& start) {
    validate_set(dfa, start);
    PairAutomaton pairs(dfa);
    StateSet current = start;
    Word w;
    for (;;) {
        std::optional<std::size_t> best_len;
        State best_p = 0, best_q = 0;
        std::vector<State> members = current.members();
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                auto d = pairs.collapse_distance(members[i], members[j]);
                if (d && (!best_len || *d < *best_len)) {
                    best_len = d;
                    best_p = members[i];
                    best_q = members[j];
                }
            }
        }
        if (!best_len) return w;
        Word v = *pairs.collapsing_word(best_p, best_q);
        current = image(dfa, current, v);
        w.insert(w.end(), v.begin(), v.end());
    }
}

RankResult min_rank_word_sc(const PartialDfa& dfa) {
    if (!is_strongly_connected(dfa))
        throw InputError("the polynomial rank algorithm requires a strongly connected automaton");
    StateSet all = dfa.all_states();
    Word w = collapse_pairs(dfa, all);
    std::size_t rank = image(dfa, all, w).size();
    return RankResult{rank, std::move(w), 0};
}

std::uint64_t rank_word_length_bound(std::uint64_t n, std::uint64_t r) {
    if (r < 1 || r > n) throw InputError("rank bound needs 1 <= r <= n");
    if (r == n) return 0;
    // (n-r)(n+2) >= n+2 >= 3 here, so the inner factor is positive.
    return (n - 1) * ((n - r) * (n + 2) - 2) / 2;
}

} // namespace pdfa
