#include "pdfa/saturation.hpp"

#include <algorithm>
#include <unordered_map>

namespace pdfa {

namespace {

StateSet pack(const SaturationConfig& c, std::size_t n) {
    StateSet key(2 * n);
    for (State s : c.inside) key.insert(s);
    for (State s : c.outside) key.insert(static_cast<State>(n + s));
    return key;
}

bool accepts(const SaturationConfig& c, std::size_t rank) {
    return c.alive && !c.inside.intersects(c.outside) && (c.inside | c.outside).size() == rank;
}

} // namespace

bool is_saturated_by(const PartialDfa& dfa, const StateSet& set, std::span<const Letter> w) {
    validate_set(dfa, set);
    validate_word(dfa, w);
    StateSet inside(dfa.state_count());
    for (State s : set) {
        auto t = apply_word(dfa, s, w);
        if (!t) return false;
        inside.insert(*t);
    }
    return !image(dfa, set.complement(), w).intersects(inside);
}

SaturationConfig step(const PartialDfa& dfa, const SaturationConfig& config, Letter a) {
    SaturationConfig out{StateSet(dfa.state_count()), StateSet(dfa.state_count()), config.alive};
    for (State s : config.inside) {
        State t = dfa.target(s, a);
        if (t == kUndefined) out.alive = false;
        else out.inside.insert(t);
    }
    for (State s : config.outside)
        if (State t = dfa.target(s, a); t != kUndefined) out.outside.insert(t);
    return out;
}

std::optional<Word> find_saturating_min_rank_word(const PartialDfa& dfa, const StateSet& set,
                                                  SearchBudget budget) {
    validate_set(dfa, set);
    const std::size_t n = dfa.state_count();
    RankResult rank = exact_rank(dfa, budget);
    const std::size_t limit = budget.max_configurations - std::min(budget.max_configurations, rank.explored);

    struct Node {
        SaturationConfig config;
        std::size_t parent;
        Letter letter;
    };
    std::vector<Node> nodes;
    std::unordered_map<StateSet, std::size_t, StateSetHash> seen;
    nodes.push_back({SaturationConfig{set, set.complement(), true}, 0, 0});
    seen.emplace(pack(nodes.front().config, n), 0);

    auto word_to = [&](std::size_t i) {
        Word w;
        for (; i != 0; i = nodes[i].parent) w.push_back(nodes[i].letter);
        return Word(w.rbegin(), w.rend());
    };

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (accepts(nodes[head].config, rank.rank)) return word_to(head);
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            SaturationConfig next = step(dfa, nodes[head].config, a);
            // Undefinedness on S never recovers. For nonempty S this also
            // covers an empty inside image.
            if (!next.alive) continue;
            StateSet key = pack(next, n);
            if (seen.contains(key)) continue;
            if (nodes.size() >= limit)
                throw ResourceLimitError("saturation search exceeded budget of " +
                                         std::to_string(budget.max_configurations) + " configurations");
            seen.emplace(std::move(key), nodes.size());
            nodes.push_back({std::move(next), head, a});
        }
    }
    return std::nullopt;
}

} // namespace pdfa
