#pragma once

#include <optional>

#include "pdfa/automaton.hpp"
#include "pdfa/rank.hpp"

namespace pdfa {

/// Search node for saturation: images of S and of Q \ S under the word read
/// so far, plus whether every state of S is still defined.
struct SaturationConfig {
    StateSet inside;
    StateSet outside;
    bool alive = true;

    bool operator==(const SaturationConfig&) const = default;
};

/// S is saturated by w when every state of S has a defined image under w and
/// no state outside S is mapped into image(S, w).
bool is_saturated_by(const PartialDfa& dfa, const StateSet& set, std::span<const Letter> w);

/// Successor of a configuration under one letter.
SaturationConfig step(const PartialDfa& dfa, const SaturationConfig& config, Letter a);

/// Shortest word of minimum nonzero rank (with respect to the whole automaton)
/// that saturates `set`, or std::nullopt if none exists.
///
/// Runs exact_rank first, then a breadth-first search over reachable
/// SaturationConfigs; both searches draw from the same budget.
std::optional<Word> find_saturating_min_rank_word(const PartialDfa& dfa, const StateSet& set,
                                                  SearchBudget budget = {});

} // namespace pdfa
