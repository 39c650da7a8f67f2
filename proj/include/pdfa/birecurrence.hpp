#pragma once

#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/rank.hpp"

namespace pdfa {

/// Determinization of the reversal of an acceptor, restricted to reachable
/// nonempty subsets. Node i of `acceptor` corresponds to subsets[i]; the
/// initial node is the source's accepting set and accepting nodes are the
/// subsets containing the source's initial state. Transitions into the empty
/// subset are left undefined.
struct SubsetAutomaton {
    Acceptor acceptor;
    std::vector<StateSet> subsets;

    bool empty() const { return subsets.empty(); }
};

/// Minimal trim partial acceptor of the same language, states numbered in
/// breadth-first order from the initial state (letters in index order). An
/// undefined transition is its own outcome during refinement; no dead state
/// is added. The empty language gives Acceptor::empty.
Acceptor minimize(const Acceptor& acc);

/// Throws ResourceLimitError if more than budget.max_configurations subsets appear.
SubsetAutomaton determinize_reversal(const Acceptor& acc, SearchBudget budget = {});

/// The minimal automaton and the minimal automaton of the reversal are both
/// strongly connected. False for the empty language.
bool is_birecurrent_direct(const Acceptor& acc, SearchBudget budget = {});

/// The minimal automaton is strongly connected and its accepting set is
/// saturated by some word of minimum nonzero rank. False for the empty language.
bool is_birecurrent_characterization(const Acceptor& acc, SearchBudget budget = {});

/// Runs both procedures; throws InconsistencyError if they disagree.
bool is_birecurrent(const Acceptor& acc, SearchBudget budget = {});

} // namespace pdfa
