#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdfa/automaton.hpp"

namespace pdfa {

/// Strongly connected components of the transition graph (edge s -> delta(s,a)
/// for every defined transition) together with the condensation DAG.
struct SccDecomposition {
    /// Components ordered by their smallest member; members sorted.
    std::vector<std::vector<State>> components;
    std::vector<std::size_t> component_of;
    /// successors[c] lists distinct components c' != c reachable by one edge, sorted.
    std::vector<std::vector<std::size_t>> successors;

    std::size_t size() const { return components.size(); }
    /// Components with no incoming condensation edge.
    std::vector<std::size_t> source_components() const;
};

SccDecomposition scc(const PartialDfa& dfa);

/// True iff every ordered pair of states is connected by a word. False for n = 0.
bool is_strongly_connected(const PartialDfa& dfa);

/// States reachable from `from` (including the sources themselves).
StateSet reachable_from(const PartialDfa& dfa, const StateSet& from);
/// States from which some state of `to` is reachable (including `to`).
StateSet coreachable_to(const PartialDfa& dfa, const StateSet& to);

struct TrimResult {
    Acceptor acceptor;
    /// old index -> new index, std::nullopt for removed states.
    std::vector<std::optional<State>> index_map;
};

/// Restriction to states that are reachable from the initial state and
/// co-reachable to an accepting state. Surviving states keep their relative
/// order. Returns Acceptor::empty when the initial state is not useful.
TrimResult trim(const Acceptor& acc);

/// Node of the power automaton restricted to subsets of size at most two.
struct PairNode {
    enum class Kind { pair, singleton, dead };
    Kind kind = Kind::dead;
    State first = 0;  ///< smaller state for pairs
    State second = 0; ///< larger state for pairs; equals first for singletons

    bool operator==(const PairNode&) const = default;
};

/// Deterministic transition structure over PairNodes.
///
/// Node numbering: singleton {p} is node p; pair {p,q} with p<q follows the
/// singletons in lexicographic order; dead is the last node.
class PairAutomaton {
public:
    using Node = std::size_t;

    explicit PairAutomaton(const PartialDfa& dfa);

    std::size_t state_count() const { return n_; }
    std::size_t letter_count() const { return letters_; }
    std::size_t node_count() const { return n_ + n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2 + 1; }

    Node singleton(State p) const { return p; }
    Node pair(State p, State q) const;
    Node dead() const { return node_count() - 1; }

    PairNode describe(Node node) const;
    bool is_singleton(Node node) const { return node < n_; }

    Node successor(Node node, Letter a) const { return next_[node * letters_ + a]; }

    /// Length of a shortest word leading `node` to a singleton node (0 for
    /// singletons), or std::nullopt if none exists. Dead never gets there.
    std::optional<std::size_t> collapse_distance(Node node) const { return dist_[node]; }
    std::optional<std::size_t> collapse_distance(State p, State q) const {
        return dist_[p == q ? singleton(p) : pair(p, q)];
    }

    /// Shortest word leading {p,q} to a singleton: afterwards the two states
    /// are merged, or exactly one of them is still defined. Picks the smallest
    /// letter index at every step. std::nullopt if the pair never collapses.
    std::optional<Word> collapsing_word(State p, State q) const;

private:
    std::size_t n_;
    std::size_t letters_;
    std::vector<Node> next_;
    std::vector<std::optional<std::size_t>> dist_;
};

} // namespace pdfa
