#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/rank.hpp"

namespace pdfa {

/// Complete acceptors over one shared alphabet: an instance of the finite
/// automata intersection problem.
class IntersectionInstance {
public:
    /// Throws InputError if `machines` is empty, the alphabets differ, or some
    /// machine is incomplete.
    explicit IntersectionInstance(std::vector<Acceptor> machines);

    const std::vector<Acceptor>& machines() const { return machines_; }
    const std::vector<std::string>& alphabet() const { return machines_.front().dfa().alphabet(); }
    std::size_t size() const { return machines_.size(); }
    std::size_t total_states() const;

private:
    std::vector<Acceptor> machines_;
};

/// Bookkeeping for a constructed gadget: where the input states and the
/// named special states/letters ended up.
struct GadgetLayout {
    /// machine_states[i][q]: gadget index of state q of machine i.
    std::vector<std::vector<State>> machine_states;
    /// Same for the barred copy (complete gadget only).
    std::vector<std::vector<State>> barred_machine_states;
    /// Y, N, Y_bar, E, E_bar, ...
    std::map<std::string, State> special_states;
    /// r, z, l1..lm, 0, 1, ...
    std::map<std::string, Letter> special_letters;
    /// Source state q -> gadget state (strongly connect: identity; binarize: (q, x_1)).
    std::vector<State> embedding;
    /// Binarization: source letter indices in x_1..x_n order.
    std::vector<Letter> letter_order;
    /// Letters l1..lm added to strongly connect, and their targets t1..tm.
    std::vector<Letter> connector_letters;
    std::vector<State> connector_targets;
};

struct Gadget {
    PartialDfa dfa;
    GadgetLayout layout;
};

struct CompleteGadget {
    PartialDfa dfa;
    GadgetLayout layout;
    /// Q together with E_bar: the set whose saturation encodes the instance.
    StateSet target;
};

/// Shortest word accepted by every machine (product breadth-first search),
/// or std::nullopt. Throws ResourceLimitError when more than
/// budget.max_configurations product states are visited.
std::optional<Word> has_common_word(const IntersectionInstance& inst, SearchBudget budget = {});

/// Synchronization gadget. A one-state machine accepting everything is
/// appended to the instance; then every machine's states, plus Y and N, over
/// the alphabet Sigma + {r, z}: r resets each machine to its initial state, z
/// sends accepting states to Y and the rest to N, and only z is undefined
/// (on Y and N). Synchronizing iff the instance has a common word.
Gadget build_sync_gadget(const IntersectionInstance& inst);

/// Saturation gadget: every machine's states plus a sink Y over Sigma + {r, z};
/// z sends accepting states and Y to Y and is undefined elsewhere. Rank 1; Q is
/// saturated by a rank-1 word iff the instance has a common word.
/// Throws InputError if some machine reaches no accepting state.
Gadget build_saturation_gadget(const IntersectionInstance& inst);

/// Adds letters l1..lm mapping `hub` to the lowest-indexed state not yet
/// reachable from it (undefined elsewhere) until the automaton is strongly
/// connected. Throws InputError unless every state reaches `hub`.
Gadget strongly_connect_gadget(const PartialDfa& dfa, State hub);

/// Binary encoding over {0, 1} with states Q x Sigma. Letters are ordered
/// x_1..x_n with the other letters in declaration order and `last_letter` as
/// x_n; 0 advances the selected letter (x_n stays), 1 applies it and resets
/// the selection to x_1. Throws InputError for an unknown letter.
Gadget binarize(const PartialDfa& dfa, Letter last_letter);
Gadget binarize(const PartialDfa& dfa, const std::string& last_letter);

/// Appends a fresh letter acting as the identity and binarizes with it last.
Gadget binarize_with_selfloop(const PartialDfa& dfa);

/// Complete, strongly connected, rank-2 gadget built from two copies of the
/// saturation gadget plus absorbing states E, E_bar. The instance has a common
/// word iff `target` = Q + {E_bar} is saturated by a word of rank 2.
/// Throws InputError unless every machine has all states reachable, an
/// accepting state reachable from every state, a nonempty language and a
/// language other than Sigma*.
CompleteGadget build_complete_gadget(const IntersectionInstance& inst);

} // namespace pdfa
