#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdfa/errors.hpp"
#include "pdfa/state_set.hpp"

namespace pdfa {

using Letter = std::uint32_t;

/// Finite sequence of letter indices. The empty word acts as the identity.
using Word = std::vector<Letter>;

inline constexpr State kUndefined = std::numeric_limits<State>::max();

/// Partial deterministic automaton (Q, Sigma, delta) without initial or final
/// states. States are 0..n-1, letters index into alphabet() in declaration
/// order. Undefined transitions are stored as kUndefined.
class PartialDfa {
public:
    PartialDfa() = default;

    /// All transitions undefined.
    PartialDfa(std::size_t state_count, std::vector<std::string> alphabet);

    /// `table` is row-major by state: table[s * |alphabet| + a].
    PartialDfa(std::size_t state_count, std::vector<std::string> alphabet, std::vector<State> table);

    std::size_t state_count() const { return state_count_; }
    std::size_t letter_count() const { return alphabet_.size(); }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::string& letter_name(Letter a) const;
    std::optional<Letter> find_letter(std::string_view name) const;

    /// Raw table lookup, kUndefined when undefined. No bounds checks.
    State target(State s, Letter a) const { return table_[static_cast<std::size_t>(s) * alphabet_.size() + a]; }
    bool defined(State s, Letter a) const { return target(s, a) != kUndefined; }

    std::span<const State> table() const { return table_; }

    /// Copy with one transition replaced; `to` may be kUndefined.
    PartialDfa with_transition(State from, Letter a, State to) const;

    StateSet all_states() const { return StateSet::full(state_count_); }

    bool operator==(const PartialDfa&) const = default;

private:
    std::size_t state_count_ = 0;
    std::vector<std::string> alphabet_;
    std::vector<State> table_;
};

/// Incremental construction of a PartialDfa; build() validates.
class DfaBuilder {
public:
    DfaBuilder(std::size_t state_count, std::vector<std::string> alphabet);

    DfaBuilder& set(State from, Letter a, State to);
    DfaBuilder& set(State from, std::string_view letter, State to);
    PartialDfa build() const;

    std::size_t state_count() const { return state_count_; }

private:
    std::size_t state_count_;
    std::vector<std::string> alphabet_;
    std::vector<State> table_;
};

/// PartialDfa with an initial state and a set of accepting states.
///
/// The canonical empty acceptor has zero states; it is what trimming and
/// minimisation return for the empty language.
class Acceptor {
public:
    Acceptor() = default;
    Acceptor(PartialDfa dfa, State initial, StateSet accepting);

    static Acceptor empty(std::vector<std::string> alphabet);

    const PartialDfa& dfa() const { return dfa_; }
    State initial() const { return initial_; }
    const StateSet& accepting() const { return accepting_; }
    bool is_empty() const { return dfa_.state_count() == 0; }

    bool accepts(std::span<const Letter> w) const;

    bool operator==(const Acceptor&) const = default;

private:
    PartialDfa dfa_;
    State initial_ = 0;
    StateSet accepting_;
};

/// delta(s, a), or std::nullopt when undefined. Throws InputError on bad indices.
std::optional<State> apply_letter(const PartialDfa& dfa, State s, Letter a);

/// delta(s, w) letter by letter; std::nullopt once undefined.
std::optional<State> apply_word(const PartialDfa& dfa, State s, std::span<const Letter> w);

StateSet image(const PartialDfa& dfa, const StateSet& set, Letter a);
StateSet image(const PartialDfa& dfa, const StateSet& set, std::span<const Letter> w);

std::size_t rank_of_word(const PartialDfa& dfa, const StateSet& set, std::span<const Letter> w);

bool is_complete(const PartialDfa& dfa);
bool is_permutation(const PartialDfa& dfa);

/// Throws InputError unless every letter of w indexes dfa's alphabet.
void validate_word(const PartialDfa& dfa, std::span<const Letter> w);
void validate_set(const PartialDfa& dfa, const StateSet& set);

/// Letter names separated by spaces; "ε" for the empty word.
std::string format_word(const PartialDfa& dfa, std::span<const Letter> w);

/// Inverse of format_word for names in dfa's alphabet. Accepts "" or "ε" as the empty word.
Word parse_word(const PartialDfa& dfa, std::string_view text);

/// `base` if unused in `alphabet`, otherwise base followed by enough primes.
std::string fresh_letter_name(const std::vector<std::string>& alphabet, std::string base);

} // namespace pdfa
