#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pdfa/automaton.hpp"

namespace pdfa {

/// Cap on the number of configurations a subset or product search may visit.
struct SearchBudget {
    static constexpr std::size_t default_limit = std::size_t{1} << 20;
    std::size_t max_configurations = default_limit;
};

struct RankResult {
    std::size_t rank = 0;
    Word witness;
    /// Configurations visited by the search that produced this result.
    std::size_t explored = 0;

    std::size_t word_length() const { return witness.size(); }
};

/// Minimum nonzero rank of the whole state set, with a shortest witness.
///
/// Breadth-first search over the nonempty subsets reachable from Q in the
/// power automaton; letters are tried in index order so the witness is the
/// shortest word of minimum rank that comes first in that order.
/// Throws InputError for n = 0 and ResourceLimitError when more than
/// budget.max_configurations subsets would be visited.
RankResult exact_rank(const PartialDfa& dfa, SearchBudget budget = {});

/// Shortest synchronizing (rank 1) word, if any.
std::optional<Word> find_synchronizing_word(const PartialDfa& dfa, SearchBudget budget = {});
bool is_synchronizing(const PartialDfa& dfa, SearchBudget budget = {});

/// Polynomial minimum-rank word for strongly connected automata.
///
/// Starting from S = Q, repeatedly picks a pair of S that can be collapsed in
/// the pair automaton (merged, or exactly one survivor), preferring the
/// shortest collapsing word and then the smallest indices, and applies that
/// word to all of S. Stops when no pair of S collapses. Throws InputError if
/// dfa is not strongly connected.
RankResult min_rank_word_sc(const PartialDfa& dfa);

/// Same pair-collapsing loop started from an arbitrary set. Returns the word
/// appended to reach a set in which no pair collapses; the result set is
/// image(start, word). Requires no strong connectivity.
Word collapse_pairs(const PartialDfa& dfa, const StateSet& start);

/// (n-1)((n-r)(n+2)-2)/2, the length bound for a shortest word of minimum
/// nonzero rank r in an n-state strongly connected partial automaton. The
/// formula is negative for r = n; the result is clamped to 0 there (the empty
/// word already has rank n). Throws InputError unless 1 <= r <= n.
std::uint64_t rank_word_length_bound(std::uint64_t n, std::uint64_t r);

} // namespace pdfa
