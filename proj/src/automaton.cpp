#include "pdfa/automaton.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace pdfa {

namespace {

void validate_alphabet(const std::vector<std::string>& alphabet) {
    std::unordered_set<std::string> seen;
    for (const auto& name : alphabet) {
        if (name.empty()) throw InputError("letter names must be nonempty");
        if (!seen.insert(name).second) throw InputError("duplicate letter name '" + name + "'");
    }
}

} // namespace

PartialDfa::PartialDfa(std::size_t state_count, std::vector<std::string> alphabet)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      table_(state_count_ * alphabet_.size(), kUndefined) {
    validate_alphabet(alphabet_);
}

PartialDfa::PartialDfa(std::size_t state_count, std::vector<std::string> alphabet, std::vector<State> table)
    : state_count_(state_count), alphabet_(std::move(alphabet)), table_(std::move(table)) {
    validate_alphabet(alphabet_);
    if (table_.size() != state_count_ * alphabet_.size())
        throw InputError("transition table has " + std::to_string(table_.size()) + " entries, expected " +
                         std::to_string(state_count_ * alphabet_.size()));
    for (State t : table_)
        if (t != kUndefined && t >= state_count_)
            throw InputError("transition target " + std::to_string(t) + " out of range");
}

const std::string& PartialDfa::letter_name(Letter a) const {
    if (a >= alphabet_.size()) throw InputError("letter index " + std::to_string(a) + " out of range");
    return alphabet_[a];
}

std::optional<Letter> PartialDfa::find_letter(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) return std::nullopt;
    return static_cast<Letter>(it - alphabet_.begin());
}

PartialDfa PartialDfa::with_transition(State from, Letter a, State to) const {
    if (from >= state_count_ || a >= alphabet_.size() || (to != kUndefined && to >= state_count_))
        throw InputError("transition index out of range");
    PartialDfa copy = *this;
    copy.table_[static_cast<std::size_t>(from) * alphabet_.size() + a] = to;
    return copy;
}

DfaBuilder::DfaBuilder(std::size_t state_count, std::vector<std::string> alphabet)
    : state_count_(state_count),
      alphabet_(std::move(alphabet)),
      table_(state_count_ * alphabet_.size(), kUndefined) {}

DfaBuilder& DfaBuilder::set(State from, Letter a, State to) {
    if (from >= state_count_) throw InputError("state " + std::to_string(from) + " out of range");
    if (a >= alphabet_.size()) throw InputError("letter index " + std::to_string(a) + " out of range");
    table_[static_cast<std::size_t>(from) * alphabet_.size() + a] = to;
    return *this;
}

DfaBuilder& DfaBuilder::set(State from, std::string_view letter, State to) {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end()) throw InputError("unknown letter '" + std::string(letter) + "'");
    return set(from, static_cast<Letter>(it - alphabet_.begin()), to);
}

PartialDfa DfaBuilder::build() const { return PartialDfa(state_count_, alphabet_, table_); }

Acceptor::Acceptor(PartialDfa dfa, State initial, StateSet accepting)
    : dfa_(std::move(dfa)), initial_(initial), accepting_(std::move(accepting)) {
    if (dfa_.state_count() == 0) throw InputError("an acceptor needs at least one state; use Acceptor::empty");
    if (initial_ >= dfa_.state_count()) throw InputError("initial state out of range");
    if (accepting_.universe() != dfa_.state_count())
        throw InputError("accepting set universe does not match state count");
}

Acceptor Acceptor::empty(std::vector<std::string> alphabet) {
    Acceptor acc;
    acc.dfa_ = PartialDfa(0, std::move(alphabet));
    acc.accepting_ = StateSet(0);
    return acc;
}

bool Acceptor::accepts(std::span<const Letter> w) const {
    if (is_empty()) return false;
    auto end = apply_word(dfa_, initial_, w);
    return end && accepting_.contains(*end);
}

std::optional<State> apply_letter(const PartialDfa& dfa, State s, Letter a) {
    if (s >= dfa.state_count()) throw InputError("state " + std::to_string(s) + " out of range");
    if (a >= dfa.letter_count()) throw InputError("letter index " + std::to_string(a) + " out of range");
    State t = dfa.target(s, a);
    if (t == kUndefined) return std::nullopt;
    return t;
}

std::optional<State> apply_word(const PartialDfa& dfa, State s, std::span<const Letter> w) {
    if (s >= dfa.state_count()) throw InputError("state " + std::to_string(s) + " out of range");
    std::optional<State> cur = s;
    for (Letter a : w) {
        cur = apply_letter(dfa, *cur, a);
        if (!cur) return std::nullopt;
    }
    return cur;
}

void validate_word(const PartialDfa& dfa, std::span<const Letter> w) {
    for (Letter a : w)
        if (a >= dfa.letter_count()) throw InputError("letter index " + std::to_string(a) + " out of range");
}

void validate_set(const PartialDfa& dfa, const StateSet& set) {
    if (set.universe() != dfa.state_count())
        throw InputError("state set universe " + std::to_string(set.universe()) + " does not match " +
                         std::to_string(dfa.state_count()) + " states");
}

StateSet image(const PartialDfa& dfa, const StateSet& set, Letter a) {
    validate_set(dfa, set);
    if (a >= dfa.letter_count()) throw InputError("letter index " + std::to_string(a) + " out of range");
    StateSet out(dfa.state_count());
    for (State s : set) {
        State t = dfa.target(s, a);
        if (t != kUndefined) out.insert(t);
    }
    return out;
}

StateSet image(const PartialDfa& dfa, const StateSet& set, std::span<const Letter> w) {
    validate_set(dfa, set);
    validate_word(dfa, w);
    StateSet cur = set;
    for (Letter a : w) {
        if (cur.empty()) break;
        cur = image(dfa, cur, a);
    }
    return cur;
}

std::size_t rank_of_word(const PartialDfa& dfa, const StateSet& set, std::span<const Letter> w) {
    return image(dfa, set, w).size();
}

bool is_complete(const PartialDfa& dfa) {
    return std::none_of(dfa.table().begin(), dfa.table().end(), [](State t) { return t == kUndefined; });
}

bool is_permutation(const PartialDfa& dfa) {
    if (!is_complete(dfa)) return false;
    std::vector<bool> hit(dfa.state_count());
    for (Letter a = 0; a < dfa.letter_count(); ++a) {
        std::fill(hit.begin(), hit.end(), false);
        for (State s = 0; s < dfa.state_count(); ++s) {
            State t = dfa.target(s, a);
            if (hit[t]) return false;
            hit[t] = true;
        }
    }
    return true;
}

std::string format_word(const PartialDfa& dfa, std::span<const Letter> w) {
    if (w.empty()) return "ε";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += dfa.letter_name(w[i]);
    }
    return out;
}

Word parse_word(const PartialDfa& dfa, std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "ε") continue;
        auto a = dfa.find_letter(token);
        if (!a) throw InputError("unknown letter '" + token + "'");
        w.push_back(*a);
    }
    return w;
}

std::string fresh_letter_name(const std::vector<std::string>& alphabet, std::string base) {
    while (std::find(alphabet.begin(), alphabet.end(), base) != alphabet.end()) base += '\'';
    return base;
}

} // namespace pdfa
