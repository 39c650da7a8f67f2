#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pdfa {

using State = std::uint32_t;

/// Subset of the state universe [0, n), stored as a packed bitset.
///
/// Two sets compare equal only if they have the same universe and the same
/// members. Iteration visits members in increasing index order.
class StateSet {
public:
    using block_type = std::uint64_t;
    static constexpr std::size_t block_bits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = State;
        using difference_type = std::ptrdiff_t;
        using pointer = const State*;
        using reference = State;

        const_iterator() = default;

        State operator*() const { return static_cast<State>(pos_); }

        const_iterator& operator++() {
            pos_ = owner_->next_member(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        friend class StateSet;
        const_iterator(const StateSet* owner, std::size_t pos) : owner_(owner), pos_(pos) {}

        const StateSet* owner_ = nullptr;
        std::size_t pos_ = 0;
    };

    StateSet() = default;
    explicit StateSet(std::size_t universe)
        : universe_(universe), blocks_((universe + block_bits - 1) / block_bits, 0) {}
    StateSet(std::size_t universe, std::initializer_list<State> members) : StateSet(universe) {
        for (State s : members) insert(s);
    }

    static StateSet full(std::size_t universe) {
        StateSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<State>(i));
        return s;
    }

    template <typename Range>
    static StateSet from_range(std::size_t universe, const Range& members) {
        StateSet s(universe);
        for (auto m : members) s.insert(static_cast<State>(m));
        return s;
    }

    std::size_t universe() const { return universe_; }

    /// Precondition: s < universe().
    void insert(State s) { blocks_[s / block_bits] |= bit(s); }
    void erase(State s) { blocks_[s / block_bits] &= ~bit(s); }
    bool contains(State s) const {
        return s < universe_ && (blocks_[s / block_bits] & bit(s)) != 0;
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (block_type b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
        return total;
    }
    bool empty() const {
        for (block_type b : blocks_)
            if (b != 0) return false;
        return true;
    }
    void clear() { std::fill(blocks_.begin(), blocks_.end(), 0); }

    bool intersects(const StateSet& other) const {
        for (std::size_t i = 0; i < blocks_.size() && i < other.blocks_.size(); ++i)
            if ((blocks_[i] & other.blocks_[i]) != 0) return true;
        return false;
    }
    bool is_subset_of(const StateSet& other) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            block_type theirs = i < other.blocks_.size() ? other.blocks_[i] : 0;
            if ((blocks_[i] & ~theirs) != 0) return false;
        }
        return true;
    }

    StateSet& operator|=(const StateSet& other) {
        for (std::size_t i = 0; i < blocks_.size() && i < other.blocks_.size(); ++i)
            blocks_[i] |= other.blocks_[i];
        return *this;
    }
    StateSet& operator&=(const StateSet& other) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= i < other.blocks_.size() ? other.blocks_[i] : 0;
        return *this;
    }
    StateSet& operator-=(const StateSet& other) {
        for (std::size_t i = 0; i < blocks_.size() && i < other.blocks_.size(); ++i)
            blocks_[i] &= ~other.blocks_[i];
        return *this;
    }

    /// Complement with respect to the universe.
    StateSet complement() const {
        StateSet out = full(universe_);
        out -= *this;
        return out;
    }

    const_iterator begin() const { return {this, next_member(0)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<State> members() const { return {begin(), end()}; }

    /// Smallest member; precondition: !empty().
    State front() const { return *begin(); }

    const std::vector<block_type>& blocks() const { return blocks_; }

    bool operator==(const StateSet&) const = default;

    /// Lexicographic on (universe, blocks); used for deterministic ordering only.
    bool operator<(const StateSet& other) const {
        if (universe_ != other.universe_) return universe_ < other.universe_;
        return blocks_ < other.blocks_;
    }

private:
    static block_type bit(State s) { return block_type{1} << (s % block_bits); }

    std::size_t next_member(std::size_t from) const {
        while (from < universe_) {
            std::size_t block = from / block_bits;
            block_type word = blocks_[block] >> (from % block_bits);
            if (word != 0) return from + static_cast<std::size_t>(std::countr_zero(word));
            from = (block + 1) * block_bits;
        }
        return universe_;
    }

    std::size_t universe_ = 0;
    std::vector<block_type> blocks_;
};

inline StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
inline StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
inline StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept {
        std::size_t h = std::hash<std::size_t>{}(s.universe());
        for (auto b : s.blocks()) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace pdfa
