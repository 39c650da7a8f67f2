#include "pdfa/birecurrence.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "pdfa/graph.hpp"
#include "pdfa/saturation.hpp"

namespace pdfa {

namespace {

constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);

} // namespace

Acceptor minimize(const Acceptor& acc) {
    Acceptor trimmed = trim(acc).acceptor;
    if (trimmed.is_empty()) return trimmed;
    const PartialDfa& dfa = trimmed.dfa();
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.letter_count();

    std::vector<std::size_t> cls(n);
    for (State s = 0; s < n; ++s) cls[s] = trimmed.accepting().contains(s) ? 1 : 0;
    std::size_t class_count = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (State s = 0; s < n; ++s) {
            std::vector<std::size_t> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[s]);
            for (Letter a = 0; a < k; ++a) {
                State t = dfa.target(s, a);
                sig.push_back(t == kUndefined ? kNoClass : cls[t]);
            }
            next[s] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        cls = std::move(next);
        if (ids.size() == class_count) break;
        class_count = ids.size();
    }

    // Breadth-first renumbering from the initial class.
    std::vector<State> representative(class_count, kUndefined);
    for (State s = 0; s < n; ++s)
        if (representative[cls[s]] == kUndefined) representative[cls[s]] = s;
    std::vector<State> order_of(class_count, kUndefined);
    std::vector<std::size_t> order;
    order_of[cls[trimmed.initial()]] = 0;
    order.push_back(cls[trimmed.initial()]);
    for (std::size_t head = 0; head < order.size(); ++head) {
        State rep = representative[order[head]];
        for (Letter a = 0; a < k; ++a) {
            State t = dfa.target(rep, a);
            if (t == kUndefined || order_of[cls[t]] != kUndefined) continue;
            order_of[cls[t]] = static_cast<State>(order.size());
            order.push_back(cls[t]);
        }
    }

    DfaBuilder builder(class_count, dfa.alphabet());
    StateSet accepting(class_count);
    for (std::size_t i = 0; i < order.size(); ++i) {
        State rep = representative[order[i]];
        for (Letter a = 0; a < k; ++a)
            if (State t = dfa.target(rep, a); t != kUndefined) builder.set(static_cast<State>(i), a, order_of[cls[t]]);
        if (trimmed.accepting().contains(rep)) accepting.insert(static_cast<State>(i));
    }
    return Acceptor(builder.build(), 0, std::move(accepting));
}

SubsetAutomaton determinize_reversal(const Acceptor& acc, SearchBudget budget) {
    const PartialDfa& dfa = acc.dfa();
    SubsetAutomaton out{Acceptor::empty(dfa.alphabet()), {}};
    if (acc.is_empty() || acc.accepting().empty()) return out;
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.letter_count();

    // preimage[a][t] = { p : delta(p, a) = t }
    std::vector<std::vector<std::vector<State>>> preimage(k, std::vector<std::vector<State>>(n));
    for (State p = 0; p < n; ++p)
        for (Letter a = 0; a < k; ++a)
            if (State t = dfa.target(p, a); t != kUndefined) preimage[a][t].push_back(p);

    std::unordered_map<StateSet, State, StateSetHash> index;
    std::vector<std::vector<State>> rows;
    out.subsets.push_back(acc.accepting());
    index.emplace(acc.accepting(), 0);
    for (std::size_t head = 0; head < out.subsets.size(); ++head) {
        std::vector<State> row(k, kUndefined);
        for (Letter a = 0; a < k; ++a) {
            StateSet next(n);
            for (State t : out.subsets[head])
                for (State p : preimage[a][t]) next.insert(p);
            if (next.empty()) continue;
            auto [it, inserted] = index.emplace(next, static_cast<State>(out.subsets.size()));
            if (inserted) {
                if (out.subsets.size() >= budget.max_configurations)
                    throw ResourceLimitError("subset construction exceeded budget of " +
                                             std::to_string(budget.max_configurations) + " subsets");
                out.subsets.push_back(std::move(next));
            }
            row[a] = it->second;
        }
        rows.push_back(std::move(row));
    }

    const std::size_t m = out.subsets.size();
    std::vector<State> table;
    table.reserve(m * k);
    for (const auto& row : rows) table.insert(table.end(), row.begin(), row.end());
    StateSet accepting(m);
    for (std::size_t i = 0; i < m; ++i)
        if (out.subsets[i].contains(acc.initial())) accepting.insert(static_cast<State>(i));
    out.acceptor = Acceptor(PartialDfa(m, dfa.alphabet(), std::move(table)), 0, std::move(accepting));
    return out;
}

bool is_birecurrent_direct(const Acceptor& acc, SearchBudget budget) {
    Acceptor minimal = minimize(acc);
    if (minimal.is_empty() || !is_strongly_connected(minimal.dfa())) return false;
    SubsetAutomaton reversed = determinize_reversal(minimal, budget);
    return !reversed.empty() && is_strongly_connected(reversed.acceptor.dfa());
}

bool is_birecurrent_characterization(const Acceptor& acc, SearchBudget budget) {
    Acceptor minimal = minimize(acc);
    if (minimal.is_empty() || !is_strongly_connected(minimal.dfa())) return false;
    return find_saturating_min_rank_word(minimal.dfa(), minimal.accepting(), budget).has_value();
}

bool is_birecurrent(const Acceptor& acc, SearchBudget budget) {
    bool direct = is_birecurrent_direct(acc, budget);
    bool characterization = is_birecurrent_characterization(acc, budget);
    if (direct != characterization)
        throw InconsistencyError(std::string("birecurrence procedures disagree: direct says ") +
                                 (direct ? "yes" : "no") + ", characterization says " +
                                 (characterization ? "yes" : "no"));
    return direct;
}

} // namespace pdfa
