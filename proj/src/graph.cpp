#include "pdfa/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

namespace pdfa {

std::vector<std::size_t> SccDecomposition::source_components() const {
    std::vector<bool> has_incoming(components.size(), false);
    for (const auto& succ : successors)
        for (std::size_t c : succ) has_incoming[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < components.size(); ++c)
        if (!has_incoming[c]) out.push_back(c);
    return out;
}

SccDecomposition scc(const PartialDfa& dfa) {
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.letter_count();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

    // Iterative Tarjan.
    std::vector<std::size_t> index(n, unvisited), low(n, 0), raw_component(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::pair<State, Letter>> call;
    std::size_t counter = 0, raw_count = 0;

    for (State root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, next_letter] = call.back();
            if (next_letter < k) {
                State w = dfa.target(v, next_letter++);
                if (w == kUndefined) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            State done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw_component[w] = raw_count;
                } while (w != done);
                ++raw_count;
            }
        }
    }

    // Renumber components by smallest member.
    std::vector<std::size_t> renumber(raw_count, unvisited);
    SccDecomposition out;
    out.component_of.resize(n);
    for (State s = 0; s < n; ++s) {
        std::size_t& id = renumber[raw_component[s]];
        if (id == unvisited) {
            id = out.components.size();
            out.components.emplace_back();
        }
        out.component_of[s] = id;
        out.components[id].push_back(s);
    }
    out.successors.resize(out.components.size());
    for (State s = 0; s < n; ++s) {
        for (Letter a = 0; a < k; ++a) {
            State t = dfa.target(s, a);
            if (t == kUndefined) continue;
            std::size_t from = out.component_of[s], to = out.component_of[t];
            if (from != to) out.successors[from].push_back(to);
        }
    }
    for (auto& succ : out.successors) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    return out;
}

bool is_strongly_connected(const PartialDfa& dfa) {
    if (dfa.state_count() == 0) return false;
    StateSet root(dfa.state_count(), {0});
    return reachable_from(dfa, root).size() == dfa.state_count() &&
           coreachable_to(dfa, root).size() == dfa.state_count();
}

StateSet reachable_from(const PartialDfa& dfa, const StateSet& from) {
    validate_set(dfa, from);
    StateSet seen = from;
    std::vector<State> todo = from.members();
    while (!todo.empty()) {
        State s = todo.back();
        todo.pop_back();
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            State t = dfa.target(s, a);
            if (t != kUndefined && !seen.contains(t)) {
                seen.insert(t);
                todo.push_back(t);
            }
        }
    }
    return seen;
}

StateSet coreachable_to(const PartialDfa& dfa, const StateSet& to) {
    validate_set(dfa, to);
    const std::size_t n = dfa.state_count();
    std::vector<std::vector<State>> preds(n);
    for (State s = 0; s < n; ++s)
        for (Letter a = 0; a < dfa.letter_count(); ++a)
            if (State t = dfa.target(s, a); t != kUndefined) preds[t].push_back(s);
    StateSet seen = to;
    std::vector<State> todo = to.members();
    while (!todo.empty()) {
        State t = todo.back();
        todo.pop_back();
        for (State s : preds[t]) {
            if (!seen.contains(s)) {
                seen.insert(s);
                todo.push_back(s);
            }
        }
    }
    return seen;
}

TrimResult trim(const Acceptor& acc) {
    const PartialDfa& dfa = acc.dfa();
    TrimResult out{Acceptor::empty(dfa.alphabet()), std::vector<std::optional<State>>(dfa.state_count())};
    if (acc.is_empty()) return out;

    StateSet useful = reachable_from(dfa, StateSet(dfa.state_count(), {acc.initial()})) &
                      coreachable_to(dfa, acc.accepting());
    if (!useful.contains(acc.initial())) return out;

    State next = 0;
    for (State s : useful) out.index_map[s] = next++;
    DfaBuilder builder(useful.size(), dfa.alphabet());
    StateSet accepting(useful.size());
    for (State s : useful) {
        State ns = *out.index_map[s];
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            State t = dfa.target(s, a);
            if (t != kUndefined && useful.contains(t)) builder.set(ns, a, *out.index_map[t]);
        }
        if (acc.accepting().contains(s)) accepting.insert(ns);
    }
    out.acceptor = Acceptor(builder.build(), *out.index_map[acc.initial()], std::move(accepting));
    return out;
}

PairAutomaton::PairAutomaton(const PartialDfa& dfa) : n_(dfa.state_count()), letters_(dfa.letter_count()) {
    const std::size_t nodes = node_count();
    next_.assign(nodes * letters_, dead());
    for (Node node = 0; node + 1 < nodes; ++node) {
        PairNode d = describe(node);
        for (Letter a = 0; a < letters_; ++a) {
            State p = dfa.target(d.first, a);
            State q = d.kind == PairNode::Kind::pair ? dfa.target(d.second, a) : p;
            Node to;
            if (p == kUndefined && q == kUndefined) to = dead();
            else if (p == kUndefined) to = singleton(q);
            else if (q == kUndefined || p == q) to = singleton(p);
            else to = pair(p, q);
            next_[node * letters_ + a] = to;
        }
    }

    // Multi-source backward BFS from all singletons.
    std::vector<std::vector<Node>> preds(nodes);
    for (Node node = 0; node < nodes; ++node)
        for (Letter a = 0; a < letters_; ++a) preds[next_[node * letters_ + a]].push_back(node);
    dist_.assign(nodes, std::nullopt);
    std::deque<Node> queue;
    for (State p = 0; p < n_; ++p) {
        dist_[p] = 0;
        queue.push_back(p);
    }
    while (!queue.empty()) {
        Node node = queue.front();
        queue.pop_front();
        for (Node pred : preds[node]) {
            if (!dist_[pred]) {
                dist_[pred] = *dist_[node] + 1;
                queue.push_back(pred);
            }
        }
    }
}

PairAutomaton::Node PairAutomaton::pair(State p, State q) const {
    if (p > q) std::swap(p, q);
    if (q >= n_ || p == q) throw InputError("pair node needs two distinct valid states");
    std::size_t offset = static_cast<std::size_t>(p) * (n_ - 1) - static_cast<std::size_t>(p) * (p - (p > 0 ? 1 : 0)) / 2;
    return n_ + offset + (q - p - 1);
}

PairNode PairAutomaton::describe(Node node) const {
    if (node >= node_count()) throw InputError("pair automaton node out of range");
    if (node == dead()) return {};
    if (node < n_) return {PairNode::Kind::singleton, static_cast<State>(node), static_cast<State>(node)};
    std::size_t rest = node - n_;
    State p = 0;
    while (rest >= n_ - 1 - p) {
        rest -= n_ - 1 - p;
        ++p;
    }
    return {PairNode::Kind::pair, p, static_cast<State>(p + 1 + rest)};
}

std::optional<Word> PairAutomaton::collapsing_word(State p, State q) const {
    Node node = p == q ? singleton(p) : pair(p, q);
    if (!dist_[node]) return std::nullopt;
    Word w;
    while (*dist_[node] > 0) {
        for (Letter a = 0; a < letters_; ++a) {
            Node to = successor(node, a);
            if (dist_[to] && *dist_[to] + 1 == *dist_[node]) {
                w.push_back(a);
                node = to;
                break;
            }
        }
    }
    return w;
}

} // namespace pdfa
