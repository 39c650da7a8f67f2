#include "pdfa/reductions.hpp"

#include <numeric>
#include <unordered_map>

#include "pdfa/graph.hpp"

namespace pdfa {

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size();
        for (State s : v) h ^= std::hash<State>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::vector<std::size_t> offsets_of(const std::vector<Acceptor>& machines) {
    std::vector<std::size_t> offsets;
    std::size_t next = 0;
    for (const auto& m : machines) {
        offsets.push_back(next);
        next += m.dfa().state_count();
    }
    return offsets;
}

/// Shared part of the synchronization and saturation gadgets: every machine's
/// states laid out consecutively, Sigma acting per machine, r resetting each
/// machine to its initial state.
struct MachineBlock {
    std::vector<std::string> alphabet; // Sigma, r, z
    Letter r;
    Letter z;
    std::size_t total;
    GadgetLayout layout;
};

MachineBlock lay_out(const std::vector<Acceptor>& machines, const std::vector<std::string>& sigma) {
    MachineBlock block;
    block.alphabet = sigma;
    block.r = static_cast<Letter>(block.alphabet.size());
    block.alphabet.push_back(fresh_letter_name(block.alphabet, "r"));
    block.z = static_cast<Letter>(block.alphabet.size());
    block.alphabet.push_back(fresh_letter_name(block.alphabet, "z"));
    auto offsets = offsets_of(machines);
    block.total = 0;
    for (std::size_t i = 0; i < machines.size(); ++i) {
        std::vector<State> map(machines[i].dfa().state_count());
        std::iota(map.begin(), map.end(), static_cast<State>(offsets[i]));
        block.layout.machine_states.push_back(std::move(map));
        block.total += machines[i].dfa().state_count();
    }
    block.layout.special_letters["r"] = block.r;
    block.layout.special_letters["z"] = block.z;
    return block;
}

void wire_machines(DfaBuilder& builder, const MachineBlock& block, const std::vector<Acceptor>& machines,
                   std::size_t sigma_size) {
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& m = machines[i];
        const auto& map = block.layout.machine_states[i];
        for (State q = 0; q < m.dfa().state_count(); ++q) {
            for (Letter a = 0; a < sigma_size; ++a) builder.set(map[q], a, map[m.dfa().target(q, a)]);
            builder.set(map[q], block.r, map[m.initial()]);
        }
    }
}

} // namespace

IntersectionInstance::IntersectionInstance(std::vector<Acceptor> machines) : machines_(std::move(machines)) {
    if (machines_.empty()) throw InputError("an intersection instance needs at least one machine");
    for (std::size_t i = 0; i < machines_.size(); ++i) {
        const auto& m = machines_[i];
        if (m.is_empty()) throw InputError("machine " + std::to_string(i) + " has no states");
        if (m.dfa().alphabet() != machines_.front().dfa().alphabet())
            throw InputError("machine " + std::to_string(i) + " does not share the instance alphabet");
        if (!is_complete(m.dfa())) throw InputError("machine " + std::to_string(i) + " is not complete");
    }
}

std::size_t IntersectionInstance::total_states() const {
    std::size_t total = 0;
    for (const auto& m : machines_) total += m.dfa().state_count();
    return total;
}

std::optional<Word> has_common_word(const IntersectionInstance& inst, SearchBudget budget) {
    const auto& machines = inst.machines();
    const std::size_t k = inst.alphabet().size();

    auto accepted_by_all = [&](const std::vector<State>& tuple) {
        for (std::size_t i = 0; i < machines.size(); ++i)
            if (!machines[i].accepting().contains(tuple[i])) return false;
        return true;
    };

    struct Node {
        std::vector<State> tuple;
        std::size_t parent;
        Letter letter;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<State>, std::size_t, TupleHash> seen;
    std::vector<State> start;
    for (const auto& m : machines) start.push_back(m.initial());
    seen.emplace(start, 0);
    nodes.push_back({std::move(start), 0, 0});

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (accepted_by_all(nodes[head].tuple)) {
            Word w;
            for (std::size_t i = head; i != 0; i = nodes[i].parent) w.push_back(nodes[i].letter);
            return Word(w.rbegin(), w.rend());
        }
        for (Letter a = 0; a < k; ++a) {
            std::vector<State> next(machines.size());
            for (std::size_t i = 0; i < machines.size(); ++i) next[i] = machines[i].dfa().target(nodes[head].tuple[i], a);
            if (seen.contains(next)) continue;
            if (nodes.size() >= budget.max_configurations)
                throw ResourceLimitError("product search exceeded budget of " +
                                         std::to_string(budget.max_configurations) + " states");
            seen.emplace(next, nodes.size());
            nodes.push_back({std::move(next), head, a});
        }
    }
    return std::nullopt;
}

Gadget build_sync_gadget(const IntersectionInstance& inst) {
    const auto& sigma = inst.alphabet();
    std::vector<Acceptor> machines = inst.machines();
    {
        DfaBuilder universal(1, sigma);
        for (Letter a = 0; a < sigma.size(); ++a) universal.set(0, a, 0);
        machines.emplace_back(universal.build(), 0, StateSet(1, {0}));
    }

    MachineBlock block = lay_out(machines, sigma);
    const State yes = static_cast<State>(block.total);
    const State no = yes + 1;
    DfaBuilder builder(block.total + 2, block.alphabet);
    wire_machines(builder, block, machines, sigma.size());
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& map = block.layout.machine_states[i];
        for (State q = 0; q < machines[i].dfa().state_count(); ++q)
            builder.set(map[q], block.z, machines[i].accepting().contains(q) ? yes : no);
    }
    for (State sink : {yes, no}) {
        for (Letter a = 0; a < sigma.size(); ++a) builder.set(sink, a, sink);
        builder.set(sink, block.r, sink);
    }

    GadgetLayout layout = std::move(block.layout);
    layout.special_states["Y"] = yes;
    layout.special_states["N"] = no;
    return {builder.build(), std::move(layout)};
}

Gadget build_saturation_gadget(const IntersectionInstance& inst) {
    const auto& sigma = inst.alphabet();
    const auto& machines = inst.machines();
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& m = machines[i];
        StateSet reach = reachable_from(m.dfa(), StateSet(m.dfa().state_count(), {m.initial()}));
        if (!reach.intersects(m.accepting()))
            throw InputError("machine " + std::to_string(i) + " reaches no accepting state");
    }

    MachineBlock block = lay_out(machines, sigma);
    const State sink = static_cast<State>(block.total);
    DfaBuilder builder(block.total + 1, block.alphabet);
    wire_machines(builder, block, machines, sigma.size());
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& map = block.layout.machine_states[i];
        for (State q : machines[i].accepting()) builder.set(map[q], block.z, sink);
    }
    for (Letter a = 0; a < block.alphabet.size(); ++a) builder.set(sink, a, sink);

    GadgetLayout layout = std::move(block.layout);
    layout.special_states["Y"] = sink;
    return {builder.build(), std::move(layout)};
}

Gadget strongly_connect_gadget(const PartialDfa& dfa, State hub) {
    const std::size_t n = dfa.state_count();
    if (hub >= n) throw InputError("hub state out of range");
    StateSet hub_set(n, {hub});
    if (coreachable_to(dfa, hub_set).size() != n)
        throw InputError("every state must reach the hub state " + std::to_string(hub));

    GadgetLayout layout;
    layout.embedding.resize(n);
    std::iota(layout.embedding.begin(), layout.embedding.end(), State{0});
    layout.special_states["hub"] = hub;

    PartialDfa current = dfa;
    for (;;) {
        StateSet reach = reachable_from(current, hub_set);
        if (reach.size() == n) break;
        State target = reach.complement().front();
        std::vector<std::string> alphabet = current.alphabet();
        const std::string label = "l" + std::to_string(layout.connector_letters.size() + 1);
        alphabet.push_back(fresh_letter_name(alphabet, label));
        const Letter added = static_cast<Letter>(current.letter_count());
        DfaBuilder builder(n, alphabet);
        for (State s = 0; s < n; ++s)
            for (Letter a = 0; a < current.letter_count(); ++a) builder.set(s, a, current.target(s, a));
        builder.set(hub, added, target);
        current = builder.build();
        layout.special_letters[label] = added;
        layout.connector_letters.push_back(added);
        layout.connector_targets.push_back(target);
    }
    return {std::move(current), std::move(layout)};
}

Gadget binarize(const PartialDfa& dfa, Letter last_letter) {
    const std::size_t n = dfa.state_count();
    const std::size_t k = dfa.letter_count();
    if (last_letter >= k) throw InputError("last letter index out of range");

    GadgetLayout layout;
    for (Letter a = 0; a < k; ++a)
        if (a != last_letter) layout.letter_order.push_back(a);
    layout.letter_order.push_back(last_letter);

    auto encode = [k](State q, std::size_t position) { return static_cast<State>(q * k + position); };
    DfaBuilder builder(n * k, {"0", "1"});
    for (State q = 0; q < n; ++q) {
        for (std::size_t i = 0; i < k; ++i) {
            builder.set(encode(q, i), Letter{0}, encode(q, i + 1 < k ? i + 1 : i));
            State t = dfa.target(q, layout.letter_order[i]);
            if (t != kUndefined) builder.set(encode(q, i), Letter{1}, encode(t, 0));
        }
        layout.embedding.push_back(encode(q, 0));
    }
    layout.special_letters["0"] = 0;
    layout.special_letters["1"] = 1;
    return {builder.build(), std::move(layout)};
}

Gadget binarize(const PartialDfa& dfa, const std::string& last_letter) {
    auto a = dfa.find_letter(last_letter);
    if (!a) throw InputError("letter '" + last_letter + "' is not in the alphabet");
    return binarize(dfa, *a);
}

Gadget binarize_with_selfloop(const PartialDfa& dfa) {
    std::vector<std::string> alphabet = dfa.alphabet();
    const Letter loop = static_cast<Letter>(alphabet.size());
    alphabet.push_back(fresh_letter_name(alphabet, "loop"));
    DfaBuilder builder(dfa.state_count(), alphabet);
    for (State s = 0; s < dfa.state_count(); ++s) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) builder.set(s, a, dfa.target(s, a));
        builder.set(s, loop, s);
    }
    return binarize(builder.build(), loop);
}

CompleteGadget build_complete_gadget(const IntersectionInstance& inst) {
    const auto& machines = inst.machines();
    for (std::size_t i = 0; i < machines.size(); ++i) {
        const auto& m = machines[i];
        const std::size_t n = m.dfa().state_count();
        const std::string which = "machine " + std::to_string(i);
        if (reachable_from(m.dfa(), StateSet(n, {m.initial()})).size() != n)
            throw InputError(which + " has states unreachable from its initial state");
        if (coreachable_to(m.dfa(), m.accepting()).size() != n)
            throw InputError(which + " has states that reach no accepting state");
        // With all states reachable, the language is Sigma* exactly when every state accepts.
        if (m.accepting().size() == n) throw InputError(which + " accepts every word");
    }

    Gadget base = build_saturation_gadget(inst);
    const State y = base.layout.special_states.at("Y");
    Gadget connected = strongly_connect_gadget(base.dfa, y);
    const auto& targets = connected.layout.connector_targets;

    const std::size_t q_count = base.dfa.state_count();
    const std::size_t sigma_r = inst.alphabet().size() + 1; // Sigma and r
    const Letter z = base.layout.special_letters.at("z");
    auto bar = [q_count](State q) { return static_cast<State>(q_count + q); };
    const State e = static_cast<State>(2 * q_count);
    const State e_bar = e + 1;

    DfaBuilder builder(2 * q_count + 2, connected.dfa.alphabet());
    for (State q = 0; q < q_count; ++q) {
        for (Letter a = 0; a < sigma_r; ++a) {
            State t = base.dfa.target(q, a);
            builder.set(q, a, t);
            builder.set(bar(q), a, bar(t));
        }
        State t = base.dfa.target(q, z);
        builder.set(q, z, t == kUndefined ? e : t);
        builder.set(bar(q), z, t == kUndefined ? e_bar : bar(t));
    }
    for (Letter a = 0; a <= z; ++a) {
        builder.set(e, a, e);
        builder.set(e_bar, a, e_bar);
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const Letter l = connected.layout.connector_letters[i];
        const State t = targets[i];
        for (State q = 0; q < q_count; ++q) {
            if (q == y) {
                builder.set(q, l, t);
                builder.set(bar(q), l, bar(t));
            } else {
                builder.set(q, l, bar(t));
                builder.set(bar(q), l, t);
            }
        }
        builder.set(e, l, bar(t));
        builder.set(e_bar, l, t);
    }

    CompleteGadget out{builder.build(), std::move(base.layout), StateSet(2 * q_count + 2)};
    for (const auto& map : out.layout.machine_states) {
        std::vector<State> barred;
        for (State q : map) barred.push_back(bar(q));
        out.layout.barred_machine_states.push_back(std::move(barred));
    }
    out.layout.special_states["Y_bar"] = bar(y);
    out.layout.special_states["E"] = e;
    out.layout.special_states["E_bar"] = e_bar;
    for (const auto& [name, letter] : connected.layout.special_letters) out.layout.special_letters[name] = letter;
    out.layout.connector_letters = connected.layout.connector_letters;
    out.layout.connector_targets = targets;
    for (State q = 0; q < q_count; ++q) out.target.insert(q);
    out.target.insert(e_bar);
    return out;
}

} // namespace pdfa
