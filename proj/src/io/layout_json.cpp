#include "pdfa/io/layout_json.hpp"

namespace pdfa::io {

nlohmann::json layout_to_json(const GadgetLayout& layout, const PartialDfa& gadget,
                              const std::optional<StateSet>& target) {
    nlohmann::json j;
    j["states"] = gadget.state_count();
    j["alphabet"] = gadget.alphabet();
    j["special_states"] = nlohmann::json::object();
    for (const auto& [name, state] : layout.special_states) j["special_states"][name] = state;
    j["special_letters"] = nlohmann::json::object();
    for (const auto& [name, letter] : layout.special_letters)
        j["special_letters"][name] = {{"index", letter}, {"name", gadget.alphabet().at(letter)}};
    j["machine_states"] = layout.machine_states;
    if (!layout.barred_machine_states.empty()) j["barred_machine_states"] = layout.barred_machine_states;
    if (!layout.embedding.empty()) j["embedding"] = layout.embedding;
    if (!layout.letter_order.empty()) j["letter_order"] = layout.letter_order;
    if (!layout.connector_letters.empty()) {
        j["connector_letters"] = layout.connector_letters;
        j["connector_targets"] = layout.connector_targets;
    }
    if (target) j["target_set"] = target->members();
    return j;
}

std::optional<StateSet> target_from_json(const nlohmann::json& sidecar, std::size_t universe) {
    if (!sidecar.contains("target_set")) return std::nullopt;
    StateSet set(universe);
    for (const auto& v : sidecar.at("target_set")) {
        auto s = v.get<State>();
        if (s >= universe) throw InputError("sidecar target state out of range");
        set.insert(s);
    }
    return set;
}

} // namespace pdfa::io
