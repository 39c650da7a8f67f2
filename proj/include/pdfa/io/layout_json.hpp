#pragma once

#include <optional>

#include <json.hpp>

#include "pdfa/reductions.hpp"

namespace pdfa::io {

/// Sidecar written next to a gadget: special states by index, special letters
/// by index and name, the per-machine state maps and, for saturation-type
/// gadgets, the target set.
nlohmann::json layout_to_json(const GadgetLayout& layout, const PartialDfa& gadget,
                              const std::optional<StateSet>& target = std::nullopt);

/// Target set recorded in a sidecar, if any.
std::optional<StateSet> target_from_json(const nlohmann::json& sidecar, std::size_t universe);

} // namespace pdfa::io
