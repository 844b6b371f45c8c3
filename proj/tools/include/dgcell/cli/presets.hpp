#pragma once

// Built-in algebra descriptions, addressed as "presets/<name>". Presets
// with parameters take them after colons, e.g. "naive:4:1:3".

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dgcell::cli {

struct PresetInfo {
  std::string name;
  std::string usage;
  std::string summary;
};

const std::vector<PresetInfo>& list_presets();

/// Spec-file text for a preset, or nullopt for an unknown name.
/// Throws std::invalid_argument on malformed parameters.
std::optional<std::string> preset_text(std::string_view name);

}  // namespace dgcell::cli
