#pragma once

#include <string>

#include "alebench/experiment.hpp"

namespace alebench {

/// Parses an ExperimentSpec from JSON whose keys mirror the config field
/// names. Missing keys keep their defaults; unknown keys raise ConfigError
/// with the offending dotted key path.
ExperimentSpec spec_from_json_text(const std::string& text,
                                   const std::string& origin = "<json>");

ExperimentSpec spec_from_json_file(const std::string& path);

/// Fully resolved spec as pretty-printed JSON (the --dry-run output).
std::string spec_to_json_text(const ExperimentSpec& spec);

}  // namespace alebench
