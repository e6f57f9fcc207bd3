#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alebench/experiment.hpp"

namespace alebench {

inline constexpr std::string_view kCsvHeader =
    "experiment,algorithm,grid_param,grid_value,seed,snr_db,mse,ber,evaluations,"
    "wall_time_ms";

/// 17 significant digits (%.17g); round-trips exactly through strtod.
std::string format_double(double value);

std::string to_csv_row(const RunRecord& record);

/// Header plus one row per record; absent metrics render as empty fields.
void write_csv(std::span<const RunRecord> records, const std::string& path);

/// Strict inverse of write_csv: the header must match exactly.
std::vector<RunRecord> read_csv(const std::string& path);

}  // namespace alebench
