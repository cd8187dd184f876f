#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "grauert/verify.hpp"

namespace grauert::report {

inline constexpr const char* kVersion = "1.0.0";

/// 17 significant digits, '.' decimal separator.
std::string format_number(double x);

/// Header row, comma delimiter, LF line endings; missing cells are empty.
void write_csv(std::ostream& os, const Table& table);
void write_claims_csv(std::ostream& os, const std::vector<ClaimResult>& claims);

/// {"version", "config", "rows"} and {"version", "config", "claims"}.
void write_json(std::ostream& os, const RunConfig& cfg, const Table& table);
void write_claims_json(std::ostream& os, const RunConfig& cfg, const std::vector<ClaimResult>& claims);

}  // namespace grauert::report
