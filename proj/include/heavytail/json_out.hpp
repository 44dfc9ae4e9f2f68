#pragma once

#include <cstdint>
#include <string>

#include "heavytail/diagnostics.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/powerstudy.hpp"

namespace heavytail {

// Stable JSON documents ("schema": 1) for the CLI and the C API.

std::string verdict_json(const Verdict& v, const VerdictConfig& cfg, std::size_t n,
                         std::uint64_t seed);

std::string moment_json(const MomentPoint& pt, const ZoneResult& zone, FormulaMode mode,
                        std::size_t n, const BootstrapMoments* bootstrap,
                        std::uint64_t seed);

std::string power_report_json(const PowerReport& rep);
std::string me_power_json(const MePowerReport& rep);

std::string power_report_table(const PowerReport& rep);
std::string me_power_table(const MePowerReport& rep);

} // namespace heavytail
