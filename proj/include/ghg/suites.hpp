#pragma once

#include "ghg/config.hpp"
#include "ghg/report.hpp"

#include <string>
#include <vector>

namespace ghg {

// algebra, symbol, turning, wkb, voros, borel.
const std::vector<std::string>& suite_names();

// Runs one suite on the configured parameters. Exceptions inside a check are
// recorded as failed entries carrying the message.
CheckReport run_suite(const std::string& name, const JobConfig& c);

}  // namespace ghg
