#pragma once

#include <string>

#include "corepart/report.hpp"

namespace corepart {

/// Desk-scale verification suites exposed through the CLI.
/// Known names: identities, oracle, closedforms, genfunc, degrees,
/// asymptotics, all. Throws std::invalid_argument for anything else.
SuiteReport run_suite(const std::string& name);

}  // namespace corepart
