#pragma once

#include <string>
#include <vector>

#include "bcov/report.hpp"

namespace bcov {

/* Directory holding the shipped fixture data; BCOV_FIXTURES_DIR overrides. */
std::string fixtures_dir();

std::vector<std::string> fixture_names();

/* Loads <dir>/<name>.json; throws InputError for unknown names or bad data. */
Json load_fixture(const std::string& name);

PLCovering plcov_fixture(const std::string& name);
SigmaPoint bezout_fixture(const std::string& name);
FinMap fintop_fixture(const std::string& name);

}  // namespace bcov
