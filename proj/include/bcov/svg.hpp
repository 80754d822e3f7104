#pragma once

#include <string>

#include "bcov/plcov.hpp"

namespace bcov {

/* Renders the covering: segments, branch-point markers, base bar, and the
 * fiber-cardinality step function. Rationals are rounded to 6 decimals for
 * rendering only. Throws InputError when the path is unwritable. */
std::string render_svg(const PLCovering& cov, const BranchReport& rep);
void emit_svg(const PLCovering& cov, const BranchReport& rep, const std::string& path);

}  // namespace bcov
