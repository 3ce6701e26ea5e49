#pragma once

#include <string>

#include "ffscale/harness/scenario.hpp"

namespace ffscale::harness {

/// Plain decimal (no exponent) with at least 15 significant digits.
std::string format_decimal(double x);

std::string to_csv(const FigureDataset& ds);

/// Writes `to_csv(ds)` to `path`; throws std::runtime_error naming the path on failure.
void emit_csv(const FigureDataset& ds, const std::string& path);

}  // namespace ffscale::harness
