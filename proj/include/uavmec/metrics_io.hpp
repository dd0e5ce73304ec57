#pragma once

#include <string>

#include "uavmec/sim.hpp"

namespace uavmec {

// Comma-separated metrics export, one row per slot. Numeric columns use a
// fixed 9-significant-digit format so re-exports of the same summary are
// byte-identical. Throws std::runtime_error on IO failure.
void export_metrics(const RunSummary& summary, const std::string& path);

// The export as a string (same bytes as the file).
std::string render_metrics(const RunSummary& summary);

}  // namespace uavmec
