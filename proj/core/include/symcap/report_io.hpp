#pragma once

#include <string>

#include "symcap/bounds.hpp"
#include "symcap/c5_lab.hpp"
#include "symcap/mis_solver.hpp"

namespace symcap {

// Single-line JSON renderings (no trailing newline). Counts that do not fit
// in 64 bits are written as decimal strings.

/// {"alpha", "optimal", "nodes", "elapsed_ms", "certificate"}
std::string to_json(const SolveReport& report);

std::string to_json(const BoundsReport& report);
std::string to_json(const CapacityEstimate& estimate);

/// {"k", "check", "ok", "counterexamples"}
std::string to_json(const c5::AuditResult& audit);

/// Bounds table header and rows: k,lower,alpha,optimal,upper_c5,upper_theta.
/// Absent values are empty fields.
std::string bounds_csv_header();
std::string to_csv_row(const BoundsReport& report);

/// Capacity table: k,alpha,ratio.
std::string capacity_csv(const CapacityEstimate& estimate);

}  // namespace symcap
