#pragma once

#include <string>

#include "gmono/monogamy.hpp"
#include "gmono/state.hpp"

namespace gmono {

/// Reads a Gaussian state file. Two encodings are accepted and detected by
/// content: JSON {"n": int, "cm": row-major 2n x 2n array, "displacement":
/// optional 2n array}, or plain text (first line n, then 2n whitespace-
/// separated rows; zero displacement). Malformed files throw parse_error
/// naming the offending line or field; a non-physical covariance matrix
/// throws invalid_input ("violates gamma + iJ >= 0").
GaussianState load_state(const std::string& path);

/// Writes a state as JSON with 17 significant digits per entry, so that
/// load_state(save_state(x)) reproduces x bit for bit.
void save_state(const GaussianState& state, const std::string& path);

/// JSON encodings (serialization used by save_state / the CLI).
std::string state_to_json(const GaussianState& state);
std::string monogamy_result_to_json(const MonogamyResult& result, int pivot,
                                    double tol);
std::string sweep_report_to_json(const SweepReport& report);

/// CSV encoding of the sweep rows, header
/// sample_index,seed,n_modes,pivot,lhs,sum_rhs,residual with 17 significant
/// digits; byte-identical for identical reports.
std::string sweep_rows_to_csv(const SweepReport& report);

enum class ReportFormat { Json, Csv };

void save_report(const SweepReport& report, const std::string& path,
                 ReportFormat format);

}  // namespace gmono
