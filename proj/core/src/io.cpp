#include "gmono/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gmono/errors.hpp"
#include "gmono/symplectic.hpp"

namespace gmono {

namespace {

// 17 significant digits round-trip an IEEE double exactly.
std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_json(double x) {
  return std::isfinite(x) ? fmt(x) : std::string("null");
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

GaussianState parse_json_state(const std::string& text,
                               const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    // parse_error for malformed text, out_of_range for number overflow
    throw parse_error(path + ": " + e.what());
  }
  if (!j.is_object())
    throw parse_error(path + ": top-level JSON object required");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw parse_error(path + ": field \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1) throw parse_error(path + ": field \"n\" must be >= 1");
  const int dim = 2 * n;

  if (!j.contains("cm") || !j["cm"].is_array())
    throw parse_error(path + ": field \"cm\" must be an array");
  const nlohmann::json& cm = j["cm"];

  GaussianState st;
  st.cm.resize(dim, dim);
  if (!cm.empty() && cm.front().is_array()) {
    if (static_cast<int>(cm.size()) != dim)
      throw parse_error(path + ": field \"cm\" must have " +
                        std::to_string(dim) + " rows");
    for (int r = 0; r < dim; ++r) {
      const nlohmann::json& row = cm[r];
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw parse_error(path + ": field \"cm\" row " + std::to_string(r) +
                          " must have " + std::to_string(dim) + " entries");
      for (int c = 0; c < dim; ++c) {
        if (!row[c].is_number())
          throw parse_error(path + ": field \"cm\" row " + std::to_string(r) +
                            " entry " + std::to_string(c) +
                            " must be a number");
        st.cm(r, c) = row[c].get<double>();
      }
    }
  } else {
    if (static_cast<int>(cm.size()) != dim * dim)
      throw parse_error(path + ": field \"cm\" must be a " +
                        std::to_string(dim) + " x " + std::to_string(dim) +
                        " nested array or a flat array of " +
                        std::to_string(dim * dim) + " entries");
    for (int k = 0; k < dim * dim; ++k) {
      if (!cm[k].is_number())
        throw parse_error(path + ": field \"cm\" entry " + std::to_string(k) +
                          " must be a number");
      st.cm(k / dim, k % dim) = cm[k].get<double>();
    }
  }

  st.displacement = Eigen::VectorXd::Zero(dim);
  if (j.contains("displacement")) {
    const nlohmann::json& d = j["displacement"];
    if (!d.is_array() || static_cast<int>(d.size()) != dim)
      throw parse_error(path + ": field \"displacement\" must have " +
                        std::to_string(dim) + " entries");
    for (int k = 0; k < dim; ++k) {
      if (!d[k].is_number())
        throw parse_error(path + ": field \"displacement\" entry " +
                          std::to_string(k) + " must be a number");
      st.displacement(k) = d[k].get<double>();
    }
  }
  return st;
}

GaussianState parse_text_state(const std::string& text,
                               const std::string& path) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ls(line);
    std::string trailing;
    if (!(ls >> n) || (ls >> trailing))
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": expected the mode count alone on the first line");
    have_n = true;
    break;
  }
  if (!have_n) throw parse_error(path + ": empty file");
  if (n < 1)
    throw parse_error(path + ": mode count must be a positive integer");
  const int dim = 2 * n;

  GaussianState st;
  st.cm.resize(dim, dim);
  st.displacement = Eigen::VectorXd::Zero(dim);
  int row = 0;
  while (row < dim && std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ls(line);
    for (int c = 0; c < dim; ++c) {
      if (!(ls >> st.cm(row, c)))
        throw parse_error(path + ":" + std::to_string(lineno) + ": expected " +
                          std::to_string(dim) + " values in matrix row " +
                          std::to_string(row));
    }
    double extra;
    if (ls >> extra)
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": extra value in matrix row " + std::to_string(row));
    ++row;
  }
  if (row < dim)
    throw parse_error(path + ": expected " + std::to_string(dim) +
                      " matrix rows, found " + std::to_string(row));
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line))
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": unexpected content after the matrix");
  }
  return st;
}

}  // namespace

GaussianState load_state(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error(path + ": cannot open file");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();

  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw parse_error(path + ": empty file");
  GaussianState st = text[first] == '{' ? parse_json_state(text, path)
                                        : parse_text_state(text, path);
  if (!st.cm.allFinite() || !st.displacement.allFinite())
    throw parse_error(path + ": non-finite entries");
  if (!is_valid_cm(st.cm))
    throw invalid_input(path +
                        ": covariance matrix violates gamma + iJ >= 0");
  return st;
}

std::string state_to_json(const GaussianState& state) {
  const int dim = static_cast<int>(state.cm.rows());
  std::string out = "{\n  \"n\": " + std::to_string(state.n()) +
                    ",\n  \"cm\": [\n";
  for (int r = 0; r < dim; ++r) {
    out += "    [";
    for (int c = 0; c < dim; ++c) {
      out += fmt(state.cm(r, c));
      if (c + 1 < dim) out += ", ";
    }
    out += r + 1 < dim ? "],\n" : "]\n";
  }
  out += "  ],\n  \"displacement\": [";
  for (int k = 0; k < dim; ++k) {
    out += fmt(state.displacement.size() == dim ? state.displacement(k) : 0.0);
    if (k + 1 < dim) out += ", ";
  }
  out += "]\n}\n";
  return out;
}

void save_state(const GaussianState& state, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw error("cannot write file: " + path);
  f << state_to_json(state);
  if (!f.good()) throw error("write failed: " + path);
}

std::string monogamy_result_to_json(const MonogamyResult& result, int pivot,
                                    double tol) {
  double sum_rhs = 0.0;
  for (const PartnerTangle& pt : result.per_partner) sum_rhs += pt.tau;
  std::string out = "{\n";
  out += "  \"pivot\": " + std::to_string(pivot) + ",\n";
  out += "  \"lhs\": " + fmt_json(result.lhs) + ",\n";
  out += "  \"per_partner\": [";
  for (std::size_t k = 0; k < result.per_partner.size(); ++k) {
    out += k == 0 ? "\n" : ",\n";
    out += "    {\"mode\": " + std::to_string(result.per_partner[k].mode) +
           ", \"tau\": " + fmt_json(result.per_partner[k].tau) + "}";
  }
  out += result.per_partner.empty() ? "],\n" : "\n  ],\n";
  out += "  \"sum_rhs\": " + fmt_json(sum_rhs) + ",\n";
  out += "  \"residual\": " + fmt_json(result.residual) + ",\n";
  out += "  \"tol\": " + fmt_json(tol) + ",\n";
  out += std::string("  \"holds\": ") +
         (result.residual >= -tol ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

std::string sweep_report_to_json(const SweepReport& report) {
  std::string out = "{\n";
  out += "  \"n_modes\": " + std::to_string(report.n_modes) + ",\n";
  out += "  \"samples\": " + std::to_string(report.samples) + ",\n";
  out += "  \"squeeze_max\": " + fmt_json(report.squeeze_max) + ",\n";
  out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
  out += "  \"tol\": " + fmt_json(report.tol) + ",\n";
  out += "  \"evaluations\": " + std::to_string(report.evaluations) + ",\n";
  out += "  \"violations\": " + std::to_string(report.violations) + ",\n";
  out += "  \"min_residual\": " + fmt_json(report.min_residual) + ",\n";
  out += "  \"max_residual\": " + fmt_json(report.max_residual) + ",\n";
  out += "  \"mean_residual\": " + fmt_json(report.mean_residual) + ",\n";
  out += "  \"pair_count\": " + std::to_string(report.pair_count) + ",\n";
  out += "  \"entangled_pair_count\": " +
         std::to_string(report.entangled_pair_count) + ",\n";
  out += "  \"min_tau_gap\": " + fmt_json(report.min_tau_gap) + ",\n";
  out += "  \"min_chain_gap\": " + fmt_json(report.min_chain_gap) + ",\n";
  out += "  \"min_flag_slack\": [";
  for (int k = 0; k < 6; ++k) {
    out += fmt_json(report.min_flag_slack[k]);
    if (k + 1 < 6) out += ", ";
  }
  out += "],\n";
  out += "  \"diagnostics\": [";
  for (std::size_t k = 0; k < report.diagnostics.size(); ++k) {
    out += k == 0 ? "\n" : ",\n";
    out += "    \"" + escape(report.diagnostics[k]) + "\"";
  }
  out += report.diagnostics.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string sweep_rows_to_csv(const SweepReport& report) {
  std::string out = "sample_index,seed,n_modes,pivot,lhs,sum_rhs,residual\n";
  for (const SweepRow& row : report.rows) {
    out += std::to_string(row.sample_index) + ",";
    out += std::to_string(row.seed) + ",";
    out += std::to_string(row.n_modes) + ",";
    out += std::to_string(row.pivot) + ",";
    out += fmt(row.lhs) + ",";
    out += fmt(row.sum_rhs) + ",";
    out += fmt(row.residual) + "\n";
  }
  return out;
}

void save_report(const SweepReport& report, const std::string& path,
                 ReportFormat format) {
  std::ofstream f(path);
  if (!f) throw error("cannot write file: " + path);
  f << (format == ReportFormat::Json ? sweep_report_to_json(report)
                                     : sweep_rows_to_csv(report));
  if (!f.good()) throw error("write failed: " + path);
}

}  // namespace gmono
