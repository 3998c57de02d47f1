#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twophase/frame.hpp"

namespace twophase {

// -------------------------------------------------------------------------
// CSV
// -------------------------------------------------------------------------

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_of_row;  // 1-based source line of each row
};

// RFC-4180 style: comma separated, optional double quotes, "" escapes.
// Ragged rows raise ParseError with the offending line number.
CsvTable parse_csv(const std::string& text);
CsvTable read_csv_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

// Empty fields and NA (any case) are missing.
bool is_missing_field(const std::string& field);

// -------------------------------------------------------------------------
// Analysis inputs
// -------------------------------------------------------------------------

// Describes how the columns of a data file map onto a two-phase analysis.
//   {"outcome": "Y", "family": "gaussian", "regressors": ["X", "Z"],
//    "phase2": ["X"], "auxiliary": ["A"], "strata": "stratum",
//    "inclusion": "R", "id": "id"}
// "inclusion" and "id" are optional; without an inclusion column a row is in
// the phase-2 sample when all its phase-2 values are present.
struct AnalysisMetadata {
  std::string outcome;
  Family family = Family::gaussian_identity;
  std::vector<std::string> regressors;
  std::vector<std::string> phase2;
  std::vector<std::string> auxiliary;
  std::string strata;
  std::optional<std::string> inclusion;
  std::optional<std::string> id;
  std::vector<std::string> imputation_columns;
  std::vector<std::string> raking_coefficients;
};

AnalysisMetadata parse_metadata(const std::string& json_text);

struct AnalysisData {
  PopulationFrame frame;
  TwoPhaseDesign design;
  ModelSpec spec;
  std::vector<std::string> stratum_labels;  // original label of each stratum code
};

AnalysisData load_analysis(const CsvTable& table, const AnalysisMetadata& meta);

// Writes a frame and design in the layout load_analysis reads back:
// row id, outcome, phase-1, phase-2 (NA outside the sample), auxiliaries,
// stratum, R.
std::string export_analysis_csv(const PopulationFrame& frame, const TwoPhaseDesign& design);

// Shortest text that parses back to the same double.
std::string format_full(double value);

}  // namespace twophase
