#include "twophase/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twophase/errors.hpp"

namespace twophase {

// -------------------------------------------------------------------------
// CSV
// -------------------------------------------------------------------------

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&]() {
    record.push_back(field);
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&]() {
    end_field();
    const bool blank = record.size() == 1 && record[0].empty();
    if (!blank) {
      if (table.header.empty()) {
        table.header = std::move(record);
      } else {
        if (record.size() != table.header.size()) {
          throw ParseError("expected " + std::to_string(table.header.size()) + " fields, found " +
                               std::to_string(record.size()),
                           record_line);
        }
        table.rows.push_back(std::move(record));
        table.line_of_row.push_back(record_line);
      }
    }
    record.clear();
  };

  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (in_quotes) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          field.push_back('"');
          ++k;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted) throw ParseError("unexpected quote inside a field", line);
        in_quotes = true;
        field_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        if (field_quoted) throw ParseError("characters after a closing quote", line);
        field.push_back(c);
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted field", record_line);
  if (!field.empty() || !record.empty() || field_quoted) end_record();
  if (table.header.empty()) throw ParseError("empty input, no header row", 1);

  std::set<std::string> seen;
  for (auto& h : table.header) {
    h.erase(0, h.find_first_not_of(" \t"));
    h.erase(h.find_last_not_of(" \t") + 1);
    if (h.empty()) throw ParseError("empty column name in header", 1);
    if (!seen.insert(h).second) throw ParseError("duplicate column '" + h + "' in header", 1);
  }
  return table;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw DomainError("failed writing '" + path + "'");
}

CsvTable read_csv_file(const std::string& path) { return parse_csv(read_text_file(path)); }

bool is_missing_field(const std::string& field) {
  std::string t;
  for (char c : field) {
    if (c != ' ' && c != '\t') t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return t.empty() || t == "NA" || t == "NAN";
}

namespace {

double parse_number(const std::string& field, std::size_t line, const std::string& column) {
  std::string t = field;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw ParseError("column '" + column + "': '" + field + "' is not a finite number", line);
  }
  return v;
}

std::vector<std::string> string_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& v = j.at(key);
  if (v.is_string()) return {v.get<std::string>()};
  return v.get<std::vector<std::string>>();
}

}  // namespace

// -------------------------------------------------------------------------
// Metadata and loading
// -------------------------------------------------------------------------

AnalysisMetadata parse_metadata(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line
    const std::size_t upto = std::min<std::size_t>(e.byte, json_text.size());
    const auto line = static_cast<std::size_t>(
        1 + std::count(json_text.begin(), json_text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw ParseError(std::string("metadata: ") + e.what(), line);
  }
  try {
    AnalysisMetadata m;
    m.outcome = j.at("outcome").get<std::string>();
    m.family = parse_family(j.value("family", std::string("gaussian")));
    m.regressors = string_list(j, "regressors");
    m.phase2 = string_list(j, "phase2");
    m.auxiliary = string_list(j, "auxiliary");
    m.strata = j.at("strata").get<std::string>();
    if (j.contains("inclusion")) m.inclusion = j.at("inclusion").get<std::string>();
    if (j.contains("id")) m.id = j.at("id").get<std::string>();
    m.imputation_columns = string_list(j, "imputation_columns");
    m.raking_coefficients = string_list(j, "raking_coefficients");
    for (const auto& p : m.phase2) {
      if (std::find(m.regressors.begin(), m.regressors.end(), p) == m.regressors.end()) {
        throw DomainError("phase-2 column '" + p + "' is not a regressor");
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("metadata: ") + e.what());
  }
}

AnalysisData load_analysis(const CsvTable& table, const AnalysisMetadata& meta) {
  auto index_of = [&](const std::string& name) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) throw DomainError("column '" + name + "' is not in the data");
    return static_cast<std::size_t>(it - table.header.begin());
  };
  const std::size_t n = table.rows.size();
  if (n == 0) throw DomainError("data has no rows");

  auto numeric = [&](const std::string& name, bool allow_missing, std::vector<bool>* observed) {
    const std::size_t c = index_of(name);
    std::vector<double> v(n, 0.0);
    if (observed) observed->assign(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& f = table.rows[i][c];
      if (is_missing_field(f)) {
        if (!allow_missing) throw ParseError("column '" + name + "' has a missing value", table.line_of_row[i]);
        (*observed)[i] = false;
        continue;
      }
      v[i] = parse_number(f, table.line_of_row[i], name);
    }
    return v;
  };

  // Phase-2 sample membership.
  std::vector<bool> included(n, true);
  if (meta.inclusion) {
    const std::vector<double> r = numeric(*meta.inclusion, false, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
      if (r[i] != 0.0 && r[i] != 1.0) {
        throw ParseError("inclusion column must be 0 or 1", table.line_of_row[i]);
      }
      included[i] = r[i] == 1.0;
    }
  }

  FrameColumns cols;
  cols.outcome = Column(meta.outcome, numeric(meta.outcome, false, nullptr));
  for (const auto& r : meta.regressors) {
    if (std::find(meta.phase2.begin(), meta.phase2.end(), r) != meta.phase2.end()) continue;
    cols.phase1.emplace_back(r, numeric(r, false, nullptr));
  }
  for (const auto& name : meta.phase2) {
    std::vector<bool> obs;
    std::vector<double> v = numeric(name, true, &obs);
    if (meta.inclusion) {
      for (std::size_t i = 0; i < n; ++i) {
        if (included[i] && !obs[i]) {
          throw ParseError("phase-2 column '" + name + "' is missing on a sampled row",
                           table.line_of_row[i]);
        }
        obs[i] = obs[i] && included[i];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) included[i] = included[i] && obs[i];
    }
    cols.phase2.emplace_back(name, std::move(v), std::move(obs));
  }
  if (!meta.inclusion) {
    // A row is sampled only when every phase-2 value is present; values on
    // partially observed rows are dropped.
    std::vector<Column> masked;
    for (std::size_t k = 0; k < cols.phase2.size(); ++k) {
      const Column& c = cols.phase2[k];
      std::vector<double> v(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) v[i] = c.observed(i) ? c.at(i) : 0.0;
      masked.emplace_back(c.name(), std::move(v), included);
    }
    cols.phase2 = std::move(masked);
  }
  for (const auto& a : meta.auxiliary) cols.auxiliary.emplace_back(a, numeric(a, false, nullptr));
  if (meta.id) {
    const std::vector<double> ids = numeric(*meta.id, false, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
      if (ids[i] != std::floor(ids[i])) throw ParseError("id must be an integer", table.line_of_row[i]);
      cols.row_id.push_back(static_cast<std::int64_t>(ids[i]));
    }
  }

  // Strata: arbitrary labels, coded in sorted order.
  const std::size_t sc = index_of(meta.strata);
  std::map<std::string, int> codes;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& f = table.rows[i][sc];
    if (is_missing_field(f)) throw ParseError("stratum is missing", table.line_of_row[i]);
    codes.emplace(f, 0);
  }
  AnalysisData data{PopulationFrame(std::move(cols)), TwoPhaseDesign({0}, {true}), ModelSpec{}, {}};
  int next = 0;
  for (auto& [label, code] : codes) {
    code = next++;
    data.stratum_labels.push_back(label);
  }
  std::vector<int> stratum(n);
  for (std::size_t i = 0; i < n; ++i) stratum[i] = codes.at(table.rows[i][sc]);

  data.design = attach_design(data.frame, std::move(stratum), std::move(included));
  data.spec.family = meta.family;
  data.spec.outcome = meta.outcome;
  data.spec.regressors = meta.regressors;
  validate(data.spec, data.frame);
  return data;
}

std::string format_full(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string export_analysis_csv(const PopulationFrame& frame, const TwoPhaseDesign& design) {
  std::vector<std::string> names{frame.outcome().name()};
  for (auto role : {ColumnRole::phase1, ColumnRole::phase2, ColumnRole::auxiliary}) {
    for (const auto& c : frame.column_names(role)) names.push_back(c);
  }
  std::ostringstream out;
  out << "id";
  for (const auto& c : names) out << ',' << c;
  out << ",stratum,R\n";
  for (std::size_t i = 0; i < frame.n_rows(); ++i) {
    out << frame.row_id()[i];
    for (const auto& c : names) {
      const Column& col = frame.column(c);
      out << ',';
      if (!col.observed(i) || (!frame.is_phase1(c) && !design.included(i))) {
        out << "NA";
      } else {
        out << format_full(col.at(i));
      }
    }
    out << ',' << design.stratum_of()[i] << ',' << (design.included(i) ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace twophase
