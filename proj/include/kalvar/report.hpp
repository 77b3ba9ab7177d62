#pragma once

// Text, JSON and CSV renderings of Betti tables, generator lists and check reports.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kalvar/check.hpp"
#include "kalvar/kalman_matrix.hpp"
#include "kalvar/resolution.hpp"
#include "kalvar/verify.hpp"

namespace kalvar {

using ojson = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

/// Accepts "table", "json", "csv".
Format parse_format(const std::string& s);

ojson betti_json(const BettiTable& table, int s);
/// Betti diagram (rows twist - i, columns i) followed by one line per term.
std::string betti_text(const BettiTable& table);
/// Aggregated: i,twist,mult.
std::string betti_csv(const BettiTable& table);
std::string render_betti(const BettiTable& table, int s, Format f);

std::string render_generators(int d, int n, const std::vector<GeneratorRecord>& records, Format f);

/// Row-major nested arrays of polynomial strings, e.g. [["1*x[3][1]", ...], ...].
template <class C>
ojson poly_matrix_json(const PolyMatrix<C>& m, int grid_cols) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).to_string(grid_cols));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// A check outcome ready for output.
struct Report {
  std::string check;
  ojson params = ojson::object();
  std::optional<std::uint32_t> modulus;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> columns;  // keys of each per_degree object, in CSV column order
  std::vector<ojson> per_degree;
  std::vector<CheckResult> results;

  bool passed() const { return all_passed(results); }
  ojson to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(Format f) const;
};

Report minimality_as_report(const MinimalityReport& rep);
Report hilbert_as_report(const HilbertComparison& cmp);
/// Report with no per-degree data.
Report plain_report(std::string check, ojson params, std::vector<CheckResult> results);

}  // namespace kalvar
