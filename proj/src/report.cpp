#include "kalvar/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kalvar {

namespace {

// Numbers that fit a machine word stay numbers; larger ones become decimal strings.
ojson big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ojson ints(const std::vector<int>& v) { return ojson(v); }

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string csv_cell(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

ojson betti_json(const BettiTable& table, int s) {
  ojson j;
  j["module_id"] = table.id().to_string();
  j["d"] = table.d();
  j["n"] = table.n();
  j["s"] = s;
  ojson entries = ojson::array();
  for (const auto& t : table.terms()) {
    ojson e;
    e["i"] = t.hom_degree;
    e["twist"] = t.twist;
    e["mult"] = big(t.multiplicity);
    e["part"] = table.part_label(t);
    e["lambda"] = ints(t.lambda.parts());
    e["mu"] = ints(t.mu.parts());
    e["eta"] = ints(t.eta);
    e["skew"] = t.w_shape.to_string();
    e["origin_s"] = t.origin_s;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  ojson totals = ojson::array();
  for (const auto& [key, m] : table.table()) totals.push_back({{"i", key.first}, {"twist", key.second}, {"mult", big(m)}});
  j["betti"] = std::move(totals);
  return j;
}

std::string betti_text(const BettiTable& table) {
  const auto agg = table.table();
  std::ostringstream os;
  os << table.id().to_string() << "  d=" << table.d() << " n=" << table.n() << '\n';
  if (agg.empty()) {
    os << "(zero module)\n";
    return os.str();
  }
  int max_i = 0, lo = INT32_MAX, hi = INT32_MIN;
  for (const auto& [key, m] : agg) {
    max_i = std::max(max_i, key.first);
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::string> header{""}, total{"total:"};
  std::size_t width = 1;
  for (int i = 0; i <= max_i; ++i) {
    header.push_back(std::to_string(i));
    total.push_back(table.rank(i).get_str());
  }
  std::vector<std::vector<std::string>> grid{header, total};
  for (int j = lo; j <= hi; ++j) {
    std::vector<std::string> line{std::to_string(j) + ":"};
    for (int i = 0; i <= max_i; ++i) {
      const BigInt m = table.at(i, i + j);
      line.push_back(m == 0 ? "." : m.get_str());
    }
    grid.push_back(std::move(line));
  }
  for (const auto& line : grid)
    for (std::size_t k = 1; k < line.size(); ++k) width = std::max(width, line[k].size());
  for (const auto& line : grid) {
    os << std::setw(7) << line[0];
    for (std::size_t k = 1; k < line.size(); ++k) os << ' ' << std::setw(static_cast<int>(width)) << line[k];
    os << '\n';
  }
  os << "terms:\n";
  for (const auto& t : table.terms()) {
    os << "  i=" << t.hom_degree << " twist=" << t.twist << " mult=" << t.multiplicity.get_str() << " part=" << table.part_label(t)
       << " lambda=" << t.lambda.to_string() << " mu=" << t.mu.to_string() << " eta=" << join(t.eta)
       << " W=" << t.w_shape.to_string() << '\n';
  }
  return os.str();
}

std::string betti_csv(const BettiTable& table) {
  std::ostringstream os;
  os << "i,twist,mult\n";
  for (const auto& [key, m] : table.table()) os << key.first << ',' << key.second << ',' << m.get_str() << '\n';
  return os.str();
}

std::string render_betti(const BettiTable& table, int s, Format f) {
  switch (f) {
    case Format::Json: return betti_json(table, s).dump(2) + "\n";
    case Format::Csv: return betti_csv(table);
    case Format::Table: break;
  }
  return betti_text(table);
}

std::string render_generators(int d, int n, const std::vector<GeneratorRecord>& records, Format f) {
  const auto counts = generator_counts(records);
  if (f == Format::Json) {
    ojson j;
    j["d"] = d;
    j["n"] = n;
    ojson gens = ojson::array();
    for (const auto& g : records) {
      gens.push_back({{"s", g.s},
                      {"mu", ints(g.mu.parts())},
                      {"lambda", ints(g.lambda.parts())},
                      {"degree", g.degree},
                      {"mult", big(g.multiplicity)},
                      {"composition", ints(g.row_composition)}});
    }
    j["generators"] = std::move(gens);
    ojson per = ojson::array();
    for (const auto& [deg, m] : counts) per.push_back({{"degree", deg}, {"count", big(m)}});
    j["per_degree"] = std::move(per);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "s,mu,lambda,degree,mult,composition\n";
    for (const auto& g : records)
      os << g.s << ",\"" << g.mu.to_string() << "\",\"" << g.lambda.to_string() << "\"," << g.degree << ',' << g.multiplicity.get_str()
         << ",\"" << join(g.row_composition) << "\"\n";
    return os.str();
  }
  os << "minimal generators of K_{1," << d << "," << n << "}\n";
  os << std::setw(3) << "s" << std::setw(12) << "mu" << std::setw(16) << "lambda" << std::setw(8) << "degree" << std::setw(10) << "mult"
     << "  composition\n";
  for (const auto& g : records)
    os << std::setw(3) << g.s << std::setw(12) << g.mu.to_string() << std::setw(16) << g.lambda.to_string() << std::setw(8) << g.degree
       << std::setw(10) << g.multiplicity.get_str() << "  " << join(g.row_composition) << '\n';
  os << "per degree:";
  for (const auto& [deg, m] : counts) os << ' ' << deg << ':' << m.get_str();
  os << '\n';
  return os.str();
}

ojson Report::to_json() const {
  ojson j;
  j["check"] = check;
  j["params"] = params;
  if (modulus) j["modulus"] = *modulus;
  if (seed) j["seed"] = *seed;
  j["per_degree"] = per_degree;
  ojson checks = ojson::array();
  for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  j["checks"] = std::move(checks);
  j["verdict"] = passed() ? "pass" : "fail";
  return j;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  if (!columns.empty()) {
    for (std::size_t k = 0; k < columns.size(); ++k) os << (k ? "," : "") << columns[k];
    os << '\n';
    for (const auto& row : per_degree) {
      for (std::size_t k = 0; k < columns.size(); ++k) os << (k ? "," : "") << (row.contains(columns[k]) ? csv_cell(row[columns[k]]) : "");
      os << '\n';
    }
  } else {
    os << "name,passed,detail\n";
    for (const auto& r : results) os << '"' << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
  }
  return os.str();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << check;
  for (const auto& [k, v] : params.items()) os << ' ' << k << '=' << csv_cell(v);
  if (modulus) os << " modulus=" << *modulus;
  if (seed) os << " seed=" << *seed;
  os << '\n';
  if (!columns.empty()) {
    for (const auto& c : columns) os << std::setw(14) << c;
    os << '\n';
    for (const auto& row : per_degree) {
      for (const auto& c : columns) os << std::setw(14) << (row.contains(c) ? csv_cell(row[c]) : "");
      os << '\n';
    }
  }
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << '\n';
  }
  os << "verdict: " << (passed() ? "pass" : "fail") << '\n';
  return os.str();
}

std::string Report::render(Format f) const {
  switch (f) {
    case Format::Json: return to_json().dump(2) + "\n";
    case Format::Csv: return to_csv();
    case Format::Table: break;
  }
  return to_text();
}

Report minimality_as_report(const MinimalityReport& rep) {
  Report r;
  r.check = "minimality";
  r.params = {{"d", rep.d}, {"n", rep.n}, {"max_degree", rep.max_degree}};
  r.modulus = rep.modulus;
  r.seed = rep.seed;
  r.columns = {"e", "ideal_dim", "new_gens", "predicted"};
  CheckResult res{"minimality d=" + std::to_string(rep.d) + " n=" + std::to_string(rep.n) + " p=" + std::to_string(rep.modulus), true, ""};
  for (const auto& c : rep.per_degree) {
    r.per_degree.push_back({{"e", c.e}, {"ideal_dim", c.ideal_dim}, {"new_gens", c.new_gens}, {"predicted", big(c.predicted)}});
    if (!c.matches())
      res.fail("degree " + std::to_string(c.e) + ": " + std::to_string(c.new_gens) + " new generators, predicted " + c.predicted.get_str());
  }
  r.results.push_back(std::move(res));
  return r;
}

Report hilbert_as_report(const HilbertComparison& cmp) {
  Report r;
  r.check = "hilbert";
  r.params = {{"d", cmp.d}, {"n", cmp.n}, {"max_degree", static_cast<int>(cmp.observed.size()) - 1}};
  r.modulus = cmp.modulus;
  r.seed = cmp.seed;
  r.columns = {"e", "observed", "predicted"};
  CheckResult res{"hilbert d=" + std::to_string(cmp.d) + " n=" + std::to_string(cmp.n) + " p=" + std::to_string(cmp.modulus), true, ""};
  for (std::size_t e = 0; e < cmp.observed.size(); ++e) {
    const BigInt pred = e < cmp.predicted.size() ? cmp.predicted[e] : BigInt(0);
    r.per_degree.push_back({{"e", e}, {"observed", big(cmp.observed[e])}, {"predicted", big(pred)}});
    if (cmp.observed[e] != pred)
      res.fail("degree " + std::to_string(e) + ": observed " + cmp.observed[e].get_str() + ", predicted " + pred.get_str());
  }
  if (cmp.observed.size() != cmp.predicted.size()) res.fail("series lengths differ");
  r.results.push_back(std::move(res));
  return r;
}

Report plain_report(std::string check, ojson params, std::vector<CheckResult> results) {
  Report r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.results = std::move(results);
  return r;
}

}  // namespace kalvar
