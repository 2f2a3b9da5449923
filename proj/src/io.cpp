#include "minorbit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "minorbit/errors.hpp"

namespace minorbit {

using Json = nlohmann::ordered_json;

namespace {

Json partition_json(const Partition& p) { return Json(std::vector<int>(p.rows().begin(), p.rows().end())); }

Partition partition_from(const Json& j, const char* key) {
  if (!j.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of row lengths");
  std::vector<int> rows;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must hold integers");
    rows.push_back(x.get<int>());
  }
  try {
    return Partition(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("\"") + key + "\": " + e.what());
  }
}

}  // namespace

std::string tableau_to_json(const PartialTableau& t) {
  Json j;
  j["outer"] = partition_json(t.region().outer());
  if (!t.region().inner().empty()) j["inner"] = partition_json(t.region().inner());
  Json rows = Json::array();
  for (const auto& row : t.to_rows()) {
    Json r = Json::array();
    for (int v : row) r.push_back(v == PartialTableau::kUnfilled ? Json(nullptr) : Json(v));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

PartialTableau tableau_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("tableau JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("outer") || !j.contains("rows"))
    throw ParseError("tableau JSON needs \"outer\" and \"rows\"");
  const Partition outer = partition_from(j["outer"], "outer");
  const Partition inner = j.contains("inner") ? partition_from(j["inner"], "inner") : Partition{};
  SkewShape region;
  try {
    region = SkewShape(outer, inner);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const Json& rows = j["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != outer.num_rows())
    throw ParseError("\"rows\" must have one entry per row of \"outer\"");
  PartialTableau t{region};
  for (int r = 1; r <= outer.num_rows(); ++r) {
    const Json& row = rows[static_cast<std::size_t>(r - 1)];
    const int first = inner.row(r) + 1;
    if (!row.is_array() || static_cast<int>(row.size()) != outer.row(r) - inner.row(r))
      throw ParseError("row " + std::to_string(r) + " has the wrong length");
    for (int c = first; c <= outer.row(r); ++c) {
      const Json& v = row[static_cast<std::size_t>(c - first)];
      if (v.is_null()) continue;
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000'000)
        throw ParseError("entry at " + to_string(Box{r, c}) + " must be a positive integer or null");
      t.set({r, c}, v.get<int>());
    }
  }
  return t;
}

PartialTableau read_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return tableau_from_json(buf.str());
}

std::string tableau_to_grid(const PartialTableau& t) {
  const SkewShape& region = t.region();
  std::size_t width = 1;
  for (const Box& b : t.filled_cells()) width = std::max(width, std::to_string(t.at(b)).size());
  std::string out;
  for (int r = 1; r <= region.outer().num_rows(); ++r) {
    std::string line;
    for (int c = 1; c <= region.outer().row(r); ++c) {
      std::string cell;
      if (c <= region.inner().row(r)) cell = "";
      else if (t.filled({r, c})) cell = std::to_string(t.at({r, c}));
      else cell = ".";
      if (c > 1) line += ' ';
      line += std::string(width - cell.size(), ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string report_to_json(const Report& report) {
  Json j;
  j["suite"] = report.suite;
  j["rect"] = to_string(report.rect);
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.passed ? "pass" : "fail";
    e["counterexample"] = c.passed ? Json(nullptr) : Json(c.counterexample);
    if (!c.detail.empty()) e["detail"] = c.detail;
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  j["notes"] = report.notes;
  j["passed"] = report.passed();
  return j.dump(2);
}

}  // namespace minorbit
