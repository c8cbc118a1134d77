#include "monocorr/io/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "monocorr/error.hpp"

namespace monocorr::io {

namespace {

void sort_rows(std::vector<audit::AuditReport>& reports) {
  if (reports.empty()) throw PreconditionError("report list is empty");
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.label, a.inequality) < std::tie(b.label, b.inequality);
  });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json ratio_json(const audit::Ratio& r) {
  if (r.is_finite()) return r.value;
  return r.to_string();
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool passes(const audit::AuditReport& r, const Pins& pins) {
  const auto it = pins.find(r.inequality);
  if (it == pins.end() || !r.ratio.is_finite()) return true;
  return r.ratio.value >= it->second;
}

std::string reports_csv(std::vector<audit::AuditReport> reports, const Pins* pins) {
  sort_rows(reports);
  std::set<std::string> extras;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.extra) extras.insert(k);

  std::ostringstream os;
  os << "label,n,inequality,cov_num,cov_den,rhs_core,ratio";
  for (const auto& k : extras) os << ',' << csv_field(k);
  if (pins) os << ",pass";
  os << '\n';

  for (const auto& r : reports) {
    os << csv_field(r.label) << ',' << r.n << ',' << csv_field(r.inequality) << ',';
    if (const auto* q = std::get_if<Rational>(&r.cov)) {
      os << q->num() << ',' << q->den();
    } else {
      os << format_real(std::get<double>(r.cov)) << ',';
    }
    os << ',' << format_real(r.rhs_core) << ',' << r.ratio.to_string();
    for (const auto& k : extras) {
      os << ',';
      if (auto it = r.extra.find(k); it != r.extra.end()) os << format_real(it->second);
    }
    if (pins) os << ',' << (passes(r, *pins) ? "pass" : "fail");
    os << '\n';
  }
  return os.str();
}

json reports_json(std::vector<audit::AuditReport> reports, const Pins* pins) {
  sort_rows(reports);
  json rows = json::array();
  for (const auto& r : reports) {
    json row{{"label", r.label}, {"n", r.n}, {"inequality", r.inequality}};
    if (const auto* q = std::get_if<Rational>(&r.cov)) {
      row["cov"] = {{"num", q->num()}, {"den", q->den()}};
    } else {
      row["cov"] = std::get<double>(r.cov);
    }
    row["rhs_core"] = r.rhs_core;
    row["ratio"] = ratio_json(r.ratio);
    if (!r.descriptors.empty()) row["descriptors"] = r.descriptors;
    if (!r.extra.empty()) row["extra"] = r.extra;
    if (!r.notes.empty()) row["notes"] = r.notes;
    if (pins) row["pass"] = passes(r, *pins);
    rows.push_back(std::move(row));
  }
  return {{"reports", rows}};
}

bool write_reports(const std::filesystem::path& path, const std::vector<audit::AuditReport>& reports,
                   const Pins* pins) {
  if (path.extension() == ".json") {
    write_text(path, reports_json(reports, pins).dump(2) + "\n");
  } else {
    write_text(path, reports_csv(reports, pins));
  }
  if (!pins) return true;
  return std::all_of(reports.begin(), reports.end(), [&](const auto& r) { return passes(r, *pins); });
}

std::string grid_csv(const std::vector<gauss::GridRow>& rows, const Pins* pins) {
  if (rows.empty()) throw PreconditionError("grid is empty");
  const Pins::const_iterator pin = pins ? pins->find("gamma_grid_min") : Pins::const_iterator{};
  const bool with_pass = pins && pin != pins->end();
  std::ostringstream os;
  os << "t,s,rho,gamma,cov,rhs_core,ratio" << (with_pass ? ",pass" : "") << '\n';
  for (const auto& r : rows) {
    os << format_real(r.at.t) << ',' << format_real(r.at.s) << ',' << format_real(r.at.rho) << ','
       << format_real(r.gamma) << ',' << format_real(r.cov) << ',' << format_real(r.rhs_core) << ','
       << r.ratio.to_string();
    if (with_pass) os << ',' << (r.gamma >= pin->second ? "pass" : "fail");
    os << '\n';
  }
  return os.str();
}

}  // namespace monocorr::io
