#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "monocorr/audit/report.hpp"
#include "monocorr/gauss/grid.hpp"
#include "monocorr/io/json_io.hpp"

namespace monocorr::io {

/// %.17g, with "inf" / "-inf" / "nan" spelled out.
std::string format_real(double x);

/// True iff the ratio clears pins[inequality]; rows without a pin, and
/// infinite or vacuous ratios, always pass.
bool passes(const audit::AuditReport& r, const Pins& pins);

/// CSV with header label,n,inequality,cov_num,cov_den,rhs_core,ratio, then
/// the union of extra columns in key order, then `pass` when pins are
/// given. Rows are sorted by (label, inequality). Throws on an empty list.
std::string reports_csv(std::vector<audit::AuditReport> reports, const Pins* pins = nullptr);

/// {"reports": [...]} in the same row order; adds "pass" when pins are given.
json reports_json(std::vector<audit::AuditReport> reports, const Pins* pins = nullptr);

/// Writes JSON for a .json path and CSV otherwise. Returns whether every
/// row passes its pin.
bool write_reports(const std::filesystem::path& path, const std::vector<audit::AuditReport>& reports,
                   const Pins* pins = nullptr);

/// t,s,rho,gamma,cov,rhs_core,ratio in scan order, with a trailing `pass`
/// column (gamma >= pins["gamma_grid_min"]) when that pin is given.
std::string grid_csv(const std::vector<gauss::GridRow>& rows, const Pins* pins = nullptr);

}  // namespace monocorr::io
