#include "monocorr/gauss/grid.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <sstream>

#include "monocorr/error.hpp"
#include "monocorr/gauss/normal.hpp"

namespace monocorr::gauss {

namespace {

struct Grid {
  std::vector<double> t, s, rho;

  std::size_t size() const { return t.size() * s.size() * rho.size(); }
  GaussianPair at(std::size_t idx) const {
    const std::size_t ir = idx % rho.size();
    const std::size_t is = (idx / rho.size()) % s.size();
    const std::size_t it = idx / (rho.size() * s.size());
    return {t[it], s[is], rho[ir]};
  }
};

Grid make_grid(const GridRange& t, const GridRange& s, const GridRange& rho) {
  Grid g{t.points(), s.points(), rho.points()};
  for (double r : g.rho) {
    if (!(r >= 0.0 && r <= 1.0)) throw PreconditionError("rho grid must lie in [0, 1]");
  }
  return g;
}

std::string where(const GaussianPair& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(t=" << p.t << ", s=" << p.s << ", rho=" << p.rho << ")";
  return os.str();
}

double gamma_at(const GaussianPair& p, const QuadratureConfig& cfg) {
  try {
    return gamma_ratio(p, cfg);
  } catch (const QuadratureError& e) {
    throw QuadratureError(std::string(e.what()) + " at " + where(p), e.achieved_error());
  }
}

GridRow row_at(const GaussianPair& p, const QuadratureConfig& cfg) {
  try {
    return evaluate_point(p, cfg);
  } catch (const QuadratureError& e) {
    throw QuadratureError(std::string(e.what()) + " at " + where(p), e.achieved_error());
  }
}

GammaMin reduce_min(const Grid& g, const std::vector<double>& values) {
  GammaMin best{values.front(), g.at(0)};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < best.min) best = {values[i], g.at(i)};
  }
  return best;
}

}  // namespace

std::vector<double> GridRange::points() const {
  if (count < 1) throw PreconditionError("grid resolution must be >= 1");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw PreconditionError("grid range must be finite");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

GridRange GridRange::parse(const std::string& text) {
  GridRange r;
  std::istringstream is(text);
  char c1 = 0, c2 = 0;
  if (!(is >> r.lo >> c1 >> r.hi >> c2 >> r.count) || c1 != ':' || c2 != ':' || !is.eof()) {
    throw PreconditionError("malformed range '" + text + "', expected lo:hi:count");
  }
  r.points();
  return r;
}

GridRow evaluate_point(const GaussianPair& p, const QuadratureConfig& cfg) {
  GridRow row;
  row.at = p;
  row.gamma = gamma_ratio(p, cfg);
  row.cov = orthant_excess(p, cfg);
  const double log_tt = 1.0 - 2.0 * log_pdf(p.t);
  const double log_ss = 1.0 - 2.0 * log_pdf(p.s);
  row.rhs_core = p.rho * std::exp(log_pdf(p.t) + log_pdf(p.s)) / (std::sqrt(log_tt) * std::sqrt(log_ss));
  row.ratio = audit::Ratio::of(row.cov, row.rhs_core);
  return row;
}

namespace serial {

GammaMin gamma_grid_min(const GridRange& t, const GridRange& s, const GridRange& rho, const QuadratureConfig& cfg) {
  const Grid g = make_grid(t, s, rho);
  std::vector<double> values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) values[i] = gamma_at(g.at(i), cfg);
  return reduce_min(g, values);
}

std::vector<GridRow> grid_scan(const GridRange& t, const GridRange& s, const GridRange& rho,
                               const QuadratureConfig& cfg) {
  const Grid g = make_grid(t, s, rho);
  std::vector<GridRow> rows(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) rows[i] = row_at(g.at(i), cfg);
  return rows;
}

}  // namespace serial

namespace parallel {

GammaMin gamma_grid_min(const GridRange& t, const GridRange& s, const GridRange& rho, const QuadratureConfig& cfg) {
  const Grid g = make_grid(t, s, rho);
  std::vector<double> values(g.size());
  std::exception_ptr failure;
  const auto m = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    try {
      values[static_cast<std::size_t>(i)] = gamma_at(g.at(static_cast<std::size_t>(i)), cfg);
    } catch (...) {
#pragma omp critical(monocorr_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce_min(g, values);
}

std::vector<GridRow> grid_scan(const GridRange& t, const GridRange& s, const GridRange& rho,
                               const QuadratureConfig& cfg) {
  const Grid g = make_grid(t, s, rho);
  std::vector<GridRow> rows(g.size());
  std::exception_ptr failure;
  const auto m = static_cast<std::ptrdiff_t>(g.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = row_at(g.at(static_cast<std::size_t>(i)), cfg);
    } catch (...) {
#pragma omp critical(monocorr_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace parallel

}  // namespace monocorr::gauss
