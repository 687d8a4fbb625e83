#include "galois/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "galois/qpoly.hpp"
#include "galois/sampler.hpp"

namespace galois::analysis {

std::string CurveReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [k, v] : metadata) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    os << columns[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string CurveReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"label\":\"" << label << "\",\"metadata\":{";
  bool first = true;
  for (const auto& [k, v] : metadata) {
    if (!first) os << ',';
    first = false;
    os << '"' << k << "\":\"" << v << '"';
  }
  os << "},\"columns\":[";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) os << ',';
    os << '"' << columns[i] << '"';
  }
  os << "],\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) os << ',';
      os << rows[r][i];
    }
    os << ']';
  }
  os << "]}";
  return os.str();
}

CurveReport clt_curve(unsigned m, const std::vector<unsigned>& ns) {
  CurveReport rep;
  rep.label = "clt";
  rep.columns = {"n", "m", "kolmogorov"};
  rep.metadata["m"] = std::to_string(m);
  for (unsigned n : ns) {
    const auto mom = dist::closed_form_moments(n, m);
    const double sd = std::sqrt(mom.variance.get_d());
    if (sd <= 0) throw std::domain_error("clt_curve: degenerate moments");
    const double d = dist::kolmogorov_distance_to_normal(
        dist::exact_pmf(n, m), mom.mean.get_d(), sd);
    rep.rows.push_back({static_cast<double>(n), static_cast<double>(m), d});
  }
  return rep;
}

CurveReport llt_curve(const std::vector<unsigned>& ms,
                      const std::vector<unsigned>& ns) {
  CurveReport rep;
  rep.label = "llt";
  rep.columns = {"n", "m", "residual_exact", "residual_approx"};
  for (unsigned m : ms) {
    for (unsigned n : ns) {
      rep.rows.push_back({static_cast<double>(n), static_cast<double>(m),
                          dist::llt_residual(n, m, false),
                          dist::llt_residual(n, m, true)});
    }
  }
  return rep;
}

CurveReport tv_curve(unsigned n, const std::vector<unsigned>& ms) {
  CurveReport rep;
  rep.label = "tv";
  rep.columns = {"m", "tv", "bound"};
  rep.metadata["n"] = std::to_string(n);
  const dist::ExactPMF perm = dist::permutation_inversion_pmf(n);
  for (unsigned m : ms) {
    const dist::Rational tv = dist::tv_distance(dist::exact_pmf(n, m), perm);
    const dist::Rational bound = dist::tv_bound(n, m);
    if (tv > bound) throw std::logic_error("tv_curve: TV bound violated");
    rep.rows.push_back({static_cast<double>(m), tv.get_d(), bound.get_d()});
  }
  return rep;
}

CfProbe cf_probe(unsigned n, unsigned m, unsigned theta_grid_size) {
  if (n < 2 || m < 2) throw std::domain_error("cf_probe: n, m >= 2 required");
  if (theta_grid_size < 16) {
    throw std::domain_error("cf_probe: at least 16 grid points per regime");
  }
  const qpoly::CoeffPoly g = qpoly::galois_poly(n, m);
  const double total = g.value_at_one().get_d();
  auto neg_log_phi = [&](double theta) {
    const double mag = std::abs(qpoly::eval_unit_circle(g, theta)) / total;
    return -std::log(mag);
  };
  CfProbe probe;
  probe.c_hat_small = std::numeric_limits<double>::infinity();
  probe.c_hat_large = std::numeric_limits<double>::infinity();
  const double n3 = static_cast<double>(n) * n * n;
  // logarithmic grid on (0, 1/n], theta = 0 excluded since |phi(0)| = 1
  for (unsigned i = 0; i < theta_grid_size; ++i) {
    const double theta =
        (1.0 / n) * std::pow(2.0, -static_cast<double>(theta_grid_size - 1 - i) / 4);
    probe.c_hat_small =
        std::min(probe.c_hat_small, neg_log_phi(theta) / (n3 * theta * theta));
  }
  // uniform grid on [1/n, pi]
  for (unsigned i = 0; i < theta_grid_size; ++i) {
    const double t = static_cast<double>(i) / (theta_grid_size - 1);
    const double theta = 1.0 / n + t * (std::numbers::pi - 1.0 / n);
    probe.c_hat_large = std::min(probe.c_hat_large, neg_log_phi(theta) / n);
  }
  return probe;
}

FerrersJointReport ferrers_joint_check(unsigned n, unsigned reps,
                                       std::uint64_t master_seed) {
  if (n < 4 || reps < 10'000) {
    throw std::domain_error("ferrers_joint_check: n >= 4, reps >= 10^4");
  }
  const double dn = n;
  const double area_center = dn * dn / 8;
  const double area_scale = std::sqrt(dn * dn * dn / 48);
  const double height_center = dn / 2;
  const double height_scale = std::sqrt(dn / 4);
  double sa = 0, sh = 0, sah = 0, sa2 = 0, sh2 = 0;
  double raw_area = 0, raw_height = 0, raw_height2 = 0;
  for (unsigned r = 0; r < reps; ++r) {
    sampler::SampleStream s(master_seed, r);
    const auto f = sampler::sample_ferrers(n, s);
    const double za = (f.area - area_center) / area_scale;
    const double zh = (f.height - height_center) / height_scale;
    sa += za;
    sh += zh;
    sa2 += za * za;
    sh2 += zh * zh;
    sah += za * zh;
    raw_area += f.area;
    raw_height += f.height;
    raw_height2 += static_cast<double>(f.height - 1) * (f.height - 1);
  }
  const double R = reps;
  const double ma = sa / R, mh = sh / R;
  const double va = sa2 / R - ma * ma, vh = sh2 / R - mh * mh;
  FerrersJointReport rep;
  rep.n = n;
  rep.reps = reps;
  rep.corr = (sah / R - ma * mh) / std::sqrt(va * vh);
  rep.area_mean = raw_area / R;
  // exact mean (n^2+7n+8)/8, sd of the sample mean from the exact variance
  const double area_mean_exact = (dn * dn + 7 * dn + 8) / 8;
  const double area_var_exact = dn * (dn - 1) * (2 * dn + 5) / 96;
  rep.area_mean_z =
      (rep.area_mean - area_mean_exact) / std::sqrt(area_var_exact / R);
  rep.height_mean = raw_height / R;
  rep.height_mean_z =
      (rep.height_mean - (dn / 2 + 1)) / std::sqrt(dn / 4 / R);
  // height - 1 ~ Bin(n, 1/2)
  const double mh1 = raw_height / R - 1;
  rep.height_var = raw_height2 / R - mh1 * mh1;
  // SE of the sample variance of Bin(n,1/2): sqrt((mu4 - var^2)/reps),
  // mu4 = n/16 (3n - 2) for the symmetric binomial
  const double var_exact = dn / 4;
  const double mu4 = dn * (3 * dn - 2) / 16;
  rep.height_var_z =
      (rep.height_var - var_exact) / std::sqrt((mu4 - var_exact * var_exact) / R);
  return rep;
}

double chi_square_stat(const std::vector<long>& observed,
                       const dist::ExactPMF& expected, long total,
                       long* degrees_of_freedom, double min_expected) {
  // pool consecutive cells until each pooled cell has a large enough
  // expected count
  std::vector<double> exp_cells, obs_cells;
  double e_acc = 0, o_acc = 0;
  const std::size_t len =
      std::max(observed.size(), expected.numerators.size());
  for (std::size_t k = 0; k < len; ++k) {
    e_acc += expected.prob(static_cast<long>(k)).get_d() * total;
    o_acc += k < observed.size() ? observed[k] : 0;
    if (e_acc >= min_expected) {
      exp_cells.push_back(e_acc);
      obs_cells.push_back(o_acc);
      e_acc = o_acc = 0;
    }
  }
  if (e_acc > 0 || o_acc > 0) {
    if (exp_cells.empty()) throw std::domain_error("chi_square_stat: no cells");
    exp_cells.back() += e_acc;
    obs_cells.back() += o_acc;
  }
  double stat = 0;
  for (std::size_t i = 0; i < exp_cells.size(); ++i) {
    const double d = obs_cells[i] - exp_cells[i];
    stat += d * d / exp_cells[i];
  }
  if (degrees_of_freedom) {
    *degrees_of_freedom = static_cast<long>(exp_cells.size()) - 1;
  }
  return stat;
}

double chi_square_critical(long degrees_of_freedom, double alpha) {
  boost::math::chi_squared dist(static_cast<double>(degrees_of_freedom));
  return boost::math::quantile(dist, 1.0 - alpha);
}

}  // namespace galois::analysis
