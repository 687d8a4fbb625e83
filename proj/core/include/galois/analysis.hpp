#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galois/dist.hpp"

namespace galois::analysis {

// Labeled grid of (parameters, statistics) rows, deterministic given the
// configuration echoed in metadata.
struct CurveReport {
  std::string label;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> metadata;

  std::string to_csv() const;
  std::string to_json() const;
};

// Kolmogorov distance of the standardized exact inversion distribution to
// N(0,1), per n, standardized with the closed-form moments.
CurveReport clt_curve(unsigned m, const std::vector<unsigned>& ns);

// Local-limit residual grid, exact and approximate moment variants.
CurveReport llt_curve(const std::vector<unsigned>& ms,
                      const std::vector<unsigned>& ns);

// Exact TV distance to the permutation-inversion distribution together with
// the 1 - (m)_n/m^n bound, per m.  Throws std::logic_error if any row
// violates the bound.
CurveReport tv_curve(unsigned n, const std::vector<unsigned>& ms);

struct CfProbe {
  double c_hat_small = 0;  // min over 0 < |theta| <= 1/n of -log|phi| / (n^3 theta^2)
  double c_hat_large = 0;  // min over 1/n <= |theta| <= pi of -log|phi| / n
};

// Characteristic-function decay probe for phi(theta) = m^{-n} G_n^(m)(e^{i theta}).
CfProbe cf_probe(unsigned n, unsigned m, unsigned theta_grid_size = 64);

struct FerrersJointReport {
  unsigned n = 0;
  unsigned reps = 0;
  double corr = 0;           // of standardized area and height
  double area_mean = 0;
  double area_mean_z = 0;    // against (n^2+7n+8)/8
  double height_mean = 0;
  double height_mean_z = 0;  // against n/2 + 1
  double height_var = 0;
  double height_var_z = 0;   // against n/4
};

FerrersJointReport ferrers_joint_check(unsigned n, unsigned reps,
                                       std::uint64_t master_seed);

// chi-square goodness-of-fit utilities (cells with small expected count are
// pooled into their neighbor)
double chi_square_stat(const std::vector<long>& observed,
                       const dist::ExactPMF& expected, long total,
                       long* degrees_of_freedom,
                       double min_expected = 5.0);
double chi_square_critical(long degrees_of_freedom, double alpha);

}  // namespace galois::analysis
