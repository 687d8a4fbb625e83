#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace galois::dist {

using Rational = mpq_class;

// Finite distribution on {0,...,len-1} with exact rational probabilities
// P(k) = numerators[k] / denominator.
struct ExactPMF {
  std::vector<mpz_class> numerators;
  mpz_class denominator;

  Rational prob(long k) const;
  std::size_t support_size() const { return numerators.size(); }
  bool is_normalized() const;  // sum of numerators equals the denominator
};

struct MomentSummary {
  Rational mean;
  Rational variance;
  unsigned n = 0;
  unsigned m = 0;
};

// Distribution of the inversion count of a uniform word of length n over an
// m-letter alphabet: numerators are the Galois polynomial coefficients,
// denominator m^n.
ExactPMF exact_pmf(unsigned n, unsigned m);

// Same distribution from an already-computed Galois polynomial (e.g. out of
// a galois_family table).
ExactPMF pmf_from_coeffs(std::vector<mpz_class> numerators, unsigned n,
                         unsigned m);

// mean n(n-1)(m-1)/(4m), variance n(n-1)(2n+5)(m^2-1)/(72 m^2)
MomentSummary closed_form_moments(unsigned n, unsigned m);

MomentSummary moments_from_pmf(const ExactPMF& p);

// Inversions of a uniform random permutation of {1,...,n}.
ExactPMF permutation_inversion_pmf(unsigned n);

// (1/2) sum |p(k) - r(k)| over the union of supports, exact
Rational tv_distance(const ExactPMF& p, const ExactPMF& r);

// 1 - (m)_n / m^n with (m)_n the falling factorial; equals 1 when n > m
Rational tv_bound(unsigned n, unsigned m);

// sup_k | sigma P(G = k) - (2 pi)^{-1/2} exp(-(k-mu)^2 / (2 sigma^2)) |
// over k in {-1, 0, ..., deg+1}.  With use_approx_moments, mu and sigma^2
// are replaced by (m-1)n^2/(4m) and (m^2-1)n^3/(36 m^2).
// Throws std::domain_error when the variance is zero (n <= 1 or m == 1).
double llt_residual(unsigned n, unsigned m, bool use_approx_moments = false);

// sup over support boundaries of |CDF_p(k) - Phi((k + 1/2 - mean)/sd)|
double kolmogorov_distance_to_normal(const ExactPMF& p, double mean, double sd);

double normal_cdf(double z);

// {"n":..., "m":..., "denominator": "...", "numerators": ["..."]}
std::string to_json(const ExactPMF& p, unsigned n, unsigned m);
std::string to_json(const MomentSummary& s);

}  // namespace galois::dist
