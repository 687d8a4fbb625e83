#include "galois/dist.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "galois/qpoly.hpp"

namespace galois::dist {

Rational ExactPMF::prob(long k) const {
  if (k < 0 || k >= static_cast<long>(numerators.size())) return 0;
  Rational r(numerators[k], denominator);
  r.canonicalize();
  return r;
}

bool ExactPMF::is_normalized() const {
  mpz_class s = 0;
  for (const auto& v : numerators) s += v;
  return denominator > 0 && s == denominator;
}

ExactPMF exact_pmf(unsigned n, unsigned m) {
  if (m < 1) throw std::domain_error("exact_pmf: m >= 1 required");
  ExactPMF p;
  p.numerators = qpoly::galois_poly(n, m).coeffs();
  if (p.numerators.empty()) p.numerators.push_back(1);  // n = 0: point mass
  mpz_ui_pow_ui(p.denominator.get_mpz_t(), m, n);
  return p;
}

ExactPMF pmf_from_coeffs(std::vector<mpz_class> numerators, unsigned n,
                         unsigned m) {
  ExactPMF p;
  p.numerators = std::move(numerators);
  if (p.numerators.empty()) p.numerators.push_back(1);
  mpz_ui_pow_ui(p.denominator.get_mpz_t(), m, n);
  return p;
}

MomentSummary closed_form_moments(unsigned n, unsigned m) {
  if (m < 1) throw std::domain_error("closed_form_moments: m >= 1 required");
  MomentSummary s;
  s.n = n;
  s.m = m;
  const mpz_class N = n, M = m;
  s.mean = Rational(N * (N - 1) * (M - 1), 4 * M);
  s.variance = Rational(N * (N - 1) * (2 * N + 5) * (M * M - 1), 72 * M * M);
  s.mean.canonicalize();
  s.variance.canonicalize();
  return s;
}

MomentSummary moments_from_pmf(const ExactPMF& p) {
  MomentSummary s;
  mpz_class first = 0, second = 0;
  for (std::size_t k = 0; k < p.numerators.size(); ++k) {
    first += mpz_class(k) * p.numerators[k];
    second += mpz_class(k) * mpz_class(k) * p.numerators[k];
  }
  s.mean = Rational(first, p.denominator);
  s.mean.canonicalize();
  Rational m2(second, p.denominator);
  m2.canonicalize();
  s.variance = m2 - s.mean * s.mean;
  return s;
}

ExactPMF permutation_inversion_pmf(unsigned n) {
  if (n < 1) throw std::domain_error("permutation_inversion_pmf: n >= 1");
  ExactPMF p;
  p.numerators = qpoly::q_factorial(n).coeffs();
  mpz_fac_ui(p.denominator.get_mpz_t(), n);
  return p;
}

Rational tv_distance(const ExactPMF& p, const ExactPMF& r) {
  const long len = static_cast<long>(
      std::max(p.numerators.size(), r.numerators.size()));
  Rational acc = 0;
  for (long k = 0; k < len; ++k) acc += abs(p.prob(k) - r.prob(k));
  return acc / 2;
}

Rational tv_bound(unsigned n, unsigned m) {
  if (n < 1 || m < 1) throw std::domain_error("tv_bound: n, m >= 1 required");
  if (n > m) return 1;
  mpz_class falling = 1;
  for (unsigned i = 0; i < n; ++i) falling *= m - i;
  mpz_class mn;
  mpz_ui_pow_ui(mn.get_mpz_t(), m, n);
  Rational r(falling, mn);
  r.canonicalize();
  return 1 - r;
}

double llt_residual(unsigned n, unsigned m, bool use_approx_moments) {
  double mu, var;
  if (use_approx_moments) {
    const double dn = n, dm = m;
    mu = (dm - 1) * dn * dn / (4 * dm);
    var = (dm * dm - 1) * dn * dn * dn / (36 * dm * dm);
  } else {
    const MomentSummary s = closed_form_moments(n, m);
    mu = s.mean.get_d();
    var = s.variance.get_d();
  }
  if (var <= 0) throw std::domain_error("llt_residual: degenerate (zero variance)");
  const double sigma = std::sqrt(var);
  const ExactPMF p = exact_pmf(n, m);
  const double norm = 1.0 / std::sqrt(2 * std::numbers::pi);
  double worst = 0;
  for (long k = -1; k <= static_cast<long>(p.numerators.size()); ++k) {
    const double z = (static_cast<double>(k) - mu) / sigma;
    const double gauss = norm * std::exp(-z * z / 2);
    const double diff = std::abs(sigma * p.prob(k).get_d() - gauss);
    worst = std::max(worst, diff);
  }
  return worst;
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double kolmogorov_distance_to_normal(const ExactPMF& p, double mean, double sd) {
  if (sd <= 0) throw std::domain_error("kolmogorov_distance_to_normal: sd > 0");
  Rational cdf = 0;
  double worst = 0;
  for (std::size_t k = 0; k < p.numerators.size(); ++k) {
    cdf += p.prob(static_cast<long>(k));
    const double phi = normal_cdf((static_cast<double>(k) + 0.5 - mean) / sd);
    worst = std::max(worst, std::abs(cdf.get_d() - phi));
  }
  return worst;
}

std::string to_json(const ExactPMF& p, unsigned n, unsigned m) {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << m << ",\"denominator\":\""
     << p.denominator.get_str() << "\",\"numerators\":[";
  for (std::size_t i = 0; i < p.numerators.size(); ++i) {
    if (i) os << ',';
    os << '"' << p.numerators[i].get_str() << '"';
  }
  os << "]}";
  return os.str();
}

namespace {
std::string rational_json(const Rational& r) {
  std::ostringstream os;
  os << "{\"num\":\"" << r.get_num().get_str() << "\",\"den\":\""
     << r.get_den().get_str() << "\"}";
  return os.str();
}
}  // namespace

std::string to_json(const MomentSummary& s) {
  std::ostringstream os;
  os.precision(17);
  os << "{\"n\":" << s.n << ",\"m\":" << s.m
     << ",\"mean\":" << rational_json(s.mean)
     << ",\"variance\":" << rational_json(s.variance)
     << ",\"mean_float\":" << s.mean.get_d()
     << ",\"variance_float\":" << s.variance.get_d() << "}";
  return os.str();
}

}  // namespace galois::dist
