#include "galois/qpoly.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace galois::qpoly {

namespace {
void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

CoeffPoly::CoeffPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
  for (const auto& c : coeffs_) {
    if (c < 0) throw std::domain_error("CoeffPoly: negative coefficient");
  }
}

CoeffPoly CoeffPoly::constant(BigInt c) {
  CoeffPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

const BigInt& CoeffPoly::coeff(std::size_t i) const {
  static const BigInt zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

BigInt CoeffPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool CoeffPoly::is_palindromic() const {
  std::size_t k = coeffs_.size();
  for (std::size_t i = 0; i < k / 2; ++i) {
    if (coeffs_[i] != coeffs_[k - 1 - i]) return false;
  }
  return true;
}

CoeffPoly CoeffPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  CoeffPoly r;
  r.coeffs_.assign(coeffs_.size() + k, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r;
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

// schoolbook convolution; exact, adequate at desk-scale degrees
CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  CoeffPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  BigInt tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  return r;
}

Composition::Composition(std::vector<unsigned> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::domain_error("Composition: needs m >= 1 parts");
}

unsigned Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

CoeffPoly q_integer(unsigned l) {
  return CoeffPoly(std::vector<BigInt>(l, 1));
}

CoeffPoly q_factorial(unsigned k) {
  CoeffPoly r = CoeffPoly::one();
  for (unsigned i = 1; i <= k; ++i) r = r * q_integer(i);
  return r;
}

namespace {
// Pascal-type recurrence B(n,k) = B(n-1,k-1) + q^k B(n-1,k); row n in place
std::vector<CoeffPoly> q_binomial_row(unsigned n) {
  std::vector<CoeffPoly> row{CoeffPoly::one()};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<CoeffPoly> next(i + 1);
    next[0] = CoeffPoly::one();
    next[i] = CoeffPoly::one();
    for (unsigned k = 1; k < i; ++k) {
      next[k] = row[k - 1] + row[k].shifted(k);
    }
    row = std::move(next);
  }
  return row;
}
}  // namespace

CoeffPoly q_binomial(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("q_binomial: k > n");
  return q_binomial_row(n)[k];
}

CoeffPoly q_multinomial(const Composition& c) {
  CoeffPoly r = CoeffPoly::one();
  unsigned prefix = 0;
  for (unsigned k : c.parts) {
    prefix += k;
    r = r * q_binomial(prefix, k);
  }
  return r;
}

std::vector<std::vector<CoeffPoly>> galois_family(unsigned n, unsigned m) {
  if (m < 1) throw std::domain_error("galois_family: m >= 1 required");
  // rows[nn] = q-binomial row nn
  std::vector<std::vector<CoeffPoly>> rows(n + 1);
  rows[0] = {CoeffPoly::one()};
  for (unsigned nn = 1; nn <= n; ++nn) {
    rows[nn].resize(nn + 1);
    rows[nn][0] = CoeffPoly::one();
    rows[nn][nn] = CoeffPoly::one();
    for (unsigned k = 1; k < nn; ++k) {
      rows[nn][k] = rows[nn - 1][k - 1] + rows[nn - 1][k].shifted(k);
    }
  }
  std::vector<std::vector<CoeffPoly>> g(m + 1,
                                        std::vector<CoeffPoly>(n + 1));
  for (unsigned nn = 0; nn <= n; ++nn) g[1][nn] = CoeffPoly::one();
  for (unsigned mm = 2; mm <= m; ++mm) {
    for (unsigned nn = 0; nn <= n; ++nn) {
      CoeffPoly acc;
      for (unsigned j = 0; j <= nn; ++j) {
        acc = acc + rows[nn][j] * g[mm - 1][nn - j];
      }
      g[mm][nn] = std::move(acc);
    }
  }
  return g;
}

CoeffPoly galois_poly(unsigned n, unsigned m) {
  return galois_family(n, m)[m][n];
}

namespace {
void for_each_composition(unsigned n, unsigned m,
                          std::vector<unsigned>& parts,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  if (parts.size() + 1 == m) {
    parts.push_back(n);
    f(parts);
    parts.pop_back();
    return;
  }
  for (unsigned k = 0; k <= n; ++k) {
    parts.push_back(k);
    for_each_composition(n - k, m, parts, f);
    parts.pop_back();
  }
}
}  // namespace

CoeffPoly galois_poly_by_compositions(unsigned n, unsigned m) {
  if (m < 1) throw std::domain_error("galois_poly: m >= 1 required");
  CoeffPoly acc;
  std::vector<unsigned> parts;
  for_each_composition(n, m, parts, [&](const std::vector<unsigned>& p) {
    acc = acc + q_multinomial(Composition(p));
  });
  return acc;
}

std::complex<double> eval_unit_circle(const CoeffPoly& p, double theta) {
  const std::complex<double> q = std::polar(1.0, theta);
  std::complex<double> acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * q + it->get_d();
  }
  return acc;
}

std::string to_json(const CoeffPoly& p, unsigned n, unsigned m) {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << m << ",\"coeffs\":[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << '"' << p.coeffs()[i].get_str() << '"';
  }
  os << "]}";
  return os.str();
}

}  // namespace galois::qpoly
