// Command-line front end: exact q-polynomial computations, inversion
// distributions, convergence diagnostics and reproducible Monte Carlo.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galois/analysis.hpp"
#include "galois/combinat.hpp"
#include "galois/dist.hpp"
#include "galois/qpoly.hpp"
#include "galois/report.hpp"
#include "galois/sampler.hpp"

namespace {

using galois::report::kDefaultSeed;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::string full = path;
    if (const char* dir = std::getenv("GALOIS_OUT_DIR");
        dir && !path.empty() && path.front() != '/') {
      full = std::string(dir) + "/" + path;
    }
    std::ofstream os(full);
    if (!os) throw std::runtime_error("cannot open output file: " + full);
    os << text;
  }
};

std::vector<unsigned> parse_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (out.empty()) throw std::domain_error("empty integer list: '" + s + "'");
  return out;
}

int cmd_poly(unsigned n, unsigned m, int binom_k, const std::string& parts,
             const Output& out) {
  galois::qpoly::CoeffPoly p;
  if (!parts.empty()) {
    const auto ks = parse_list(parts);
    galois::qpoly::Composition c({ks.begin(), ks.end()});
    p = galois::qpoly::q_multinomial(c);
    n = c.total();
    m = c.length();
  } else if (binom_k >= 0) {
    p = galois::qpoly::q_binomial(n, static_cast<unsigned>(binom_k));
    m = 2;
  } else {
    p = galois::qpoly::galois_poly(n, m);
  }
  out.write(galois::qpoly::to_json(p, n, m));
  return 0;
}

int cmd_moments(unsigned n, unsigned m, const Output& out) {
  const auto closed = galois::dist::closed_form_moments(n, m);
  const auto empirical =
      galois::dist::moments_from_pmf(galois::dist::exact_pmf(n, m));
  const bool equal = closed.mean == empirical.mean &&
                     closed.variance == empirical.variance;
  std::ostringstream os;
  os << "{\"closed_form\":" << galois::dist::to_json(closed)
     << ",\"from_pmf\":" << galois::dist::to_json(empirical)
     << ",\"exact_equal\":" << (equal ? "true" : "false") << "}";
  out.write(os.str());
  return equal ? 0 : 1;
}

int cmd_bijections(unsigned max_n, const Output& out) {
  std::ostringstream os;
  bool all_ok = true;
  for (unsigned n = 0; n <= max_n; ++n) {
    const auto g = galois::qpoly::galois_poly(n, 2);
    std::vector<galois::qpoly::BigInt> hist(g.size(), 0);
    galois::combinat::WordEnumerator en(n, 2);
    bool ok = true;
    while (auto w = en.next()) {
      const auto p = galois::combinat::word_to_path(*w);
      const auto f = galois::combinat::path_to_ferrers(p);
      ok = ok && galois::combinat::path_to_word(p).letters == w->letters;
      ok = ok &&
           galois::combinat::to_string(galois::combinat::ferrers_to_path(f)) ==
               galois::combinat::to_string(p);
      ok = ok && galois::combinat::area_under(p) ==
                     galois::combinat::inversions_naive(*w);
      ok = ok && f.area() == galois::combinat::area_left(p) +
                                 static_cast<long>(n) + 1;
      ok = ok && f.semiperimeter() == static_cast<long>(n) + 2;
      ++hist[galois::combinat::area_under(p)];
    }
    ok = ok && galois::qpoly::CoeffPoly(std::move(hist)) == g;
    os << "n=" << n << (ok ? " ok" : " FAIL") << '\n';
    all_ok = all_ok && ok;
  }
  out.write(os.str());
  return all_ok ? 0 : 1;
}

int cmd_sample(const std::string& kind, unsigned n, unsigned m, unsigned reps,
               std::uint64_t seed, const std::string& format,
               const Output& out) {
  if (kind == "word") {
    const auto rows = galois::sampler::batch_joint(n, static_cast<int>(m),
                                                   reps, seed);
    out.write(format == "csv"
                  ? galois::sampler::batch_to_csv(rows, n, m, seed)
                  : galois::sampler::batch_to_json(rows, n, m, seed));
    return 0;
  }
  std::ostringstream os;
  if (kind == "u") {
    if (format == "csv") {
      os << "# n=" << n << " m=" << m << " seed=" << seed
         << " streams=per-rep\nrep,U\n";
      for (unsigned r = 0; r < reps; ++r) {
        galois::sampler::SampleStream s(seed, r);
        const auto pairs = galois::sampler::sample_upairs(n, m, s);
        os << r << ',' << galois::sampler::u_statistic(pairs) << '\n';
      }
    } else {
      os << "{\"n\":" << n << ",\"m\":" << m << ",\"seed\":" << seed
         << ",\"u\":[";
      for (unsigned r = 0; r < reps; ++r) {
        galois::sampler::SampleStream s(seed, r);
        const auto pairs = galois::sampler::sample_upairs(n, m, s);
        if (r) os << ',';
        os << galois::sampler::u_statistic(pairs);
      }
      os << "]}";
    }
  } else if (kind == "ferrers") {
    if (format == "csv") {
      os << "# n=" << n << " seed=" << seed
         << " streams=per-rep\nrep,area,height\n";
      for (unsigned r = 0; r < reps; ++r) {
        galois::sampler::SampleStream s(seed, r);
        const auto f = galois::sampler::sample_ferrers(n, s);
        os << r << ',' << f.area << ',' << f.height << '\n';
      }
    } else {
      os << "{\"n\":" << n << ",\"seed\":" << seed << ",\"rows\":[";
      for (unsigned r = 0; r < reps; ++r) {
        galois::sampler::SampleStream s(seed, r);
        const auto f = galois::sampler::sample_ferrers(n, s);
        if (r) os << ',';
        os << "{\"area\":" << f.area << ",\"height\":" << f.height << "}";
      }
      os << "]}";
    }
  } else {
    throw std::domain_error("sample: kind must be word, u or ferrers");
  }
  out.write(os.str());
  return 0;
}

int cmd_report(std::uint64_t seed, const Output& out) {
  const auto results = galois::report::run_acceptance(seed);
  std::ostringstream os;
  bool all_pass = true;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " --" << r.detail
       << '\n';
    all_pass = all_pass && r.pass;
  }
  out.write(os.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "galois: generalized Galois polynomials, inversion statistics and "
      "limit-theorem diagnostics"};
  app.require_subcommand(1);

  unsigned n = 2, m = 2, max_n = 10, grid = 64, reps = 1000;
  int binom_k = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string parts, ns_list = "16,32,64", ms_list = "2,3", kind = "word";
  std::string format = "json";
  Output out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", out.path,
                    "output file (relative paths resolve under $GALOIS_OUT_DIR)");
  };

  auto* poly = app.add_subcommand("poly", "Galois / q-binomial / q-multinomial polynomial");
  poly->add_option("--n", n);
  poly->add_option("--m", m);
  poly->add_option("--binomial-k", binom_k, "emit q_binomial(n, k) instead");
  poly->add_option("--parts", parts, "composition k1,k2,... for a q-multinomial");
  add_common(poly);

  auto* pmf = app.add_subcommand("pmf", "exact inversion distribution");
  pmf->add_option("--n", n)->required();
  pmf->add_option("--m", m)->required();
  add_common(pmf);

  auto* moments = app.add_subcommand("moments", "closed-form vs from-PMF moments");
  moments->add_option("--n", n)->required();
  moments->add_option("--m", m)->required();
  add_common(moments);

  auto* tv = app.add_subcommand("tv", "TV distance to the permutation limit");
  tv->add_option("--n", n)->required();
  tv->add_option("--ms", ms_list, "alphabet sizes, comma-separated");
  add_common(tv);

  auto* llt = app.add_subcommand("llt", "local-limit residual grid");
  llt->add_option("--ns", ns_list);
  llt->add_option("--ms", ms_list);
  add_common(llt);

  auto* clt = app.add_subcommand("clt", "Kolmogorov distance curve");
  clt->add_option("--m", m)->required();
  clt->add_option("--ns", ns_list);
  add_common(clt);

  auto* cf = app.add_subcommand("cf", "characteristic-function decay probe");
  cf->add_option("--n", n)->required();
  cf->add_option("--m", m)->required();
  cf->add_option("--grid", grid, "theta grid points per regime");
  add_common(cf);

  auto* bij = app.add_subcommand("bijections", "exhaustive bijection checks");
  bij->add_option("--max-n", max_n);
  add_common(bij);

  auto* sample = app.add_subcommand("sample", "seeded Monte Carlo batches");
  sample->add_option("--kind", kind)->check(CLI::IsMember({"word", "u", "ferrers"}));
  sample->add_option("--n", n)->required();
  sample->add_option("--m", m);
  sample->add_option("--reps", reps);
  sample->add_option("--seed", seed);
  add_common(sample);

  auto* report = app.add_subcommand("report", "full verification sweep");
  report->add_option("--seed", seed);
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (poly->parsed()) return cmd_poly(n, m, binom_k, parts, out);
    if (pmf->parsed()) {
      out.write(galois::dist::to_json(galois::dist::exact_pmf(n, m), n, m));
      return 0;
    }
    if (moments->parsed()) return cmd_moments(n, m, out);
    if (tv->parsed()) {
      const auto curve = galois::analysis::tv_curve(n, parse_list(ms_list));
      out.write(format == "csv" ? curve.to_csv() : curve.to_json());
      return 0;
    }
    if (llt->parsed()) {
      const auto curve =
          galois::analysis::llt_curve(parse_list(ms_list), parse_list(ns_list));
      out.write(format == "csv" ? curve.to_csv() : curve.to_json());
      return 0;
    }
    if (clt->parsed()) {
      const auto curve = galois::analysis::clt_curve(m, parse_list(ns_list));
      out.write(format == "csv" ? curve.to_csv() : curve.to_json());
      return 0;
    }
    if (cf->parsed()) {
      const auto probe = galois::analysis::cf_probe(n, m, grid);
      std::ostringstream os;
      os.precision(17);
      os << "{\"n\":" << n << ",\"m\":" << m
         << ",\"c_hat_small\":" << probe.c_hat_small
         << ",\"c_hat_large\":" << probe.c_hat_large << "}";
      out.write(os.str());
      return 0;
    }
    if (bij->parsed()) return cmd_bijections(max_n, out);
    if (sample->parsed()) return cmd_sample(kind, n, m, reps, seed, format, out);
    if (report->parsed()) return cmd_report(seed, out);
  } catch (const std::domain_error& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
