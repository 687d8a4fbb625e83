#include "galois/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace galois::sampler {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}
}  // namespace

SampleStream::SampleStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(splitmix64(splitmix64(master_seed) ^
                         splitmix64(stream_index + 0x5851F42D4C957F2DULL))) {}

std::uint64_t SampleStream::next_u64() { return engine_(); }

int SampleStream::uniform_letter(int m) {
  if (m < 1) throw std::domain_error("uniform_letter: m >= 1 required");
  const std::uint64_t um = static_cast<std::uint64_t>(m);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % um;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return static_cast<int>(v % um) + 1;
}

double SampleStream::uniform_unit() {
  double y;
  do {
    y = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  } while (y == 0.0);
  return y;
}

combinat::Word sample_word(unsigned n, int m, SampleStream& s) {
  std::vector<int> letters(n);
  for (auto& x : letters) x = s.uniform_letter(m);
  return combinat::Word(std::move(letters), m);
}

std::vector<UPair> sample_upairs(unsigned n, int m, SampleStream& s) {
  std::vector<UPair> pairs(n);
  std::unordered_set<double> seen;
  seen.reserve(n);
  for (auto& p : pairs) {
    p.x = s.uniform_letter(m);
    do {
      p.y = s.uniform_unit();
    } while (!seen.insert(p.y).second);
  }
  return pairs;
}

long v_statistic(const combinat::Word& w) { return combinat::inversions(w); }

long u_statistic(std::span<const UPair> pairs) {
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pairs[a].y < pairs[b].y; });
  int m = 1;
  for (const auto& p : pairs) m = std::max(m, p.x);
  std::vector<int> letters;
  letters.reserve(pairs.size());
  for (std::size_t i : order) letters.push_back(pairs[i].x);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (pairs[order[i - 1]].y == pairs[order[i]].y) {
      throw std::invalid_argument("u_statistic: duplicate y-values");
    }
  }
  return combinat::inversions(combinat::Word(std::move(letters), m));
}

FerrersSample sample_ferrers(unsigned n, SampleStream& s) {
  combinat::LatticePath p;
  p.steps.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    p.steps.push_back(s.next_u64() & 1 ? combinat::Step::N : combinat::Step::E);
  }
  const combinat::FerrersDiagram f = combinat::path_to_ferrers(p);
  return {f.area(), f.height()};
}

double hoeffding_xi(int x, double y, int m) {
  return -(2.0 / m) * (x - (m + 1) / 2.0) * (y - 0.5);
}

std::vector<BatchRow> batch_joint(unsigned n, int m, unsigned reps,
                                  std::uint64_t master_seed) {
  if (reps < 1) throw std::domain_error("batch_joint: reps >= 1 required");
  std::vector<BatchRow> rows(reps);
  for (unsigned r = 0; r < reps; ++r) {
    SampleStream s(master_seed, r);
    const combinat::Word w = sample_word(n, m, s);
    BatchRow row;
    row.v = combinat::inversions(w);
    row.counts.assign(m, 0);
    for (int x : w.letters) ++row.counts[x - 1];
    rows[r] = std::move(row);
  }
  return rows;
}

std::string batch_to_csv(const std::vector<BatchRow>& rows, unsigned n, int m,
                         std::uint64_t master_seed) {
  std::ostringstream os;
  os << "# n=" << n << " m=" << m << " seed=" << master_seed
     << " streams=per-rep\n";
  os << "rep,V";
  for (int k = 1; k <= m; ++k) os << ",N" << k;
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << r << ',' << rows[r].v;
    for (long c : rows[r].counts) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

std::string batch_to_json(const std::vector<BatchRow>& rows, unsigned n, int m,
                          std::uint64_t master_seed) {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << m << ",\"seed\":" << master_seed
     << ",\"streams\":\"per-rep\",\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << ',';
    os << "{\"rep\":" << r << ",\"V\":" << rows[r].v << ",\"counts\":[";
    for (std::size_t k = 0; k < rows[r].counts.size(); ++k) {
      if (k) os << ',';
      os << rows[r].counts[k];
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace galois::sampler
