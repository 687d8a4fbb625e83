#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "galois/combinat.hpp"

namespace galois::sampler {

// Deterministic seeded source with independent substreams: identical
// (master_seed, stream_index) reproduces the identical draw sequence on any
// platform (the draws below bypass the implementation-defined standard
// distributions).
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t master_seed, std::uint64_t stream_index = 0);

  std::uint64_t next_u64();
  // uniform on {1,...,m}, unbiased via rejection
  int uniform_letter(int m);
  // 53-bit uniform in (0,1)
  double uniform_unit();

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

struct UPair {
  int x;     // uniform on {1,...,m}
  double y;  // uniform on (0,1), pairwise distinct within a sample
};

struct BatchRow {
  long v = 0;                    // inversion count
  std::vector<long> counts;      // per-letter occurrence counts N_1..N_m
};

combinat::Word sample_word(unsigned n, int m, SampleStream& s);

// y-values regenerated on collision so they are pairwise distinct
std::vector<UPair> sample_upairs(unsigned n, int m, SampleStream& s);

// identical to inversions(w); mirrors the pair-sum framing
long v_statistic(const combinat::Word& w);

// sum over ordered pairs of 1{x_i > x_j} 1{y_i < y_j}, computed by sorting
// the letters by ascending y and counting inversions.
// Throws std::invalid_argument on duplicate y-values.
long u_statistic(std::span<const UPair> pairs);

struct FerrersSample {
  long area = 0;
  long height = 0;
};

// uniform over diagrams of semiperimeter n+2, via a uniform path of length n
FerrersSample sample_ferrers(unsigned n, SampleStream& s);

// first Hoeffding projection: -(2/m)(x - (m+1)/2)(y - 1/2)
double hoeffding_xi(int x, double y, int m);

// reps independent (inversion count, letter counts) samples; rep r uses
// substream r so the output is independent of any batching of the reps
std::vector<BatchRow> batch_joint(unsigned n, int m, unsigned reps,
                                  std::uint64_t master_seed);

// CSV with a reproducibility metadata header and "rep,V,N1,...,Nm" columns
std::string batch_to_csv(const std::vector<BatchRow>& rows, unsigned n, int m,
                         std::uint64_t master_seed);
std::string batch_to_json(const std::vector<BatchRow>& rows, unsigned n, int m,
                          std::uint64_t master_seed);

}  // namespace galois::sampler
