#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace galois::combinat {

// Word over the alphabet {1,...,m}.
struct Word {
  std::vector<int> letters;
  int alphabet = 1;

  Word() = default;
  Word(std::vector<int> w, int m);
  std::size_t length() const { return letters.size(); }
};

enum class Step : char { E = 'E', N = 'N' };

struct LatticePath {
  std::vector<Step> steps;

  std::size_t length() const { return steps.size(); }
};

// Left-justified rows, weakly decreasing, all >= 1, top row first.
struct FerrersDiagram {
  std::vector<long> rows;

  FerrersDiagram() = default;
  explicit FerrersDiagram(std::vector<long> r);  // validates
  long height() const { return static_cast<long>(rows.size()); }
  long width() const { return rows.empty() ? 0 : rows.front(); }
  long semiperimeter() const { return height() + width(); }
  long area() const;
};

// #{(i,j) : i < j, w_i > w_j}
long inversions_naive(const Word& w);
// prefix-count over the alphabet, O(n log m)
long inversions(const Word& w);

// m = 2 only: letter 1 -> E, letter 2 -> N
LatticePath word_to_path(const Word& w);
Word path_to_word(const LatticePath& p);

// area under the path: per E-step, number of preceding N-steps
long area_under(const LatticePath& p);
// area between the path and the y-axis: per N-step, number of preceding E-steps
long area_left(const LatticePath& p);

// Bijection between length-n paths and Ferrers diagrams of semiperimeter n+2,
// via the augmented boundary (prepend E, append N).
// area(f) = area_left(p) + n + 1, height(f) = #N + 1, width(f) = #E + 1.
FerrersDiagram path_to_ferrers(const LatticePath& p);
LatticePath ferrers_to_path(const FerrersDiagram& f);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Lexicographic enumeration of all m^n words.  Construction refuses when
// m^n exceeds the budget.
class WordEnumerator {
 public:
  WordEnumerator(unsigned n, int m,
                 std::uint64_t budget = kDefaultEnumerationBudget);
  std::optional<Word> next();
  std::uint64_t total() const { return total_; }

 private:
  unsigned n_;
  int m_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  std::vector<int> current_;
};

// text formats for the CLI
std::string to_string(const Word& w);        // comma-separated letters
std::string to_string(const LatticePath& p); // string over {E,N}
std::string to_string(const FerrersDiagram& f);  // comma-separated rows
LatticePath parse_path(const std::string& s);

}  // namespace galois::combinat
