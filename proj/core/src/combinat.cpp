#include "galois/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace galois::combinat {

Word::Word(std::vector<int> w, int m) : letters(std::move(w)), alphabet(m) {
  if (m < 1) throw std::domain_error("Word: alphabet size must be >= 1");
  for (int x : letters) {
    if (x < 1 || x > m) throw std::domain_error("Word: letter out of range");
  }
}

FerrersDiagram::FerrersDiagram(std::vector<long> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1) throw std::domain_error("FerrersDiagram: rows must be >= 1");
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw std::domain_error("FerrersDiagram: rows must be weakly decreasing");
    }
  }
}

long FerrersDiagram::area() const {
  long a = 0;
  for (long r : rows) a += r;
  return a;
}

long inversions_naive(const Word& w) {
  long inv = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    for (std::size_t j = i + 1; j < w.letters.size(); ++j) {
      if (w.letters[i] > w.letters[j]) ++inv;
    }
  }
  return inv;
}

long inversions(const Word& w) {
  // Fenwick tree over the alphabet: for each letter, count previously seen
  // strictly larger letters.
  const int m = w.alphabet;
  std::vector<long> tree(m + 1, 0);
  auto add = [&](int i) {
    for (; i <= m; i += i & -i) ++tree[i];
  };
  auto prefix = [&](int i) {
    long s = 0;
    for (; i > 0; i -= i & -i) s += tree[i];
    return s;
  };
  long inv = 0;
  long seen = 0;
  for (int x : w.letters) {
    inv += seen - prefix(x);
    add(x);
    ++seen;
  }
  return inv;
}

LatticePath word_to_path(const Word& w) {
  if (w.alphabet != 2) throw std::domain_error("word_to_path: requires m = 2");
  LatticePath p;
  p.steps.reserve(w.letters.size());
  for (int x : w.letters) p.steps.push_back(x == 1 ? Step::E : Step::N);
  return p;
}

Word path_to_word(const LatticePath& p) {
  std::vector<int> letters;
  letters.reserve(p.steps.size());
  for (Step s : p.steps) letters.push_back(s == Step::E ? 1 : 2);
  return Word(std::move(letters), 2);
}

long area_under(const LatticePath& p) {
  long north = 0, area = 0;
  for (Step s : p.steps) {
    if (s == Step::N) ++north;
    else area += north;
  }
  return area;
}

long area_left(const LatticePath& p) {
  long east = 0, area = 0;
  for (Step s : p.steps) {
    if (s == Step::E) ++east;
    else area += east;
  }
  return area;
}

FerrersDiagram path_to_ferrers(const LatticePath& p) {
  // augmented path E + p + N; each N-step contributes a row equal to the
  // number of E-steps before it, rows listed top (longest) first
  std::vector<long> rows;
  long east = 1;  // prepended E
  for (Step s : p.steps) {
    if (s == Step::E) ++east;
    else rows.push_back(east);
  }
  rows.push_back(east);  // appended N, after every E
  std::reverse(rows.begin(), rows.end());
  return FerrersDiagram(std::move(rows));
}

LatticePath ferrers_to_path(const FerrersDiagram& f) {
  if (f.semiperimeter() < 2) {
    throw std::domain_error("ferrers_to_path: semiperimeter must be >= 2");
  }
  // rebuild the augmented path bottom row first, then strip the leading E
  // and trailing N
  std::vector<Step> steps;
  long east = 0;
  for (auto it = f.rows.rbegin(); it != f.rows.rend(); ++it) {
    for (; east < *it; ++east) steps.push_back(Step::E);
    steps.push_back(Step::N);
  }
  if (steps.front() != Step::E || steps.back() != Step::N) {
    throw std::domain_error("ferrers_to_path: invalid diagram");
  }
  LatticePath p;
  p.steps.assign(steps.begin() + 1, steps.end() - 1);
  return p;
}

WordEnumerator::WordEnumerator(unsigned n, int m, std::uint64_t budget)
    : n_(n), m_(m) {
  if (m < 1) throw std::domain_error("WordEnumerator: m >= 1 required");
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(m)) {
      throw std::domain_error(
          "WordEnumerator: m^n exceeds the enumeration budget of " +
          std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(m);
  }
  if (total > budget) {
    throw std::domain_error(
        "WordEnumerator: m^n exceeds the enumeration budget of " +
        std::to_string(budget));
  }
  total_ = total;
  current_.assign(n_, 1);
}

std::optional<Word> WordEnumerator::next() {
  if (emitted_ >= total_) return std::nullopt;
  Word w(current_, m_);
  ++emitted_;
  // odometer increment, last position fastest
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (current_[i] < m_) {
      ++current_[i];
      break;
    }
    current_[i] = 1;
  }
  return w;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ',';
    os << w.letters[i];
  }
  return os.str();
}

std::string to_string(const LatticePath& p) {
  std::string s;
  for (Step st : p.steps) s.push_back(static_cast<char>(st));
  return s;
}

std::string to_string(const FerrersDiagram& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    if (i) os << ',';
    os << f.rows[i];
  }
  return os.str();
}

LatticePath parse_path(const std::string& s) {
  LatticePath p;
  for (char c : s) {
    if (c == 'E') p.steps.push_back(Step::E);
    else if (c == 'N') p.steps.push_back(Step::N);
    else throw std::domain_error("parse_path: steps must be E or N");
  }
  return p;
}

}  // namespace galois::combinat
