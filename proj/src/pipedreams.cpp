#include "slide/pipedreams.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slide {

std::vector<int> reading_word(const CrossSet& crosses) {
  std::vector<int> word;
  word.reserve(crosses.size());
  for (const Cell& c : crosses) word.push_back(c.row + c.col - 1);
  return word;
}

namespace {

Permutation shape_of(const CrossSet& crosses) {
  for (const Cell& c : crosses) {
    if (c.col < 1) throw std::invalid_argument("pipe dream column must be >= 1");
    if (c.row + c.col - 1 < 1)
      throw std::invalid_argument("pipe dream cell below the main antidiagonal");
  }
  auto prod = reduced_word_product(reading_word(crosses));
  if (!prod) throw std::invalid_argument("crosses do not form a reduced pipe dream");
  return *prod;
}

}  // namespace

VirtualPipeDream::VirtualPipeDream(CrossSet crosses)
    : crosses_(std::move(crosses)), shape_(shape_of(crosses_)) {}

int VirtualPipeDream::min_row() const {
  int m = 0;
  bool first = true;
  for (const Cell& c : crosses_) {
    if (first || c.row < m) m = c.row;
    first = false;
  }
  return m;
}

bool operator==(const VirtualPipeDream& a, const VirtualPipeDream& b) {
  return a.crosses_ == b.crosses_;
}

bool operator<(const VirtualPipeDream& a, const VirtualPipeDream& b) {
  return std::lexicographical_compare(a.crosses_.begin(), a.crosses_.end(),
                                      b.crosses_.begin(), b.crosses_.end(),
                                      ReadingOrderLess());
}

PipeDream::PipeDream(CrossSet crosses)
    : crosses_(std::move(crosses)), shape_(shape_of(crosses_)) {
  for (const Cell& c : crosses_)
    if (c.row < 1) throw std::invalid_argument("pipe dream row must be >= 1");
}

WeakComposition PipeDream::weight() const {
  int n = std::max(shape_.degree() - 1, 0);
  std::vector<int> w(static_cast<size_t>(n), 0);
  for (const Cell& c : crosses_) {
    if (c.row > n) throw std::logic_error("cross above the weight window");
    ++w[static_cast<size_t>(c.row - 1)];
  }
  return WeakComposition(std::move(w));
}

bool operator<(const PipeDream& a, const PipeDream& b) {
  return std::lexicographical_compare(a.crosses_.begin(), a.crosses_.end(),
                                      b.crosses_.begin(), b.crosses_.end(),
                                      ReadingOrderLess());
}

std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w) {
  std::vector<PipeDream> out;
  for (const ReducedWord& sigma : reduced_words(w)) {
    const auto& idx = sigma.indices();
    const int l = sigma.length();
    std::vector<int> rows(static_cast<size_t>(l), 0);
    // rows weakly decrease along the reading word and drop strictly at
    // non-ascents; the column on antidiagonal i is forced.
    std::function<void(int)> rec = [&](int j) {
      if (j == l) {
        CrossSet cells;
        for (int t = 0; t < l; ++t) {
          int r = rows[static_cast<size_t>(t)];
          cells.insert(Cell{r, idx[static_cast<size_t>(t)] - r + 1});
        }
        out.emplace_back(std::move(cells));
        return;
      }
      int hi = j == 0 ? idx[static_cast<size_t>(j)]
                      : std::min(idx[static_cast<size_t>(j)] > idx[static_cast<size_t>(j - 1)]
                                     ? rows[static_cast<size_t>(j - 1)]
                                     : rows[static_cast<size_t>(j - 1)] - 1,
                                 idx[static_cast<size_t>(j)]);
      for (int r = hi; r >= 1; --r) {
        rows[static_cast<size_t>(j)] = r;
        rec(j + 1);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> enumerate_pipe_dreams_ladder(const Permutation& w) {
  WeakComposition code = lehmer_code(w);
  CrossSet bottom;
  for (int i = 1; i <= code.length(); ++i)
    for (int c = 1; c <= code[i - 1]; ++c) bottom.insert(Cell{i, c});
  PipeDream start(std::move(bottom));
  if (!(start.shape() == w))
    throw std::logic_error("bottom pipe dream has the wrong shape");

  std::set<std::vector<Cell>> visited;
  auto key = [](const CrossSet& s) { return std::vector<Cell>(s.begin(), s.end()); };
  std::vector<PipeDream> out;
  std::vector<CrossSet> queue{start.crosses()};
  visited.insert(key(start.crosses()));
  while (!queue.empty()) {
    CrossSet cur = std::move(queue.back());
    queue.pop_back();
    out.emplace_back(cur);
    auto has = [&](int r, int c) { return cur.count(Cell{r, c}) > 0; };
    for (const Cell& cell : cur) {
      const int i = cell.row, j = cell.col;
      if (has(i, j + 1)) continue;
      // walk down the double column until it breaks
      int m = i - 1;
      while (m >= 1 && has(m, j) && has(m, j + 1)) --m;
      if (m < 1) continue;
      if (has(m, j) || has(m, j + 1)) continue;
      CrossSet next = cur;
      next.erase(Cell{i, j});
      next.insert(Cell{m, j + 1});
      PipeDream moved(next);  // validates reducedness
      if (!(moved.shape() == w)) throw std::logic_error("ladder move changed the shape");
      if (visited.insert(key(next)).second) queue.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_quasi_yamanouchi_pd(const CrossSet& crosses) {
  std::map<int, std::pair<int, int>> span;  // row -> (min col, max col)
  for (const Cell& c : crosses) {
    auto it = span.find(c.row);
    if (it == span.end())
      span.emplace(c.row, std::make_pair(c.col, c.col));
    else {
      it->second.first = std::min(it->second.first, c.col);
      it->second.second = std::max(it->second.second, c.col);
    }
  }
  for (const auto& [row, mm] : span) {
    if (mm.first == 1) continue;
    auto up = span.find(row + 1);
    if (up == span.end() || up->second.second < mm.first) return false;
  }
  return true;
}

std::vector<PipeDream> enumerate_qpd(const Permutation& w) {
  std::vector<PipeDream> out;
  for (const auto& P : enumerate_pipe_dreams(w))
    if (is_quasi_yamanouchi_pd(P)) out.push_back(P);
  return out;
}

Polynomial schubert_polynomial(const Permutation& w) {
  int n = std::max(w.last_descent(), 1);
  Polynomial out(n);
  for (const auto& P : enumerate_pipe_dreams(w))
    out += Polynomial::monomial(P.weight().trimmed(), n);
  return out;
}

PipeDream destandardize_pd(const PipeDream& P) {
  CrossSet cur = P.crosses();
  bool moved = true;
  while (moved) {
    moved = false;
    std::map<int, std::pair<int, int>> span;
    for (const Cell& c : cur) {
      auto it = span.find(c.row);
      if (it == span.end())
        span.emplace(c.row, std::make_pair(c.col, c.col));
      else {
        it->second.first = std::min(it->second.first, c.col);
        it->second.second = std::max(it->second.second, c.col);
      }
    }
    for (const auto& [row, mm] : span) {
      if (mm.first == 1) continue;
      auto up = span.find(row + 1);
      if (up != span.end() && up->second.second >= mm.first) continue;
      CrossSet next;
      for (const Cell& c : cur)
        next.insert(c.row == row ? Cell{row + 1, c.col - 1} : c);
      if (next.size() != cur.size()) throw std::logic_error("destandardize collision");
      cur = std::move(next);
      moved = true;
      break;
    }
  }
  PipeDream out{cur};
  if (!(out.shape() == P.shape()))
    throw std::logic_error("destandardize changed the shape");
  return out;
}

SlideExpansion schubert_to_fundamental_slide(const Permutation& w) {
  SlideExpansion out(Basis::fundamental_slide);
  for (const auto& P : enumerate_qpd(w)) out.add(P.weight(), 1);
  return out;
}

namespace {

ReducedWord standardize_crosses(const CrossSet& crosses) {
  return ReducedWord(reading_word(crosses));
}

}  // namespace

ReducedWord standardize_pd(const PipeDream& P) { return standardize_crosses(P.crosses()); }
ReducedWord standardize_pd(const VirtualPipeDream& P) {
  return standardize_crosses(P.crosses());
}

VirtualPipeDream sit(const ReducedWord& sigma) {
  CrossSet crosses;
  int prev_row = 0, prev_letter = 0;
  bool first = true;
  for (int letter : sigma.indices()) {
    int row;
    if (first) {
      row = letter;  // column 1
      first = false;
    } else if (letter > prev_letter) {
      row = prev_row;  // extend the current row eastward
    } else {
      row = std::min(prev_row - 1, letter);  // northernmost row strictly south
    }
    crosses.insert(Cell{row, letter - row + 1});
    prev_row = row;
    prev_letter = letter;
  }
  return VirtualPipeDream(std::move(crosses));
}

int eta(const Permutation& w) {
  if (w.is_identity()) throw std::domain_error("eta is undefined on the identity");
  WeakComposition code = lehmer_code(w);
  long long inv = code.size();
  int maxL = 0;
  for (int p : code.parts()) maxL = std::max(maxL, p);
  int fd = w.first_descent();
  int delta = 1;
  for (int i = fd + 1; i <= code.length(); ++i)
    if (code[i - 1] == maxL) {
      delta = 0;
      break;
    }
  return static_cast<int>(inv) - maxL + delta - fd;
}

std::vector<long long> qpd_count_profile(const Permutation& w, int m_max) {
  std::vector<long long> out;
  for (int m = 0; m <= m_max; ++m)
    out.push_back(static_cast<long long>(enumerate_qpd(embed_left(w, m)).size()));
  return out;
}

std::string render_ascii(const PipeDream& P) {
  const int n = P.shape().degree();
  std::ostringstream os;
  for (int r = n - 1; r >= 1; --r) {
    for (int c = 1; c <= n - r; ++c)
      os << (P.crosses().count(Cell{r, c}) ? '+' : '.');
    if (r > 1) os << '\n';
  }
  return os.str();
}

}  // namespace slide
