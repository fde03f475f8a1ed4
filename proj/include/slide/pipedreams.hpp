#ifndef SLIDE_PIPEDREAMS_HPP
#define SLIDE_PIPEDREAMS_HPP

#include <set>
#include <string>
#include <vector>

#include "slide/polynomial.hpp"

namespace slide {

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Reading order: top row to bottom row, left to right within a row.
struct ReadingOrderLess {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.row != b.row) return a.row > b.row;
    return a.col < b.col;
  }
};

using CrossSet = std::set<Cell, ReadingOrderLess>;

// Reading word of a cross set: the cross at (r,c) records the letter r+c-1.
std::vector<int> reading_word(const CrossSet& crosses);

// Pipe dream with crosses allowed below the x-axis (rows <= 0).  The reading
// word must be reduced; every column is >= 1 and every letter r+c-1 >= 1.
class VirtualPipeDream {
 public:
  explicit VirtualPipeDream(CrossSet crosses);

  const CrossSet& crosses() const { return crosses_; }
  const Permutation& shape() const { return shape_; }
  int cross_count() const { return static_cast<int>(crosses_.size()); }
  int min_row() const;  // 0 on the empty dream
  bool is_real() const { return crosses_.empty() || min_row() >= 1; }

  friend bool operator==(const VirtualPipeDream& a, const VirtualPipeDream& b);
  friend bool operator<(const VirtualPipeDream& a, const VirtualPipeDream& b);

 private:
  CrossSet crosses_;
  Permutation shape_;
};

// Reduced pipe dream in the first quadrant: rows >= 1.
class PipeDream {
 public:
  explicit PipeDream(CrossSet crosses);

  const CrossSet& crosses() const { return crosses_; }
  const Permutation& shape() const { return shape_; }
  int cross_count() const { return static_cast<int>(crosses_.size()); }

  // Cross counts per row, row 1 first, length degree(shape)-1.
  WeakComposition weight() const;

  friend bool operator==(const PipeDream& a, const PipeDream& b) {
    return a.crosses_ == b.crosses_;
  }
  friend bool operator<(const PipeDream& a, const PipeDream& b);

 private:
  CrossSet crosses_;
  Permutation shape_;
};

// All pipe dreams of shape w, as the disjoint union over reduced words of the
// row-monotone cross placements reading to that word.
std::vector<PipeDream> enumerate_pipe_dreams(const Permutation& w);

// Independent enumerator: breadth-first closure of the bottom dream (code
// flush left) under ladder moves.  Used to cross-check the primary one.
std::vector<PipeDream> enumerate_pipe_dreams_ladder(const Permutation& w);

// Westernmost cross of every occupied row sits in column 1 or weakly west of
// some cross one row up.
bool is_quasi_yamanouchi_pd(const CrossSet& crosses);
inline bool is_quasi_yamanouchi_pd(const PipeDream& P) {
  return is_quasi_yamanouchi_pd(P.crosses());
}
inline bool is_quasi_yamanouchi_pd(const VirtualPipeDream& P) {
  return is_quasi_yamanouchi_pd(P.crosses());
}

std::vector<PipeDream> enumerate_qpd(const Permutation& w);

// Generating function of PD(w) in max(last descent, 1) variables.
Polynomial schubert_polynomial(const Permutation& w);

// Repeatedly move a whole row of crosses northwest while it has no cross in
// column 1 and sits strictly east of the row above; the fixed point is
// quasi-Yamanouchi and the shape is preserved.
PipeDream destandardize_pd(const PipeDream& P);

// Fundamental slide expansion of the Schubert polynomial, indexed by the
// weights of quasi-Yamanouchi pipe dreams.
SlideExpansion schubert_to_fundamental_slide(const Permutation& w);

ReducedWord standardize_pd(const PipeDream& P);
ReducedWord standardize_pd(const VirtualPipeDream& P);

// Left inverse of standardization: greedily re-seats a reduced word as a
// (possibly virtual) quasi-Yamanouchi pipe dream.
VirtualPipeDream sit(const ReducedWord& sigma);

// inv(w) - max(L(w)) + delta(w) - first descent, where delta(w) = 0 exactly
// when max(L(w)) recurs strictly after the first descent.  Undefined (throws
// std::domain_error) on the identity.
int eta(const Permutation& w);

// |QPD(1^m x w)| for m = 0..m_max.
std::vector<long long> qpd_count_profile(const Permutation& w, int m_max);

// Crosses as '+', elbows as '.', rows from the top; row r spans columns
// 1..degree-r.
std::string render_ascii(const PipeDream& P);

}  // namespace slide

#endif
