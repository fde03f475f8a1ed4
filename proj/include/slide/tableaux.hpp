#ifndef SLIDE_TABLEAUX_HPP
#define SLIDE_TABLEAUX_HPP

#include <utility>
#include <vector>

#include "slide/polynomial.hpp"

namespace slide {

// Semistandard Young tableau in French convention: rows_ lists row 1 (bottom)
// first; rows weakly increase left to right, columns strictly increase bottom
// to top.
class Tableau {
 public:
  Tableau(StrongComposition shape, std::vector<std::vector<int>> rows);

  const StrongComposition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const;  // 1-based
  int cell_count() const;
  int max_entry() const;

  WeakComposition weight(int n) const;  // counts of 1..n
  bool is_standard() const;

  std::string str() const;  // one row per line, bottom row last

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend bool operator<(const Tableau& a, const Tableau& b) {
    return a.rows_ < b.rows_;
  }

 private:
  StrongComposition shape_;
  std::vector<std::vector<int>> rows_;
};

std::vector<Tableau> enumerate_ssyt(const StrongComposition& lambda, int n);
std::vector<Tableau> enumerate_syt(const StrongComposition& lambda);

// Run-length composition read off 1..k, a new run starting whenever i+1 sits
// weakly left of i.  Throws std::invalid_argument unless T is standard.
StrongComposition syt_descent_composition(const Tableau& T);

// The leftmost i sits weakly left of some i-1, for every value i > 1 present.
bool is_quasi_yamanouchi(const Tableau& T);
std::vector<Tableau> enumerate_qyt(const StrongComposition& lambda, int n);

// While the leftmost i sits strictly right of the rightmost i-1 (or i-1 is
// absent), decrement every i; the fixed point is quasi-Yamanouchi.
Tableau destandardize_tableau(const Tableau& T);

// Strong-composition weight of a quasi-Yamanouchi tableau.
StrongComposition qyt_weight(const Tableau& T);

Polynomial schur_via_ssyt(const StrongComposition& lambda, int n);
Polynomial schur_via_syt(const StrongComposition& lambda, int n);
// Also returns the fundamental quasisymmetric expansion indexed by
// quasi-Yamanouchi weights; every term is a nonzero polynomial in n variables.
std::pair<Polynomial, QsymExpansion> schur_via_qyt(const StrongComposition& lambda,
                                                   int n);

}  // namespace slide

#endif
