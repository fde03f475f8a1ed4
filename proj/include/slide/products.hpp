#ifndef SLIDE_PRODUCTS_HPP
#define SLIDE_PRODUCTS_HPP

#include <set>
#include <utility>
#include <vector>

#include "slide/pipedreams.hpp"
#include "slide/polynomial.hpp"

namespace slide {

// Word over the positive integers whose letters carry an A/B origin tag.
class ShuffleWord {
 public:
  ShuffleWord(std::vector<int> letters, std::vector<bool> from_b);

  const std::vector<int>& letters() const { return letters_; }
  const std::vector<bool>& from_b() const { return from_b_; }

  struct RunProfile {
    StrongComposition des;  // run lengths
    WeakComposition des_a;  // A-letters per run
    WeakComposition des_b;  // B-letters per run
  };
  RunProfile runs() const;

  friend bool operator==(const ShuffleWord&, const ShuffleWord&) = default;
  friend bool operator<(const ShuffleWord& a, const ShuffleWord& b) {
    return a.letters_ < b.letters_ || (a.letters_ == b.letters_ && a.from_b_ < b.from_b_);
  }

 private:
  std::vector<int> letters_;
  std::vector<bool> from_b_;
};

// ---- placement engine ----

// Dominance-minimal placement of parts into n slots: each part j carries one
// share per constraint, and for every constraint the prefix sums of the placed
// shares must dominate the target.  The result is validated against an
// exhaustive search whenever the candidate count is below a fixed threshold,
// asserting that the minimal valid placement is unique.
WeakComposition minimal_bump_placement(const std::vector<int>& parts,
                                       const std::vector<std::vector<int>>& shares,
                                       const std::vector<WeakComposition>& targets,
                                       int n);

// ---- quasi-shuffle / quasi-slide ----

// Iterative (index-pair dynamic program) quasi-shuffle; the reference
// recursion lives alongside for cross-checking.
QsymExpansion quasi_shuffle(const StrongComposition& alpha, const StrongComposition& beta);
QsymExpansion quasi_shuffle_recursive(const StrongComposition& alpha,
                                      const StrongComposition& beta);

// Pairs (gamma_a, gamma_b) of equal-length weak compositions with
// flat(gamma_x) = flat(x), gamma_x >= x, and gamma_a + gamma_b strictly
// positive entrywise.
std::vector<std::pair<WeakComposition, WeakComposition>> quasi_shuffle_set(
    const WeakComposition& a, const WeakComposition& b);

WeakComposition bump_quasi(const WeakComposition& a, const WeakComposition& b,
                           const WeakComposition& gamma_a,
                           const WeakComposition& gamma_b);

// Structure constants of the monomial slide basis.
SlideExpansion quasi_slide_product(const WeakComposition& a, const WeakComposition& b);

// ---- shuffle / slide ----

std::set<std::vector<int>> shuffle_words(const std::vector<int>& A,
                                         const std::vector<int>& B);

// All distinct shuffles with per-letter origin tags.
std::vector<ShuffleWord> all_tagged_shuffles(const std::vector<int>& A,
                                             const std::vector<int>& B);

// A = (2n-1)^{a_1} ... (3)^{a_{n-1}} (1)^{a_n}, B the even analogue.
std::pair<std::vector<int>, std::vector<int>> encode_words(const WeakComposition& a,
                                                           const WeakComposition& b);

// Shuffles whose per-run A-letter profile dominates a and B-letter profile
// dominates b.
std::vector<ShuffleWord> shuffle_set(const WeakComposition& a, const WeakComposition& b);

WeakComposition bump_slide(const WeakComposition& a, const WeakComposition& b,
                           const ShuffleWord& C);

// Structure constants of the fundamental slide basis.
SlideExpansion slide_product(const WeakComposition& a, const WeakComposition& b);

// ---- quasisymmetric products ----

QsymExpansion fundamental_qsym_product(const StrongComposition& alpha,
                                       const StrongComposition& beta);
QsymExpansion monomial_qsym_product(const StrongComposition& alpha,
                                    const StrongComposition& beta);

// ---- Schubert products ----

// Fundamental slide expansion of S_u * S_v, summed over pairs of
// quasi-Yamanouchi pipe dreams.
SlideExpansion schubert_product_slide(const Permutation& u, const Permutation& v);

// Peel a fundamental-slide expansion into the Schubert basis.  With
// require_positive set, an intermediate negative coefficient throws
// std::domain_error; otherwise negative output coefficients are permitted.
SchubertExpansion slide_expansion_to_schubert(const SlideExpansion& e,
                                              bool require_positive = false);

// Parallelism cap for the pair loops; results are identical at any setting.
void set_max_threads(unsigned n);
unsigned max_threads();

}  // namespace slide

#endif
