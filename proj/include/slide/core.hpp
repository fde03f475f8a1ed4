#ifndef SLIDE_CORE_HPP
#define SLIDE_CORE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slide {

// Malformed input text, as opposed to well-formed input that fails a domain
// check.  The CLI maps the former to exit code 2 and the latter to 1.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A finite sequence of nonnegative integers.  Indexes slide bases, exponent
// vectors, pipe-dream weights.  Equality and ordering ignore trailing zeros;
// the ordering is graded (by sum) then reverse lexicographic.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  WeakComposition padded(int n) const;   // append zeros up to length n
  WeakComposition trimmed() const;       // drop trailing zeros
  WeakComposition prepend_zeros(int m) const;
  WeakComposition append_zeros(int m) const;
  bool all_zero() const;
  // Nonzero entries form a contiguous prefix-aligned interval.
  bool is_quasi_flat() const;
  int last_nonzero_index() const;        // 1-based, 0 when all entries vanish

  std::string str() const;               // "[0,2,0,3]"
  static WeakComposition parse(const std::string& text);

  friend bool operator==(const WeakComposition& a, const WeakComposition& b);
  friend bool operator<(const WeakComposition& a, const WeakComposition& b);

 private:
  std::vector<int> parts_;
};

// A finite sequence of strictly positive integers (the empty one is allowed).
class StrongComposition {
 public:
  StrongComposition() = default;
  explicit StrongComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;
  int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  bool is_partition() const;             // weakly decreasing

  std::string str() const;
  static StrongComposition parse(const std::string& text);

  friend bool operator==(const StrongComposition&, const StrongComposition&) = default;
  friend bool operator<(const StrongComposition& a, const StrongComposition& b);

 private:
  std::vector<int> parts_;
};

// Permutation of {1..N} in one-line notation.  Canonical form trims trailing
// fixed points, so S_n sits inside S_{n+1} without bookkeeping; the identity
// is stored as [1].
class Permutation {
 public:
  Permutation();
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity() { return Permutation(); }

  const std::vector<int>& one_line() const { return one_line_; }
  int degree() const { return static_cast<int>(one_line_.size()); }
  int apply(int i) const;                // w(i); fixed beyond the stored window
  bool is_identity() const;
  Permutation inverse() const;
  long long inversions() const;
  std::vector<int> descents() const;     // 1-based positions i with w_i > w_{i+1}
  int first_descent() const;             // 0 when none
  int last_descent() const;              // 0 when none
  Permutation left_mul_transposition(int k) const;   // s_k * w (swap values k, k+1)
  Permutation right_mul_transposition(int k) const;  // w * s_k (swap positions k, k+1)
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  std::string str() const;               // "2,4,1,5,3"
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // graded by inversion count, then one-line lexicographic
  friend bool operator<(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> one_line_;
  void canonicalize();
};

// Index sequence (i_1,...,i_l) with target = s_{i_l} ... s_{i_1} and l equal
// to the inversion count of the target.
class ReducedWord {
 public:
  explicit ReducedWord(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  const Permutation& target() const { return target_; }
  int length() const { return static_cast<int>(indices_.size()); }

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.indices_ == b.indices_;
  }
  friend bool operator<(const ReducedWord& a, const ReducedWord& b) {
    return a.indices_ < b.indices_;
  }

 private:
  std::vector<int> indices_;
  Permutation target_;
};

// ---- composition operations ----

StrongComposition flatten(const WeakComposition& a);

// b dominates a: every prefix sum of b is >= the matching prefix sum of a.
// The shorter argument is padded with trailing zeros.
bool dominates(const WeakComposition& b, const WeakComposition& a);

// b strongly dominates a: b >= a and b is the dominance-minimal composition
// among all c >= a with flat(c) = flat(b).
bool strongly_dominates(const WeakComposition& b, const WeakComposition& a);

// Dominance-minimal placement of the parts of phi into n slots subject to
// dominating `over`.  Throws std::invalid_argument when no placement exists.
WeakComposition min_dominating_placement(const StrongComposition& phi,
                                         const WeakComposition& over, int n);

// beta refines alpha: consecutive blocks of beta sum to the parts of alpha.
bool refines(const StrongComposition& beta, const StrongComposition& alpha);

std::vector<StrongComposition> compositions_of(int k);
std::vector<StrongComposition> refinements_of(const StrongComposition& alpha);

// Lengths of the successive increasing runs of a word, a new run starting
// exactly when the next letter is strictly smaller than the current one.
StrongComposition descent_composition(const std::vector<int>& word);

// ---- permutation operations ----

WeakComposition lehmer_code(const Permutation& w);
Permutation code_to_permutation(const WeakComposition& a);

// Grassmannian permutation with values i + lambda_{n+1-i} for 1 <= i <= n.
// Throws std::invalid_argument unless lambda is a partition with at most n parts.
Permutation grassmannian(const StrongComposition& lambda, int n);

// Product s_{i_l} ... s_{i_1}; nullopt when the word is not reduced.
std::optional<Permutation> reduced_word_product(const std::vector<int>& indices);

// All reduced words of w, by recursive removal of left descents; sorted by
// index sequence.
std::vector<ReducedWord> reduced_words(const Permutation& w);

Permutation embed_left(const Permutation& w, int m);   // 1^m x w
Permutation embed_right(const Permutation& w, int m);  // w x 1^m (identity on canonical forms)

namespace detail {

// Visit all increasing k-subsets of {1..n} (1-based positions).
template <typename Fn>
void for_each_placement(int k, int n, Fn&& fn) {
  std::vector<int> pos(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int j, int lo) {
    if (j == k) {
      fn(static_cast<const std::vector<int>&>(pos));
      return;
    }
    for (int p = lo; p <= n - (k - j - 1); ++p) {
      pos[static_cast<size_t>(j)] = p;
      rec(j + 1, p + 1);
    }
  };
  if (k <= n) rec(0, 1);
}

}  // namespace detail

}  // namespace slide

#endif
