#ifndef SLIDE_POLYNOMIAL_HPP
#define SLIDE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "slide/bigint.hpp"
#include "slide/core.hpp"

namespace slide {

enum class Basis {
  monomial,
  monomial_slide,
  fundamental_slide,
  schubert,
  monomial_qsym,
  fundamental_qsym,
  schur,
};

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Graded, then reverse lexicographic: a precedes b when deg(a) < deg(b), or on
// equal degree when the highest-index differing entry of a exceeds that of b.
// Dominance is a suborder: b >= a entrywise-prefix implies a <= b here.
struct TermOrderLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over the integers with a fixed variable count.
class Polynomial {
 public:
  using TermMap = std::map<std::vector<int>, BigInt, TermOrderLess>;

  explicit Polynomial(int nvars = 0);
  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial one(int nvars);
  static Polynomial monomial(const WeakComposition& exp, int nvars,
                             const BigInt& coeff = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }
  BigInt coeff(const std::vector<int>& exp) const;

  void add_term(const std::vector<int>& exp, const BigInt& c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator*=(const BigInt& c);

  Polynomial padded(int n) const;      // view in more variables
  Polynomial restricted(int k) const;  // set x_{k+1},...,x_n to zero

  // Semantic equality: trailing variables with zero exponent do not matter.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  std::string str() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Formal integer-linear combination over a combinatorial index set.
template <typename Key>
class Expansion {
 public:
  using TermMap = std::map<Key, BigInt>;

  explicit Expansion(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  BigInt coeff(const Key& k) const {
    auto it = terms_.find(canonical(k));
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add(const Key& k, const BigInt& c) {
    if (c == 0) return;
    Key kk = canonical(k);
    auto it = terms_.find(kk);
    if (it == terms_.end()) {
      terms_.emplace(std::move(kk), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Expansion& other, const BigInt& c) {
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  bool all_nonnegative() const {
    for (const auto& [k, v] : terms_)
      if (v < 0) return false;
    return true;
  }

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

 private:
  static Key canonical(const Key& k) {
    if constexpr (std::is_same_v<Key, WeakComposition>)
      return k.trimmed();
    else
      return k;
  }

  Basis basis_;
  TermMap terms_;
};

using SlideExpansion = Expansion<WeakComposition>;
using QsymExpansion = Expansion<StrongComposition>;
using SchubertExpansion = Expansion<Permutation>;

// ---- quasisymmetric polynomials ----

Polynomial expand_monomial_qsym(const StrongComposition& alpha, int n);
Polynomial expand_fundamental_qsym(const StrongComposition& alpha, int n);

// ---- slide polynomials ----

// Monomial slide polynomial in length(a) variables: sum of x^b over b >= a
// with flat(b) = flat(a).
Polynomial expand_monomial_slide(const WeakComposition& a);
// Fundamental slide polynomial: sum of x^b over b >= a with flat(b)
// refining flat(a).
Polynomial expand_fundamental_slide(const WeakComposition& a);

// Coefficient-1 expansion of the fundamental slide polynomial into monomial
// slide polynomials, indexed by strongly-dominating refinements.
SlideExpansion fundamental_slide_to_monomial_slide(const WeakComposition& a);

// Triangular basis conversion by peeling the term-order-minimal monomial.
SlideExpansion to_monomial_slide_basis(const Polynomial& f);
SlideExpansion to_fundamental_slide_basis(const Polynomial& f);

bool is_symmetric(const Polynomial& f);
bool is_quasisymmetric(const Polynomial& f);

// Evaluate a slide-basis expansion as a polynomial in n variables.
Polynomial slide_expansion_to_polynomial(const SlideExpansion& e, int n);
// Evaluate a quasisymmetric-basis expansion in n variables.
Polynomial qsym_expansion_to_polynomial(const QsymExpansion& e, int n);

}  // namespace slide

#endif
