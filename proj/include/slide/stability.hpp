#ifndef SLIDE_STABILITY_HPP
#define SLIDE_STABILITY_HPP

#include <vector>

#include "slide/products.hpp"

namespace slide {

// Replace every index of a slide expansion by its flattening.
QsymExpansion flatten_expansion(const SlideExpansion& e);

// Multiset of descent compositions of the reduced words of w, as a
// fundamental quasisymmetric expansion.
QsymExpansion stanley_via_reduced_words(const Permutation& w);

// Flattened fundamental slide expansion of the Schubert polynomial of
// 1^{max(eta(w),0)} x w; agrees with the reduced-word construction.
QsymExpansion stanley_via_stable_slide(const Permutation& w);

// min(|alpha| + l(beta), l(alpha) + |beta|): the maximal descent-composition
// length over shuffles of disjoint representative words.
long long zeta_strong(const StrongComposition& alpha, const StrongComposition& beta);

// Smallest m at which SS(0^m x a, 0^m x b) exhausts all shuffles: the maximum
// over nonzero positions i of either composition of (run index reachable by
// the last letter of that prefix) - i.
long long zeta_weak(const WeakComposition& a, const WeakComposition& b);

// |SS(0^m x a, 0^m x b)| for m = 0..m_max.
std::vector<long long> slide_product_stabilization_profile(const WeakComposition& a,
                                                           const WeakComposition& b,
                                                           int m_max);

// max(inv(u) + eta(v), inv(v) + eta(u)), clamped at zero; zero when either
// argument is the identity.
long long zeta_perm(const Permutation& u, const Permutation& v);

// Smallest m <= m_max at which the slide expansion of the product at level
// m+1 equals the level-m expansion with a zero prepended to every index;
// -1 when no such m exists in range.
int schubert_product_stabilization_oracle(const Permutation& u, const Permutation& v,
                                          int m_max);

// Product of Stanley symmetric functions: the flattened slide expansion of
// the Schubert product at the stabilization level.
QsymExpansion stanley_product(const Permutation& u, const Permutation& v);

}  // namespace slide

#endif
