#include "slide/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace slide {

QsymExpansion flatten_expansion(const SlideExpansion& e) {
  Basis target;
  switch (e.basis()) {
    case Basis::monomial_slide: target = Basis::monomial_qsym; break;
    case Basis::fundamental_slide: target = Basis::fundamental_qsym; break;
    default: throw std::invalid_argument("flatten_expansion: not a slide basis");
  }
  QsymExpansion out(target);
  for (const auto& [k, c] : e.terms()) out.add(flatten(k), c);
  return out;
}

QsymExpansion stanley_via_reduced_words(const Permutation& w) {
  QsymExpansion out(Basis::fundamental_qsym);
  for (const auto& sigma : reduced_words(w))
    out.add(descent_composition(sigma.indices()), 1);
  return out;
}

QsymExpansion stanley_via_stable_slide(const Permutation& w) {
  if (w.is_identity()) {
    QsymExpansion out(Basis::fundamental_qsym);
    out.add(StrongComposition(), 1);
    return out;
  }
  int level = std::max(eta(w), 0);
  return flatten_expansion(schubert_to_fundamental_slide(embed_left(w, level)));
}

long long zeta_strong(const StrongComposition& alpha, const StrongComposition& beta) {
  return std::min(alpha.size() + beta.length(), static_cast<long long>(alpha.length()) + beta.size());
}

long long zeta_weak(const WeakComposition& a_in, const WeakComposition& b_in) {
  const int n = std::max(a_in.length(), b_in.length());
  const WeakComposition a = a_in.padded(n), b = b_in.padded(n);
  auto [A, B] = encode_words(a, b);
  // reachable[0][t]: largest run index of the t-th A-letter over all shuffles
  // of the encoded words; likewise reachable[1] for B.  Prepending zeros
  // shifts every letter but preserves relative order, so these maxima do not
  // depend on the shift level.
  std::vector<std::vector<int>> reachable{std::vector<int>(A.size() + 1, 0),
                                          std::vector<int>(B.size() + 1, 0)};
  for (const auto& C : all_tagged_shuffles(A, B)) {
    int run = 0, na = 0, nb = 0;
    const auto& letters = C.letters();
    const auto& from_b = C.from_b();
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i == 0 || letters[i] < letters[i - 1]) ++run;
      if (from_b[i]) {
        ++nb;
        reachable[1][static_cast<size_t>(nb)] =
            std::max(reachable[1][static_cast<size_t>(nb)], run);
      } else {
        ++na;
        reachable[0][static_cast<size_t>(na)] =
            std::max(reachable[0][static_cast<size_t>(na)], run);
      }
    }
  }
  // at position i the first |a_1..a_i| letters of A must land within the
  // first i + m runs, and symmetrically for b
  long long z = 0;
  long long seen_a = 0, seen_b = 0;
  for (int i = 1; i <= n; ++i) {
    if (a[i - 1] > 0) {
      seen_a += a[i - 1];
      z = std::max(z, static_cast<long long>(reachable[0][static_cast<size_t>(seen_a)]) - i);
    }
    if (b[i - 1] > 0) {
      seen_b += b[i - 1];
      z = std::max(z, static_cast<long long>(reachable[1][static_cast<size_t>(seen_b)]) - i);
    }
  }
  return z;
}

std::vector<long long> slide_product_stabilization_profile(const WeakComposition& a,
                                                           const WeakComposition& b,
                                                           int m_max) {
  std::vector<long long> out;
  for (int m = 0; m <= m_max; ++m)
    out.push_back(static_cast<long long>(
        shuffle_set(a.prepend_zeros(m), b.prepend_zeros(m)).size()));
  return out;
}

long long zeta_perm(const Permutation& u, const Permutation& v) {
  if (u.is_identity() || v.is_identity()) return 0;
  long long z = std::max(u.inversions() + eta(v), v.inversions() + eta(u));
  return std::max(z, 0LL);
}

namespace {

SlideExpansion prepend_zero(const SlideExpansion& e) {
  SlideExpansion out(e.basis());
  for (const auto& [k, c] : e.terms()) out.add(k.prepend_zeros(1), c);
  return out;
}

}  // namespace

int schubert_product_stabilization_oracle(const Permutation& u, const Permutation& v,
                                          int m_max) {
  SlideExpansion prev = schubert_product_slide(u, v);
  for (int m = 0; m <= m_max; ++m) {
    SlideExpansion next =
        schubert_product_slide(embed_left(u, m + 1), embed_left(v, m + 1));
    if (next == prepend_zero(prev)) return m;
    prev = std::move(next);
  }
  return -1;
}

QsymExpansion stanley_product(const Permutation& u, const Permutation& v) {
  if (u.is_identity()) return stanley_via_reduced_words(v);
  if (v.is_identity()) return stanley_via_reduced_words(u);
  int level = static_cast<int>(zeta_perm(u, v));
  return flatten_expansion(
      schubert_product_slide(embed_left(u, level), embed_left(v, level)));
}

}  // namespace slide
