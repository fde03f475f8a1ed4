#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "slide/stability.hpp"

using namespace slide;

namespace {

WeakComposition wc(std::vector<int> v) { return WeakComposition(std::move(v)); }
StrongComposition sc(std::vector<int> v) { return StrongComposition(std::move(v)); }
Permutation pp(const std::string& s) { return Permutation::parse(s); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<WeakComposition> weak_comps(int length, int max_size) {
  std::vector<WeakComposition> out;
  std::vector<int> cur(static_cast<size_t>(length), 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == length) {
      out.push_back(wc(cur));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[static_cast<size_t>(i)] = v;
      rec(i + 1, rem - v);
    }
    cur[static_cast<size_t>(i)] = 0;
  };
  rec(0, max_size);
  return out;
}

QsymExpansion qsym_terms(Basis b, std::vector<std::pair<std::vector<int>, long long>> terms) {
  QsymExpansion e(b);
  for (auto& [k, c] : terms) e.add(sc(k), c);
  return e;
}

// largest descent-composition length over all shuffles of disjoint words
long long max_shuffle_runs(const StrongComposition& alpha, const StrongComposition& beta) {
  std::vector<int> A, B;
  for (int j = 0; j < alpha.length(); ++j)
    for (int t = 0; t < alpha[j]; ++t) A.push_back(2 * (alpha.length() - j) - 1);
  for (int j = 0; j < beta.length(); ++j)
    for (int t = 0; t < beta[j]; ++t) B.push_back(2 * (beta.length() - j));
  long long best = 0;
  for (const auto& C : shuffle_words(A, B))
    best = std::max(best, static_cast<long long>(descent_composition(C).length()));
  return best;
}

}  // namespace

TEST_CASE("stanley symmetric function via reduced words") {
  CHECK(stanley_via_reduced_words(pp("24153")) ==
        qsym_terms(Basis::fundamental_qsym,
                   {{{2, 2}, 1}, {{2, 1, 1}, 1}, {{1, 2, 1}, 2}, {{1, 1, 2}, 1}}));
  CHECK(stanley_via_reduced_words(Permutation::identity()) ==
        qsym_terms(Basis::fundamental_qsym, {{{}, 1}}));
  CHECK(stanley_via_reduced_words(pp("321")) ==
        qsym_terms(Basis::fundamental_qsym, {{{1, 2}, 1}, {{2, 1}, 1}}));
}

TEST_CASE("both stanley constructions agree on S_4") {
  for (const auto& w : all_permutations(4))
    CHECK(stanley_via_stable_slide(w) == stanley_via_reduced_words(w));
}

TEST_CASE("both stanley constructions agree on S_5") {
  for (const auto& w : all_permutations(5))
    CHECK(stanley_via_stable_slide(w) == stanley_via_reduced_words(w));
}

TEST_CASE("zeta on strong compositions") {
  CHECK(zeta_strong(sc({2, 3}), sc({1, 1})) == 4);
  CHECK(zeta_strong(sc({2, 1}), sc({})) == 2);
  std::vector<StrongComposition> comps;
  for (int k = 0; k <= 4; ++k)
    for (const auto& c : compositions_of(k)) comps.push_back(c);
  for (const auto& alpha : comps)
    for (const auto& beta : comps)
      CHECK(zeta_strong(alpha, beta) == max_shuffle_runs(alpha, beta));
}

TEST_CASE("zeta on weak compositions") {
  CHECK(zeta_weak(wc({0, 2, 0, 3}), wc({1, 0, 0, 1})) == 1);
  CHECK(zeta_weak(wc({0, 0}), wc({0, 0})) == 0);
}

TEST_CASE("zeta_weak marks the exact shuffle-set stabilization point") {
  auto comps = weak_comps(3, 3);
  std::mt19937 rng(31);
  std::uniform_int_distribution<size_t> pick(0, comps.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = comps[pick(rng)];
    const auto& b = comps[pick(rng)];
    long long z = zeta_weak(a, b);
    auto profile = slide_product_stabilization_profile(a, b, static_cast<int>(z) + 2);
    long long full = profile.back();
    // constant at the full shuffle count from z on, strictly below before
    for (size_t m = 0; m < profile.size(); ++m) {
      if (static_cast<long long>(m) >= z)
        CHECK(profile[m] == full);
      else
        CHECK(profile[m] < full);
    }
  }
}

TEST_CASE("shuffle-set profile of the worked pair") {
  CHECK(slide_product_stabilization_profile(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}), 2) ==
        std::vector<long long>{14, 21, 21});
  CHECK(slide_product_stabilization_profile(wc({0, 0}), wc({0, 0}), 2) ==
        std::vector<long long>{1, 1, 1});
}

TEST_CASE("zeta on permutations") {
  CHECK(zeta_perm(pp("24153"), pp("21534")) == 4);
  CHECK(zeta_perm(pp("24153"), Permutation::identity()) == 0);
  CHECK(zeta_perm(pp("24153"), pp("2431")) == 5);
}

TEST_CASE("stabilization oracle") {
  CHECK(schubert_product_stabilization_oracle(pp("24153"), pp("21534"), 6) == 4);
  CHECK(schubert_product_stabilization_oracle(Permutation::identity(),
                                              Permutation::identity(), 2) == 0);
}

TEST_CASE("oracle never exceeds zeta_perm on S_3 pairs") {
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      if (u.is_identity() || v.is_identity()) continue;
      long long z = zeta_perm(u, v);
      int observed = schubert_product_stabilization_oracle(u, v, static_cast<int>(z));
      CHECK(observed >= 0);
      CHECK(observed <= z);
    }
}

TEST_CASE("oracle never exceeds zeta_perm on sampled S_4 pairs") {
  auto s4 = all_permutations(4);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
  for (int trial = 0; trial < 16; ++trial) {
    const auto& u = s4[pick(rng)];
    const auto& v = s4[pick(rng)];
    if (u.is_identity() || v.is_identity()) continue;
    long long z = zeta_perm(u, v);
    int observed = schubert_product_stabilization_oracle(u, v, static_cast<int>(z));
    CHECK(observed >= 0);
    CHECK(observed <= z);
  }
}

TEST_CASE("product expansions stabilize with prepended zeros at zeta_perm") {
  Permutation u = pp("24153"), v = pp("2431");
  int z = static_cast<int>(zeta_perm(u, v));
  SlideExpansion at_z = schubert_product_slide(embed_left(u, z), embed_left(v, z));
  SlideExpansion at_z1 = schubert_product_slide(embed_left(u, z + 1), embed_left(v, z + 1));
  SlideExpansion shifted(at_z.basis());
  for (const auto& [k, c] : at_z.terms()) shifted.add(k.prepend_zeros(1), c);
  CHECK(at_z1 == shifted);
}

TEST_CASE("stanley products") {
  CHECK(stanley_product(Permutation::identity(), pp("24153")) ==
        stanley_via_reduced_words(pp("24153")));
  // cross-check against the shuffle product of the two expansions
  auto cross_check = [](const Permutation& u, const Permutation& v) {
    QsymExpansion via_slide = stanley_product(u, v);
    QsymExpansion via_shuffle(Basis::fundamental_qsym);
    QsymExpansion su = stanley_via_reduced_words(u), sv = stanley_via_reduced_words(v);
    for (const auto& [alpha, ca] : su.terms())
      for (const auto& [beta, cb] : sv.terms())
        via_shuffle.add_scaled(fundamental_qsym_product(alpha, beta), ca * cb);
    CHECK(via_slide == via_shuffle);
  };
  cross_check(pp("321"), pp("321"));
  cross_check(pp("24153"), pp("2431"));
  cross_check(pp("1432"), pp("213"));
}

TEST_CASE("slide polynomials converge to quasisymmetric polynomials") {
  for (const auto& a : weak_comps(4, 5)) {
    int m = static_cast<int>(a.size());
    int window = m + flatten(a).length();
    WeakComposition shifted = a.prepend_zeros(m);
    CHECK(expand_monomial_slide(shifted).restricted(window) ==
          expand_monomial_qsym(flatten(a), window));
    CHECK(expand_fundamental_slide(shifted).restricted(window) ==
          expand_fundamental_qsym(flatten(a), window));
  }
}

TEST_CASE("slide expansion of embedded schuberts stabilizes exactly at eta") {
  for (const auto& w : all_permutations(4)) {
    if (w.is_identity()) continue;
    int transition = std::max(eta(w), 0);
    // find the smallest m whose expansion, shifted, matches level m+1
    auto expansion_at = [&](int m) {
      return schubert_to_fundamental_slide(embed_left(w, m));
    };
    int observed = -1;
    SlideExpansion prev = expansion_at(0);
    for (int m = 0; m <= transition + 1 && observed < 0; ++m) {
      SlideExpansion next = expansion_at(m + 1);
      SlideExpansion shifted(prev.basis());
      for (const auto& [k, c] : prev.terms()) shifted.add(k.prepend_zeros(1), c);
      if (next == shifted) observed = m;
      prev = std::move(next);
    }
    CHECK(observed == transition);
  }
}

TEST_CASE("flatten_expansion") {
  SlideExpansion e(Basis::fundamental_slide);
  e.add(wc({0, 2, 0, 1}), 2);
  e.add(wc({2, 0, 1}), 1);
  QsymExpansion f = flatten_expansion(e);
  CHECK(f == qsym_terms(Basis::fundamental_qsym, {{{2, 1}, 3}}));
}
