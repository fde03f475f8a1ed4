#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "slide/products.hpp"
#include "slide/stability.hpp"

using namespace slide;

namespace {

WeakComposition wc(std::vector<int> v) { return WeakComposition(std::move(v)); }
StrongComposition sc(std::vector<int> v) { return StrongComposition(std::move(v)); }
Permutation pp(const std::string& s) { return Permutation::parse(s); }

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

SlideExpansion slide_terms(Basis b, std::vector<std::pair<std::vector<int>, long long>> terms) {
  SlideExpansion e(b);
  for (auto& [k, c] : terms) e.add(wc(k), c);
  return e;
}

std::vector<int> word_of(const std::string& digits) {
  std::vector<int> out;
  for (char c : digits) out.push_back(c - '0');
  return out;
}

// extend a product rule bilinearly over a formal sum
SlideExpansion product_of_expansions(const SlideExpansion& e, const SlideExpansion& f,
                                     bool fundamental) {
  SlideExpansion out(e.basis());
  for (const auto& [a, ca] : e.terms())
    for (const auto& [b, cb] : f.terms()) {
      SlideExpansion p = fundamental ? slide_product(a, b) : quasi_slide_product(a, b);
      out.add_scaled(p, ca * cb);
    }
  return out;
}

}  // namespace

TEST_CASE("quasi-shuffle of (2,3) and (1,1)") {
  QsymExpansion got = quasi_shuffle(sc({2, 3}), sc({1, 1}));
  // thirteen terms: the three-branch recursion reaches (1,3,3) through the
  // path 1, [2+1], 3
  QsymExpansion want = qsym_terms(
      Basis::monomial_qsym,
      {{{2, 3, 1, 1}, 1}, {{2, 1, 3, 1}, 1}, {{2, 1, 1, 3}, 1}, {{2, 1, 4}, 1},
       {{2, 4, 1}, 1},    {{1, 2, 3, 1}, 1}, {{1, 2, 1, 3}, 1}, {{1, 2, 4}, 1},
       {{1, 1, 2, 3}, 1}, {{3, 3, 1}, 1},    {{3, 1, 3}, 1},    {{3, 4}, 1},
       {{1, 3, 3}, 1}});
  CHECK(got == want);
  // total path count over compositions of lengths 2 and 2
  BigInt total = 0;
  for (const auto& [k, c] : got.terms()) total += c;
  CHECK(total == 13);
  // the full expansion, (1,3,3) included, is pinned by multiplication
  CHECK(qsym_expansion_to_polynomial(got, 7) ==
        expand_monomial_qsym(sc({2, 3}), 7) * expand_monomial_qsym(sc({1, 1}), 7));
}

TEST_CASE("quasi-shuffle edge cases") {
  QsymExpansion unit = quasi_shuffle(sc({2, 3}), sc({}));
  CHECK(unit == qsym_terms(Basis::monomial_qsym, {{{2, 3}, 1}}));
  CHECK(quasi_shuffle(sc({1}), sc({1})) ==
        qsym_terms(Basis::monomial_qsym, {{{1, 1}, 2}, {{2}, 1}}));
}

TEST_CASE("iterative and recursive quasi-shuffles agree") {
  std::vector<StrongComposition> comps;
  for (int k = 0; k <= 4; ++k)
    for (const auto& c : compositions_of(k)) comps.push_back(c);
  for (const auto& a : comps)
    for (const auto& b : comps) CHECK(quasi_shuffle(a, b) == quasi_shuffle_recursive(a, b));
}

TEST_CASE("quasi-shuffle set of the worked pair") {
  auto qss = quasi_shuffle_set(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}));
  REQUIRE(qss.size() == 7);
  std::set<std::pair<std::vector<int>, std::vector<int>>> got;
  for (const auto& [ga, gb] : qss) got.emplace(ga.parts(), gb.parts());
  std::set<std::pair<std::vector<int>, std::vector<int>>> want = {
      {{0, 2, 3}, {1, 0, 1}},       {{0, 2, 3}, {1, 1, 0}},
      {{2, 0, 3}, {1, 1, 0}},       {{2, 3, 0}, {1, 0, 1}},
      {{0, 2, 0, 3}, {1, 0, 1, 0}}, {{2, 3}, {1, 1}},
      {{0, 2, 3, 0}, {1, 0, 0, 1}}};
  CHECK(got == want);
}

TEST_CASE("quasi-shuffle set edge cases") {
  auto empty = quasi_shuffle_set(wc({}), wc({}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].first == wc({}));
  // dominance trims the singleton pair down to the merged placement
  auto ones = quasi_shuffle_set(wc({1}), wc({1}));
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].first == wc({1}));
  CHECK(ones[0].second == wc({1}));
  // prepending zeros exposes the separated placements
  CHECK(quasi_shuffle_set(wc({0, 1}), wc({0, 1})).size() == 3);
}

TEST_CASE("bump_quasi") {
  CHECK(bump_quasi(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}), wc({0, 2, 3}), wc({1, 0, 1})) ==
        wc({1, 2, 0, 4}));
  // full-length positive pair needs no insertion
  CHECK(bump_quasi(wc({1, 1}), wc({1, 1}), wc({1, 1}), wc({1, 1})) == wc({2, 2}));
}

TEST_CASE("quasi-slide product of the worked pair") {
  CHECK(quasi_slide_product(wc({0, 2, 0, 3}), wc({1, 0, 0, 1})) ==
        slide_terms(Basis::monomial_slide,
                    {{{1, 2, 0, 4}, 1}, {{1, 2, 1, 3}, 1}, {{1, 3, 0, 3}, 1},
                     {{3, 0, 0, 4}, 1}, {{3, 0, 1, 3}, 1}, {{1, 2, 3, 1}, 1},
                     {{3, 0, 3, 1}, 1}}));
  CHECK(quasi_slide_product(wc({0, 2, 0, 3}), wc({0, 0, 0, 0})) ==
        slide_terms(Basis::monomial_slide, {{{0, 2, 0, 3}, 1}}));
}

TEST_CASE("shuffle words") {
  auto words = shuffle_words(word_of("55111"), word_of("82"));
  CHECK(words.size() == 21);
  CHECK(words.count(word_of("8551112")) == 1);
  CHECK(words.count(word_of("5511182")) == 1);
  CHECK(shuffle_words(word_of("12"), {}) ==
        std::set<std::vector<int>>{word_of("12")});
  // distinct letters give the full binomial count
  CHECK(shuffle_words(word_of("12"), word_of("34")).size() == 6);
}

TEST_CASE("encode words") {
  auto [A, B] = encode_words(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}));
  CHECK(A == word_of("55111"));
  CHECK(B == word_of("82"));
  auto [A0, B0] = encode_words(wc({0, 0}), wc({1, 1}));
  CHECK(A0.empty());
  CHECK(B0 == word_of("42"));
  auto [A1, B1] = encode_words(wc({1, 1}), wc({1, 1}));
  CHECK(A1 == word_of("31"));
  CHECK(B1 == word_of("42"));
}

TEST_CASE("shuffle set of the worked pair") {
  auto ss = shuffle_set(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}));
  REQUIRE(ss.size() == 14);
  std::set<std::vector<int>> got;
  for (const auto& C : ss) got.insert(C.letters());
  std::set<std::vector<int>> want;
  for (const char* s : {"5581112", "5851112", "8551112", "5581121", "5851121",
                        "8551121", "5581211", "5851211", "8551211", "5582111",
                        "5852111", "8552111", "5825111", "8255111"})
    want.insert(word_of(s));
  CHECK(got == want);
  // run profiles of a named member
  for (const auto& C : ss)
    if (C.letters() == word_of("8551112")) {
      auto profile = C.runs();
      CHECK(profile.des == sc({1, 2, 4}));
      CHECK(profile.des_a == wc({0, 2, 3}));
      CHECK(profile.des_b == wc({1, 0, 1}));
    }
}

TEST_CASE("shuffle set trivial side") {
  // all-zero b: the only shuffle is A itself and it always qualifies
  auto ss = shuffle_set(wc({0, 2, 0, 3}), wc({0, 0, 0, 0}));
  CHECK(ss.size() == 1);
}

TEST_CASE("bump_slide") {
  auto ss = shuffle_set(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}));
  bool found = false;
  for (const auto& C : ss)
    if (C.letters() == word_of("8551112")) {
      found = true;
      CHECK(bump_slide(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}), C) == wc({1, 2, 0, 4}));
    }
  CHECK(found);
}

TEST_CASE("slide product of the worked pair") {
  CHECK(slide_product(wc({0, 2, 0, 3}), wc({1, 0, 0, 1})) ==
        slide_terms(Basis::fundamental_slide,
                    {{{3, 0, 0, 4}, 1}, {{2, 1, 0, 4}, 1}, {{1, 2, 0, 4}, 1},
                     {{3, 0, 3, 1}, 1}, {{2, 1, 3, 1}, 1}, {{1, 2, 3, 1}, 1},
                     {{3, 0, 2, 2}, 1}, {{2, 1, 2, 2}, 1}, {{1, 2, 2, 2}, 1},
                     {{3, 0, 1, 3}, 1}, {{2, 1, 1, 3}, 1}, {{1, 2, 1, 3}, 1},
                     {{2, 2, 0, 3}, 1}, {{1, 3, 0, 3}, 1}}));
  CHECK(slide_product(wc({1, 2, 0, 1}), wc({0, 0, 0, 0})) ==
        slide_terms(Basis::fundamental_slide, {{{1, 2, 0, 1}, 1}}));
}

TEST_CASE("slide product of the leading pair of weights") {
  SlideExpansion got = slide_product(wc({1, 2, 0, 1}), wc({1, 2, 1, 0}));
  CHECK(got == slide_terms(Basis::fundamental_slide,
                           {{{2, 4, 1, 1}, 1}, {{2, 4, 2}, 1}}));
  CHECK(slide_expansion_to_polynomial(got, 4) ==
        expand_fundamental_slide(wc({1, 2, 0, 1})) *
            expand_fundamental_slide(wc({1, 2, 1, 0})));
}

TEST_CASE("slide products over all weight pairs assemble the product display") {
  std::vector<WeakComposition> left = {wc({1, 2, 0, 1}), wc({2, 1, 0, 1}), wc({2, 2, 0, 0})};
  std::vector<WeakComposition> right = {wc({1, 2, 1, 0}), wc({2, 1, 1, 0})};
  SlideExpansion total(Basis::fundamental_slide);
  for (const auto& a : left)
    for (const auto& b : right) total.add_scaled(slide_product(a, b), 1);
  CHECK(total == slide_terms(Basis::fundamental_slide,
                             {{{2, 4, 1, 1}, 1}, {{3, 3, 1, 1}, 2}, {{4, 2, 1, 1}, 1},
                              {{2, 4, 2}, 1},    {{3, 3, 2}, 2},    {{4, 2, 2}, 1},
                              {{3, 4, 1}, 1},    {{4, 3, 1}, 1}}));
}

TEST_CASE("product rules match polynomial multiplication on random pairs") {
  std::mt19937 rng(2016);
  auto comps = weak_comps(4, 4);
  std::uniform_int_distribution<size_t> pick(0, comps.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& a = comps[pick(rng)];
    const auto& b = comps[pick(rng)];
    CHECK(slide_expansion_to_polynomial(quasi_slide_product(a, b), 4) ==
          expand_monomial_slide(a) * expand_monomial_slide(b));
    CHECK(slide_expansion_to_polynomial(slide_product(a, b), 4) ==
          expand_fundamental_slide(a) * expand_fundamental_slide(b));
  }
}

TEST_CASE("products are commutative and associative on sampled triples") {
  std::mt19937 rng(99);
  auto comps = weak_comps(3, 3);
  std::uniform_int_distribution<size_t> pick(0, comps.size() - 1);
  for (int trial = 0; trial < 12; ++trial) {
    const auto& a = comps[pick(rng)];
    const auto& b = comps[pick(rng)];
    const auto& c = comps[pick(rng)];
    for (bool fundamental : {false, true}) {
      auto prod = [&](const WeakComposition& x, const WeakComposition& y) {
        return fundamental ? slide_product(x, y) : quasi_slide_product(x, y);
      };
      CHECK(prod(a, b) == prod(b, a));
      SlideExpansion ab = prod(a, b);
      SlideExpansion bc = prod(b, c);
      SlideExpansion single_c(ab.basis()), single_a(ab.basis());
      single_c.add(c, 1);
      single_a.add(a, 1);
      CHECK(product_of_expansions(ab, single_c, fundamental) ==
            product_of_expansions(single_a, bc, fundamental));
    }
  }
}

TEST_CASE("quasi-shuffle and shuffle are the stable limits of the slide rules") {
  std::vector<WeakComposition> samples = {wc({1, 1}), wc({0, 2}), wc({2, 0, 1}),
                                          wc({0, 1, 1}), wc({2})};
  for (const auto& a : samples)
    for (const auto& b : samples) {
      int m = static_cast<int>(a.size() + b.size());
      QsymExpansion flat_q = flatten_expansion(
          quasi_slide_product(a.prepend_zeros(m), b.prepend_zeros(m)));
      CHECK(flat_q == quasi_shuffle(flatten(a), flatten(b)));
      QsymExpansion flat_s = flatten_expansion(
          slide_product(a.prepend_zeros(m), b.prepend_zeros(m)));
      QsymExpansion shuffled = fundamental_qsym_product(flatten(a), flatten(b));
      CHECK(flat_s == shuffled);
    }
}

TEST_CASE("fundamental quasisymmetric product basics") {
  CHECK(fundamental_qsym_product(sc({1}), sc({1})) ==
        qsym_terms(Basis::fundamental_qsym, {{{2}, 1}, {{1, 1}, 1}}));
  CHECK(fundamental_qsym_product(sc({2, 1}), sc({})) ==
        qsym_terms(Basis::fundamental_qsym, {{{2, 1}, 1}}));
}

TEST_CASE("monomial quasisymmetric product matches the polynomial oracle") {
  std::vector<StrongComposition> comps;
  for (int k = 0; k <= 3; ++k)
    for (const auto& c : compositions_of(k)) comps.push_back(c);
  for (const auto& alpha : comps)
    for (const auto& beta : comps) {
      int n = static_cast<int>(alpha.size() + beta.size()) + 2;
      Polynomial direct = expand_monomial_qsym(alpha, n) * expand_monomial_qsym(beta, n);
      CHECK(qsym_expansion_to_polynomial(monomial_qsym_product(alpha, beta), n) == direct);
      Polynomial direct_f =
          expand_fundamental_qsym(alpha, n) * expand_fundamental_qsym(beta, n);
      CHECK(qsym_expansion_to_polynomial(fundamental_qsym_product(alpha, beta), n) ==
            direct_f);
    }
}

TEST_CASE("schubert product in the slide basis") {
  CHECK(schubert_product_slide(pp("24153"), pp("2431")) ==
        slide_terms(Basis::fundamental_slide,
                    {{{2, 4, 1, 1}, 1}, {{3, 3, 1, 1}, 2}, {{4, 2, 1, 1}, 1},
                     {{2, 4, 2}, 1},    {{3, 3, 2}, 2},    {{4, 2, 2}, 1},
                     {{3, 4, 1}, 1},    {{4, 3, 1}, 1}}));
  CHECK(schubert_product_slide(Permutation::identity(), pp("2431")) ==
        schubert_to_fundamental_slide(pp("2431")));
}

TEST_CASE("schubert product against the polynomial oracle on random pairs") {
  std::mt19937 rng(5);
  std::vector<int> v{1, 2, 3, 4};
  std::vector<Permutation> s4;
  std::sort(v.begin(), v.end());
  do {
    s4.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
  for (int trial = 0; trial < 12; ++trial) {
    const auto& u = s4[pick(rng)];
    const auto& w = s4[pick(rng)];
    int n = std::max({u.last_descent(), w.last_descent(), 1});
    CHECK(slide_expansion_to_polynomial(schubert_product_slide(u, w), n) ==
          schubert_polynomial(u) * schubert_polynomial(w));
  }
}

TEST_CASE("peeling a slide expansion into the schubert basis") {
  SlideExpansion prod = schubert_product_slide(pp("24153"), pp("2431"));
  SchubertExpansion peeled = slide_expansion_to_schubert(prod, true);
  SchubertExpansion want(Basis::schubert);
  for (const char* s : {"362415", "45231", "45312", "364125", "462135"})
    want.add(pp(s), 1);
  CHECK(peeled == want);

  for (const char* s : {"321", "24153", "2431", "146235"}) {
    SchubertExpansion single = slide_expansion_to_schubert(
        schubert_to_fundamental_slide(pp(s)), true);
    CHECK(single.term_count() == 1);
    CHECK(single.coeff(pp(s)) == 1);
  }
}

TEST_CASE("peeled schubert constants match a direct polynomial peel") {
  std::mt19937 rng(17);
  std::vector<int> v{1, 2, 3, 4};
  std::vector<Permutation> s4;
  do {
    s4.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  std::uniform_int_distribution<size_t> pick(0, s4.size() - 1);
  for (int trial = 0; trial < 8; ++trial) {
    const auto& u = s4[pick(rng)];
    const auto& w = s4[pick(rng)];
    SchubertExpansion via_rule =
        slide_expansion_to_schubert(schubert_product_slide(u, w), true);
    // oracle: peel the product polynomial by its term-order-minimal monomial,
    // whose exponent is the Lehmer code of the next Schubert constituent
    Polynomial rest = schubert_polynomial(u) * schubert_polynomial(w);
    SchubertExpansion direct(Basis::schubert);
    while (!rest.is_zero()) {
      const std::vector<int> exp = rest.terms().begin()->first;
      const BigInt c = rest.terms().begin()->second;
      Permutation perm = code_to_permutation(WeakComposition(exp));
      direct.add(perm, c);
      Polynomial s = schubert_polynomial(perm).padded(rest.nvars());
      s *= c;
      rest -= s;
    }
    CHECK(via_rule == direct);
    CHECK(via_rule.all_nonnegative());
  }
}

TEST_CASE("thread cap does not change results") {
  set_max_threads(1);
  SlideExpansion serial = schubert_product_slide(pp("24153"), pp("2431"));
  set_max_threads(4);
  SlideExpansion parallel = schubert_product_slide(pp("24153"), pp("2431"));
  set_max_threads(0);
  CHECK(serial == parallel);
}
