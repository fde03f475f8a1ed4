#include "slide/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "slide/stability.hpp"
#include "slide/tableaux.hpp"

namespace slide {

namespace {

struct Harness {
  std::vector<Check> checks;

  void expect(const std::string& id, bool pass, const std::string& detail = "") {
    checks.push_back(Check{id, pass, pass ? "" : detail});
  }

  template <typename T>
  void expect_eq(const std::string& id, const T& got, const T& want) {
    std::ostringstream os;
    if (!(got == want)) os << "mismatch";
    expect(id, got == want, os.str());
  }
};

WeakComposition wc(std::vector<int> v) { return WeakComposition(std::move(v)); }
StrongComposition sc(std::vector<int> v) { return StrongComposition(std::move(v)); }
Permutation pp(const std::string& s) { return Permutation::parse(s); }

SlideExpansion make_slide(Basis b, const std::vector<std::pair<std::vector<int>, long long>>& terms) {
  SlideExpansion e(b);
  for (const auto& [k, c] : terms) e.add(wc(k), c);
  return e;
}

QsymExpansion make_qsym(Basis b, const std::vector<std::pair<std::vector<int>, long long>>& terms) {
  QsymExpansion e(b);
  for (const auto& [k, c] : terms) e.add(sc(k), c);
  return e;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<WeakComposition> weak_comps_up_to(int length, int max_size) {
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

std::vector<StrongComposition> partitions_up_to(int max_size) {
  std::vector<StrongComposition> out;
  out.emplace_back();
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (!cur.empty()) out.push_back(sc(cur));
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  for (int s = 1; s <= max_size; ++s) rec(s, s);
  // rec pushes prefixes of every partition, so deduplicate
  std::sort(out.begin(), out.end(), [](const StrongComposition& a, const StrongComposition& b) {
    return a.parts() < b.parts();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<StrongComposition> sized;
  for (const auto& p : out)
    if (p.size() <= max_size) sized.push_back(p);
  return sized;
}

// ---- item 1: counts ----

void verify_counts(Harness& h) {
  h.expect_eq<size_t>("1.counts |SSYT_3(3,2)| = 15", enumerate_ssyt(sc({3, 2}), 3).size(), 15);
  h.expect_eq<size_t>("1.counts |SSYT_4(3,2)| = 60", enumerate_ssyt(sc({3, 2}), 4).size(), 60);
  h.expect_eq<size_t>("1.counts |SYT(3,2)| = 5", enumerate_syt(sc({3, 2})).size(), 5);
  h.expect_eq<size_t>("1.counts |QYT_3(3,2)| = 5", enumerate_qyt(sc({3, 2}), 3).size(), 5);
  h.expect_eq<size_t>("1.counts |PD(146235)| = 15", enumerate_pipe_dreams(pp("146235")).size(), 15);
  h.expect_eq<size_t>("1.counts |QPD(146235)| = 5", enumerate_qpd(pp("146235")).size(), 5);
  h.expect_eq<size_t>("1.counts |PD(135264)| = 25", enumerate_pipe_dreams(pp("135264")).size(), 25);
  h.expect_eq<size_t>("1.counts |QPD(135264)| = 5", enumerate_qpd(pp("135264")).size(), 5);
  h.expect_eq<size_t>("1.counts |QPD(24153)| = 3", enumerate_qpd(pp("24153")).size(), 3);
  h.expect_eq<size_t>("1.counts |R(24153)| = 5", reduced_words(pp("24153")).size(), 5);
}

// ---- item 2: expansions ----

void verify_expansions(Harness& h) {
  h.expect_eq("2.expansions S_146235 fundamental-slide",
              schubert_to_fundamental_slide(pp("146235")),
              make_slide(Basis::fundamental_slide, {{{2, 2, 1}, 1},
                                                    {{1, 3, 1}, 1},
                                                    {{1, 2, 2}, 1},
                                                    {{0, 3, 2}, 1},
                                                    {{0, 2, 3}, 1}}));
  h.expect_eq("2.expansions S_135264 fundamental-slide",
              schubert_to_fundamental_slide(pp("135264")),
              make_slide(Basis::fundamental_slide, {{{1, 1, 2}, 1},
                                                    {{1, 2, 1}, 1},
                                                    {{0, 2, 2}, 1},
                                                    {{0, 2, 1, 0, 1}, 1},
                                                    {{0, 1, 2, 0, 1}, 1}}));
  h.expect_eq("2.expansions FS[0,2,0,3] into monomial slides (7 terms)",
              fundamental_slide_to_monomial_slide(wc({0, 2, 0, 3})),
              make_slide(Basis::monomial_slide, {{{0, 2, 0, 3}, 1},
                                                 {{0, 2, 1, 2}, 1},
                                                 {{0, 2, 2, 1}, 1},
                                                 {{1, 1, 0, 3}, 1},
                                                 {{1, 1, 1, 2}, 1},
                                                 {{1, 1, 2, 1}, 1},
                                                 {{2, 1, 1, 1}, 1}}));
  {
    Polynomial want(4);
    for (const auto& e : std::vector<std::vector<int>>{
             {2, 3, 0, 0}, {2, 0, 3, 0}, {2, 0, 0, 3}, {0, 2, 3, 0}, {0, 2, 0, 3},
             {2, 1, 2, 0}, {2, 1, 0, 2}, {2, 0, 1, 2}, {0, 2, 1, 2}, {2, 2, 1, 0},
             {2, 2, 0, 1}, {2, 0, 2, 1}, {0, 2, 2, 1}, {1, 1, 3, 0}, {1, 1, 0, 3},
             {1, 1, 1, 2}, {1, 1, 2, 1}, {2, 1, 1, 1}})
      want.add_term(e, 1);
    h.expect_eq("2.expansions FS[0,2,0,3] expands into its 18 monomials",
                expand_fundamental_slide(wc({0, 2, 0, 3})), want);
  }
  {
    auto [poly, exp] = schur_via_qyt(sc({3, 2}), 2);
    Polynomial want(2);
    want.add_term({3, 2}, 1);
    want.add_term({2, 3}, 1);
    h.expect_eq("2.expansions s_(3,2)(x1,x2) polynomial", poly, want);
    h.expect_eq("2.expansions s_(3,2)(x1,x2) = F[3,2] + F[2,3]", exp,
                make_qsym(Basis::fundamental_qsym, {{{3, 2}, 1}, {{2, 3}, 1}}));
  }
  h.expect_eq("2.expansions S_24153 fundamental-slide",
              schubert_to_fundamental_slide(pp("24153")),
              make_slide(Basis::fundamental_slide,
                         {{{1, 2, 0, 1}, 1}, {{2, 1, 0, 1}, 1}, {{2, 2}, 1}}));
}

// ---- item 3: products ----

void verify_products(Harness& h) {
  // thirteen terms in all; (1,3,3) arises from the path 1, [2+1], 3 and the
  // multiplication oracle confirms it
  h.expect_eq("3.products quasi-shuffle (2,3) x (1,1) full 13-term expansion",
              quasi_shuffle(sc({2, 3}), sc({1, 1})),
              make_qsym(Basis::monomial_qsym,
                        {{{2, 3, 1, 1}, 1}, {{2, 1, 3, 1}, 1}, {{2, 1, 1, 3}, 1},
                         {{2, 1, 4}, 1},    {{2, 4, 1}, 1},    {{1, 2, 3, 1}, 1},
                         {{1, 2, 1, 3}, 1}, {{1, 2, 4}, 1},    {{1, 1, 2, 3}, 1},
                         {{3, 3, 1}, 1},    {{3, 1, 3}, 1},    {{3, 4}, 1},
                         {{1, 3, 3}, 1}}));
  h.expect_eq("3.products quasi-slide [0,2,0,3] x [1,0,0,1] has its 7 terms",
              quasi_slide_product(wc({0, 2, 0, 3}), wc({1, 0, 0, 1})),
              make_slide(Basis::monomial_slide,
                         {{{1, 2, 0, 4}, 1}, {{1, 2, 1, 3}, 1}, {{1, 3, 0, 3}, 1},
                          {{3, 0, 0, 4}, 1}, {{3, 0, 1, 3}, 1}, {{1, 2, 3, 1}, 1},
                          {{3, 0, 3, 1}, 1}}));
  h.expect_eq("3.products slide [0,2,0,3] x [1,0,0,1] has its 14 terms",
              slide_product(wc({0, 2, 0, 3}), wc({1, 0, 0, 1})),
              make_slide(Basis::fundamental_slide,
                         {{{3, 0, 0, 4}, 1}, {{2, 1, 0, 4}, 1}, {{1, 2, 0, 4}, 1},
                          {{3, 0, 3, 1}, 1}, {{2, 1, 3, 1}, 1}, {{1, 2, 3, 1}, 1},
                          {{3, 0, 2, 2}, 1}, {{2, 1, 2, 2}, 1}, {{1, 2, 2, 2}, 1},
                          {{3, 0, 1, 3}, 1}, {{2, 1, 1, 3}, 1}, {{1, 2, 1, 3}, 1},
                          {{2, 2, 0, 3}, 1}, {{1, 3, 0, 3}, 1}}));
  SlideExpansion prod = schubert_product_slide(pp("24153"), pp("2431"));
  h.expect_eq("3.products S_24153 * S_2431 slide expansion",
              prod,
              make_slide(Basis::fundamental_slide,
                         {{{2, 4, 1, 1}, 1}, {{3, 3, 1, 1}, 2}, {{4, 2, 1, 1}, 1},
                          {{2, 4, 2}, 1},    {{3, 3, 2}, 2},    {{4, 2, 2}, 1},
                          {{3, 4, 1}, 1},    {{4, 3, 1}, 1}}));
  SchubertExpansion peeled = slide_expansion_to_schubert(prod, true);
  SchubertExpansion want(Basis::schubert);
  for (const char* s : {"362415", "45231", "45312", "364125", "462135"})
    want.add(pp(s), 1);
  h.expect_eq("3.products S_24153 * S_2431 peels to its 5 Schubert terms", peeled, want);
}

// ---- item 4: stability values ----

void verify_stability_values(Harness& h) {
  h.expect_eq("4.stability eta(354162) = 4", eta(pp("354162")), 4);
  h.expect_eq("4.stability eta(12576384) = 2", eta(pp("12576384")), 2);
  h.expect_eq("4.stability zeta((2,3),(1,1)) = 4", zeta_strong(sc({2, 3}), sc({1, 1})), 4LL);
  h.expect_eq("4.stability zeta([0,2,0,3],[1,0,0,1]) = 1",
              zeta_weak(wc({0, 2, 0, 3}), wc({1, 0, 0, 1})), 1LL);
  h.expect_eq("4.stability zeta(24153,21534) = 4", zeta_perm(pp("24153"), pp("21534")), 4LL);
  QsymExpansion want = make_qsym(Basis::fundamental_qsym,
                                 {{{2, 2}, 1}, {{2, 1, 1}, 1}, {{1, 2, 1}, 2}, {{1, 1, 2}, 1}});
  h.expect_eq("4.stability Stanley(24153) via reduced words",
              stanley_via_reduced_words(pp("24153")), want);
  h.expect_eq("4.stability Stanley(24153) via stable slide limit",
              stanley_via_stable_slide(pp("24153")), want);
}

// ---- item 5: oracle equivalences ----

void verify_oracles(Harness& h) {
  {  // (a) fundamental slide expansion reproduces the pipe-dream sum, S_5 + sampled S_6
    bool ok = true;
    std::string bad;
    auto check_one = [&](const Permutation& w) {
      int n = std::max(w.last_descent(), 1);
      Polynomial direct = schubert_polynomial(w);
      Polynomial via = slide_expansion_to_polynomial(schubert_to_fundamental_slide(w), n);
      if (!(direct == via)) {
        ok = false;
        if (bad.empty()) bad = w.str();
      }
    };
    for (const auto& w : all_permutations(5)) check_one(w);
    std::mt19937 rng(20160311);
    auto s6 = all_permutations(6);
    std::shuffle(s6.begin(), s6.end(), rng);
    for (size_t i = 0; i < 24; ++i) check_one(s6[i]);
    h.expect("5.oracles (a) sum over PD(w) = sum of FS over QPD(w), S_5 exhaustive + S_6 sample",
             ok, "first failure at w = " + bad);
  }
  {  // (b) product rules against polynomial multiplication, all |a|,|b| <= 4, length <= 4
    bool ok_m = true, ok_f = true;
    std::string bad_m, bad_f;
    auto comps = weak_comps_up_to(4, 4);
    for (const auto& a : comps)
      for (const auto& b : comps) {
        Polynomial pa_m = expand_monomial_slide(a), pb_m = expand_monomial_slide(b);
        if (!(slide_expansion_to_polynomial(quasi_slide_product(a, b), 4) == pa_m * pb_m)) {
          ok_m = false;
          if (bad_m.empty()) bad_m = a.str() + " x " + b.str();
        }
        Polynomial pa_f = expand_fundamental_slide(a), pb_f = expand_fundamental_slide(b);
        if (!(slide_expansion_to_polynomial(slide_product(a, b), 4) == pa_f * pb_f)) {
          ok_f = false;
          if (bad_f.empty()) bad_f = a.str() + " x " + b.str();
        }
      }
    h.expect("5.oracles (b) quasi-slide rule = polynomial product, all length<=4 size<=4", ok_m,
             "first failure at " + bad_m);
    h.expect("5.oracles (b) slide rule = polynomial product, all length<=4 size<=4", ok_f,
             "first failure at " + bad_f);
  }
  {  // (c) QLRR against direct multiplication, all of S_4 x S_4
    bool ok = true;
    std::string bad;
    auto s4 = all_permutations(4);
    for (const auto& u : s4)
      for (const auto& v : s4) {
        int n = std::max({u.last_descent(), v.last_descent(), 1});
        Polynomial direct = schubert_polynomial(u) * schubert_polynomial(v);
        SlideExpansion rule = schubert_product_slide(u, v);
        Polynomial via = slide_expansion_to_polynomial(rule, n);
        if (!(direct == via && rule.all_nonnegative())) {
          ok = false;
          if (bad.empty()) bad = u.str() + " x " + v.str();
        }
      }
    h.expect("5.oracles (c) QLRR rule = direct Schubert product, all S_4 x S_4", ok,
             "first failure at " + bad);
  }
  {  // (d) basis round trips, indices of length <= 5 and size <= 6
    bool ok = true;
    std::string bad;
    for (const auto& a : weak_comps_up_to(5, 6)) {
      SlideExpansion m = to_monomial_slide_basis(expand_monomial_slide(a));
      SlideExpansion f = to_fundamental_slide_basis(expand_fundamental_slide(a));
      SlideExpansion want_m = make_slide(Basis::monomial_slide, {});
      want_m.add(a, 1);
      SlideExpansion want_f = make_slide(Basis::fundamental_slide, {});
      want_f.add(a, 1);
      if (!(m == want_m && f == want_f)) {
        ok = false;
        if (bad.empty()) bad = a.str();
      }
    }
    h.expect("5.oracles (d) slide-basis round trips, length<=5 size<=6", ok,
             "first failure at " + bad);
  }
  {  // (e) Grassmannian Schuberts are Schur polynomials
    bool ok = true;
    std::string bad;
    for (const auto& lambda : partitions_up_to(5))
      for (int n = std::max(lambda.length(), 1); n <= 4; ++n) {
        Permutation w = grassmannian(lambda, n);
        if (!(schubert_polynomial(w).padded(n) == schur_via_ssyt(lambda, n))) {
          ok = false;
          if (bad.empty()) bad = lambda.str() + " n=" + std::to_string(n);
        }
      }
    h.expect("5.oracles (e) S_grassmannian(lambda,n) = s_lambda(x1..xn), |lambda|<=5 n<=4", ok,
             "first failure at " + bad);
  }
}

// ---- item 6: monotone profiles ----

void verify_profiles(Harness& h) {
  h.expect_eq("6.profiles QPD profile of 24153 is (3,5,5)",
              qpd_count_profile(pp("24153"), 2), std::vector<long long>{3, 5, 5});
  h.expect_eq("6.profiles SS profile of [0,2,0,3],[1,0,0,1] is (14,21,21)",
              slide_product_stabilization_profile(wc({0, 2, 0, 3}), wc({1, 0, 0, 1}), 2),
              std::vector<long long>{14, 21, 21});
  {
    bool ok = true;
    std::string bad;
    for (const auto& w : all_permutations(4)) {
      if (w.is_identity()) continue;
      int transition = std::max(eta(w), 0);
      auto profile = qpd_count_profile(w, transition + 2);
      long long rw = static_cast<long long>(reduced_words(w).size());
      bool good = true;
      for (int m = 0; m < transition; ++m)
        if (!(profile[static_cast<size_t>(m)] < profile[static_cast<size_t>(m + 1)])) good = false;
      for (size_t m = static_cast<size_t>(transition); m < profile.size(); ++m)
        if (profile[m] != rw) good = false;
      if (profile[0] <= 0) good = false;
      if (!good) {
        ok = false;
        if (bad.empty()) bad = w.str();
      }
    }
    h.expect("6.profiles S_4 QPD profiles rise strictly to |R(w)| at max(eta,0)", ok,
             "first failure at w = " + bad);
  }
}

// ---- item 7: map identities ----

void verify_maps(Harness& h) {
  {  // std/sit inverse pair and weight/descent compatibility over S_5
    bool ok_std_sit = true, ok_sit_std = true, ok_des = true;
    std::string bad1, bad2, bad3;
    for (const auto& w : all_permutations(5)) {
      for (const auto& sigma : reduced_words(w)) {
        if (!(standardize_pd(sit(sigma)) == sigma)) {
          ok_std_sit = false;
          if (bad1.empty()) bad1 = w.str();
        }
      }
      for (const auto& Q : enumerate_qpd(w)) {
        ReducedWord sigma = standardize_pd(Q);
        VirtualPipeDream seated = sit(sigma);
        if (!(seated.is_real() &&
              PipeDream(seated.crosses()) == Q)) {
          ok_sit_std = false;
          if (bad2.empty()) bad2 = w.str();
        }
        // runs of the reading word list the occupied rows top-down, the
        // reverse of the weight's bottom-up order
        std::vector<int> des = descent_composition(sigma.indices()).parts();
        std::reverse(des.begin(), des.end());
        if (!(flatten(Q.weight()) == StrongComposition(des))) {
          ok_des = false;
          if (bad3.empty()) bad3 = w.str();
        }
      }
    }
    h.expect("7.maps std(sit(sigma)) = sigma on R(w), S_5 exhaustive", ok_std_sit,
             "first failure at w = " + bad1);
    h.expect("7.maps sit(std(Q)) = Q on QPD(w), S_5 exhaustive", ok_sit_std,
             "first failure at w = " + bad2);
    h.expect("7.maps flat(wt(Q)) = reversed Des(std(Q)) on QPD(w), S_5 exhaustive", ok_des,
             "first failure at w = " + bad3);
  }
  {  // tableau destandardization: surjective, fibers generate F
    bool ok_surj = true, ok_fiber = true;
    std::string bad_s, bad_f;
    for (const auto& lambda : partitions_up_to(6))
      for (int n = 1; n <= 4; ++n) {
        auto qyt = enumerate_qyt(lambda, n);
        std::map<Tableau, Polynomial> fibers;
        for (const auto& T : enumerate_ssyt(lambda, n)) {
          Tableau Q = destandardize_tableau(T);
          auto it = fibers.find(Q);
          if (it == fibers.end()) it = fibers.emplace(Q, Polynomial(n)).first;
          it->second += Polynomial::monomial(T.weight(n), n);
        }
        if (fibers.size() != qyt.size()) {
          ok_surj = false;
          if (bad_s.empty()) bad_s = lambda.str() + " n=" + std::to_string(n);
        }
        for (const auto& [Q, gf] : fibers) {
          if (!(gf == expand_fundamental_qsym(qyt_weight(Q), n))) {
            ok_fiber = false;
            if (bad_f.empty()) bad_f = lambda.str() + " n=" + std::to_string(n);
          }
        }
      }
    h.expect("7.maps tableau dst surjective onto QYT, |lambda|<=6 n<=4", ok_surj,
             "first failure at " + bad_s);
    h.expect("7.maps tableau dst fibers generate F_wt, |lambda|<=6 n<=4", ok_fiber,
             "first failure at " + bad_f);
  }
  {  // pipe-dream destandardization: surjective, fibers generate FS
    bool ok = true;
    std::string bad;
    std::vector<Permutation> ws = all_permutations(4);
    for (const char* s : {"24153", "14523", "32154", "25314", "146235", "135264"})
      ws.push_back(pp(s));
    for (const auto& w : ws) {
      int n = std::max(w.degree() - 1, 1);
      auto qpd = enumerate_qpd(w);
      std::map<PipeDream, Polynomial> fibers;
      for (const auto& P : enumerate_pipe_dreams(w)) {
        PipeDream Q = destandardize_pd(P);
        auto it = fibers.find(Q);
        if (it == fibers.end()) it = fibers.emplace(Q, Polynomial(n)).first;
        it->second += Polynomial::monomial(P.weight().trimmed(), n);
      }
      bool good = fibers.size() == qpd.size();
      for (const auto& [Q, gf] : fibers) {
        if (!is_quasi_yamanouchi_pd(Q)) good = false;
        if (!(gf == expand_fundamental_slide(Q.weight().trimmed().padded(n)))) good = false;
      }
      if (!good) {
        ok = false;
        if (bad.empty()) bad = w.str();
      }
    }
    h.expect("7.maps pipe-dream dst surjective with FS fibers, S_4 + samples", ok,
             "first failure at w = " + bad);
  }
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"counts", "expansions", "products", "stability", "oracles", "profiles", "maps", "all"};
}

std::vector<Check> run_verify_suite(const std::string& name) {
  Harness h;
  bool all = name == "all";
  bool known = all;
  if (all || name == "counts") verify_counts(h), known = true;
  if (all || name == "expansions") verify_expansions(h), known = true;
  if (all || name == "products") verify_products(h), known = true;
  if (all || name == "stability") verify_stability_values(h), known = true;
  if (all || name == "oracles") verify_oracles(h), known = true;
  if (all || name == "profiles") verify_profiles(h), known = true;
  if (all || name == "maps") verify_maps(h), known = true;
  if (!known) throw std::invalid_argument("unknown verify suite: " + name);
  return h.checks;
}

}  // namespace slide
