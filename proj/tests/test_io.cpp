#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slide/io.hpp"
#include "slide/products.hpp"

using namespace slide;

TEST_CASE("polynomial json round trip") {
  Polynomial f = expand_fundamental_slide(WeakComposition({0, 2, 0, 3}));
  Json j = polynomial_to_json(f);
  CHECK(j["nvars"] == 4);
  CHECK(j["terms"].size() == 18);
  CHECK(polynomial_from_json(j) == f);
  // canonical order: serialization is deterministic
  CHECK(polynomial_to_json(polynomial_from_json(j)) == j);
}

TEST_CASE("coefficients serialize as decimal strings") {
  Polynomial f(2);
  f.add_term({1, 0}, BigInt("123456789012345678901234567890"));
  Json j = polynomial_to_json(f);
  CHECK(j["terms"][0]["coeff"] == "123456789012345678901234567890");
  CHECK(polynomial_from_json(j) == f);
}

TEST_CASE("expansion json round trips") {
  SlideExpansion e = schubert_to_fundamental_slide(Permutation::parse("24153"));
  Json j = expansion_to_json(e);
  CHECK(j["basis"] == "fundamental-slide");
  CHECK(slide_expansion_from_json(j) == e);

  QsymExpansion q = quasi_shuffle(StrongComposition({2, 3}), StrongComposition({1, 1}));
  CHECK(qsym_expansion_from_json(expansion_to_json(q)) == q);

  SchubertExpansion s = slide_expansion_to_schubert(
      schubert_product_slide(Permutation::parse("24153"), Permutation::parse("2431")), true);
  CHECK(schubert_expansion_from_json(expansion_to_json(s)) == s);
}

TEST_CASE("tableau json round trip") {
  Tableau T(StrongComposition({3, 2}), {{1, 1, 2}, {2, 3}});
  Json j = tableau_to_json(T);
  CHECK(j["shape"] == Json::array({3, 2}));
  CHECK(j["rows"][0] == Json::array({1, 1, 2}));
  CHECK(tableau_from_json(j) == T);
}

TEST_CASE("pipe dream json round trip") {
  CrossSet cs;
  cs.insert(Cell{4, 1});
  cs.insert(Cell{2, 1});
  cs.insert(Cell{2, 2});
  cs.insert(Cell{1, 1});
  PipeDream P(cs);
  Json j = pipe_dream_to_json(P);
  CHECK(j["shape"] == "2,4,1,5,3");
  // reading order: top to bottom, left to right
  CHECK(j["crosses"] ==
        Json::array({Json::array({4, 1}), Json::array({2, 1}), Json::array({2, 2}),
                     Json::array({1, 1})}));
  CHECK(pipe_dream_from_json(j) == P);
}

TEST_CASE("human-readable formats are stable") {
  SlideExpansion e(Basis::fundamental_slide);
  e.add(WeakComposition({2, 2}), 1);
  e.add(WeakComposition({1, 2, 0, 1}), 1);
  CHECK(format_expansion(e) == "1  FS[1,2,0,1]\n1  FS[2,2]\n");
  Polynomial f(2);
  f.add_term({1, 1}, 2);
  f.add_term({2, 0}, 1);
  CHECK(format_polynomial(f) == "2  x^[1,1]\n1  x^[2,0]\n");
}
