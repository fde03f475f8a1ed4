#include "slide/io.hpp"

#include <sstream>

namespace slide {

namespace {

Json coeff_to_json(const BigInt& c) { return Json(c.str()); }

BigInt coeff_from_json(const Json& j) { return BigInt(j.get<std::string>()); }

template <typename E, typename KeyToJson>
Json expansion_terms(const E& e, KeyToJson&& key_to_json) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t;
    t["index"] = key_to_json(k);
    t["coeff"] = coeff_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["basis"] = basis_name(e.basis());
  out["terms"] = std::move(terms);
  return out;
}

}  // namespace

Json polynomial_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["exp"] = e;
    t["coeff"] = coeff_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out;
  out["nvars"] = f.nvars();
  out["terms"] = std::move(terms);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  Polynomial f(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms"))
    f.add_term(t.at("exp").get<std::vector<int>>(), coeff_from_json(t.at("coeff")));
  return f;
}

Json expansion_to_json(const SlideExpansion& e) {
  return expansion_terms(e, [](const WeakComposition& k) { return Json(k.parts()); });
}

Json expansion_to_json(const QsymExpansion& e) {
  return expansion_terms(e, [](const StrongComposition& k) { return Json(k.parts()); });
}

Json expansion_to_json(const SchubertExpansion& e) {
  return expansion_terms(e, [](const Permutation& k) { return Json(k.one_line()); });
}

SlideExpansion slide_expansion_from_json(const Json& j) {
  SlideExpansion e(basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms"))
    e.add(WeakComposition(t.at("index").get<std::vector<int>>()),
          coeff_from_json(t.at("coeff")));
  return e;
}

QsymExpansion qsym_expansion_from_json(const Json& j) {
  QsymExpansion e(basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms"))
    e.add(StrongComposition(t.at("index").get<std::vector<int>>()),
          coeff_from_json(t.at("coeff")));
  return e;
}

SchubertExpansion schubert_expansion_from_json(const Json& j) {
  SchubertExpansion e(basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms"))
    e.add(Permutation(t.at("index").get<std::vector<int>>()),
          coeff_from_json(t.at("coeff")));
  return e;
}

Json tableau_to_json(const Tableau& T) {
  Json out;
  out["shape"] = T.shape().parts();
  out["rows"] = T.rows();
  return out;
}

Tableau tableau_from_json(const Json& j) {
  return Tableau(StrongComposition(j.at("shape").get<std::vector<int>>()),
                 j.at("rows").get<std::vector<std::vector<int>>>());
}

Json pipe_dream_to_json(const PipeDream& P) {
  Json crosses = Json::array();
  for (const Cell& c : P.crosses()) crosses.push_back(Json::array({c.row, c.col}));
  Json out;
  out["shape"] = P.shape().str();
  out["crosses"] = std::move(crosses);
  return out;
}

PipeDream pipe_dream_from_json(const Json& j) {
  CrossSet crosses;
  for (const auto& c : j.at("crosses"))
    crosses.insert(Cell{c.at(0).get<int>(), c.at(1).get<int>()});
  PipeDream P(std::move(crosses));
  if (j.contains("shape") && !(P.shape() == Permutation::parse(j.at("shape").get<std::string>())))
    throw std::invalid_argument("pipe dream shape mismatch");
  return P;
}

std::string basis_symbol(Basis b) {
  switch (b) {
    case Basis::monomial: return "x^";
    case Basis::monomial_slide: return "MS";
    case Basis::fundamental_slide: return "FS";
    case Basis::schubert: return "S";
    case Basis::monomial_qsym: return "M";
    case Basis::fundamental_qsym: return "F";
    case Basis::schur: return "s";
  }
  return "?";
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [e, c] : f.terms()) {
    os << c.str() << "  x^[";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << e[i];
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

template <typename E, typename KeyStr>
std::string format_terms(const E& e, KeyStr&& key_str) {
  if (e.is_zero()) return "0\n";
  std::ostringstream os;
  const std::string sym = basis_symbol(e.basis());
  for (const auto& [k, c] : e.terms()) os << c.str() << "  " << sym << key_str(k) << "\n";
  return os.str();
}

}  // namespace

std::string format_expansion(const SlideExpansion& e) {
  return format_terms(e, [](const WeakComposition& k) { return k.str(); });
}

std::string format_expansion(const QsymExpansion& e) {
  return format_terms(e, [](const StrongComposition& k) { return k.str(); });
}

std::string format_expansion(const SchubertExpansion& e) {
  return format_terms(e, [](const Permutation& k) { return "[" + k.str() + "]"; });
}

}  // namespace slide
