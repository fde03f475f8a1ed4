#include "slide/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slide {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::monomial_slide: return "monomial-slide";
    case Basis::fundamental_slide: return "fundamental-slide";
    case Basis::schubert: return "schubert";
    case Basis::monomial_qsym: return "monomial-qsym";
    case Basis::fundamental_qsym: return "fundamental-qsym";
    case Basis::schur: return "schur";
  }
  throw std::logic_error("unknown basis");
}

Basis basis_from_name(const std::string& name) {
  for (Basis b : {Basis::monomial, Basis::monomial_slide, Basis::fundamental_slide,
                  Basis::schubert, Basis::monomial_qsym, Basis::fundamental_qsym,
                  Basis::schur})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis name: " + name);
}

bool TermOrderLess::operator()(const std::vector<int>& a,
                               const std::vector<int>& b) const {
  long long da = std::accumulate(a.begin(), a.end(), 0LL);
  long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da < db;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = len; i-- > 0;) {
    int ai = i < a.size() ? a[i] : 0;
    int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai > bi;
  }
  return false;
}

// ---- Polynomial ----

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

Polynomial Polynomial::one(int nvars) {
  Polynomial f(nvars);
  f.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), 1);
  return f;
}

Polynomial Polynomial::monomial(const WeakComposition& exp, int nvars,
                                const BigInt& coeff) {
  if (exp.trimmed().length() > nvars)
    throw std::invalid_argument("monomial: exponent longer than variable count");
  Polynomial f(nvars);
  f.add_term(exp.trimmed().padded(nvars).parts(), coeff);
  return f;
}

BigInt Polynomial::coeff(const std::vector<int>& exp) const {
  std::vector<int> e = exp;
  while (static_cast<int>(e.size()) > nvars_ && !e.empty() && e.back() == 0) e.pop_back();
  if (static_cast<int>(e.size()) > nvars_) return 0;
  e.resize(static_cast<size_t>(nvars_), 0);
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const std::vector<int>& exp, const BigInt& c) {
  if (c == 0) return;
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("add_term: exponent length mismatch");
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.nvars_ > nvars_) *this = padded(g.nvars_);
  for (const auto& [e, c] : g.terms_) {
    std::vector<int> ee = e;
    ee.resize(static_cast<size_t>(nvars_), 0);
    add_term(ee, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.nvars_ > nvars_) *this = padded(g.nvars_);
  for (const auto& [e, c] : g.terms_) {
    std::vector<int> ee = e;
    ee.resize(static_cast<size_t>(nvars_), 0);
    add_term(ee, -c);
  }
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  int n = std::max(f.nvars(), g.nvars());
  Polynomial ff = f.padded(n), gg = g.padded(n);
  Polynomial out(n);
  for (const auto& [ea, ca] : ff.terms())
    for (const auto& [eb, cb] : gg.terms()) {
      std::vector<int> e(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::padded(int n) const {
  if (n < nvars_) throw std::invalid_argument("padded: fewer variables");
  Polynomial out(n);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ee = e;
    ee.resize(static_cast<size_t>(n), 0);
    out.add_term(ee, c);
  }
  return out;
}

Polynomial Polynomial::restricted(int k) const {
  if (k > nvars_) return padded(k);
  Polynomial out(k);
  for (const auto& [e, c] : terms_) {
    bool live = true;
    for (size_t i = static_cast<size_t>(k); i < e.size(); ++i)
      if (e[i] != 0) {
        live = false;
        break;
      }
    if (!live) continue;
    out.add_term(std::vector<int>(e.begin(), e.begin() + k), c);
  }
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  int n = std::max(f.nvars(), g.nvars());
  return f.padded(n).terms() == g.padded(n).terms();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*x^[";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << e[i];
    }
    os << ']';
  }
  return os.str();
}

// ---- quasisymmetric polynomials ----

Polynomial expand_monomial_qsym(const StrongComposition& alpha, int n) {
  Polynomial out(n);
  const int l = alpha.length();
  detail::for_each_placement(l, n, [&](const std::vector<int>& pos) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int j = 0; j < l; ++j) e[static_cast<size_t>(pos[static_cast<size_t>(j)] - 1)] = alpha[j];
    out.add_term(e, 1);
  });
  return out;
}

Polynomial expand_fundamental_qsym(const StrongComposition& alpha, int n) {
  Polynomial out(n);
  for (const auto& beta : refinements_of(alpha)) {
    if (beta.length() > n) continue;
    out += expand_monomial_qsym(beta, n);
  }
  return out;
}

// ---- slide polynomials ----

Polynomial expand_monomial_slide(const WeakComposition& a) {
  const int n = a.length();
  const StrongComposition phi = flatten(a);
  Polynomial out(n);
  detail::for_each_placement(phi.length(), n, [&](const std::vector<int>& pos) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int j = 0; j < phi.length(); ++j)
      e[static_cast<size_t>(pos[static_cast<size_t>(j)] - 1)] = phi[j];
    if (dominates(WeakComposition(e), a)) out.add_term(e, 1);
  });
  return out;
}

Polynomial expand_fundamental_slide(const WeakComposition& a) {
  const int n = a.length();
  Polynomial out(n);
  for (const auto& beta : refinements_of(flatten(a))) {
    if (beta.length() > n) continue;
    detail::for_each_placement(beta.length(), n, [&](const std::vector<int>& pos) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      for (int j = 0; j < beta.length(); ++j)
        e[static_cast<size_t>(pos[static_cast<size_t>(j)] - 1)] = beta[j];
      if (dominates(WeakComposition(e), a)) out.add_term(e, 1);
    });
  }
  return out;
}

SlideExpansion fundamental_slide_to_monomial_slide(const WeakComposition& a) {
  const int n = a.length();
  SlideExpansion out(Basis::monomial_slide);
  for (const auto& beta : refinements_of(flatten(a))) {
    if (beta.length() > n) continue;
    detail::for_each_placement(beta.length(), n, [&](const std::vector<int>& pos) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      for (int j = 0; j < beta.length(); ++j)
        e[static_cast<size_t>(pos[static_cast<size_t>(j)] - 1)] = beta[j];
      WeakComposition b(e);
      if (strongly_dominates(b, a)) out.add(b, 1);
    });
  }
  return out;
}

namespace {

// Count of degree-d monomials in n variables, saturating; the peel loop in a
// given degree cannot run longer than this.
unsigned long long monomial_count_bound(long long d, int n) {
  if (n <= 1) return 1;
  unsigned long long r = 1;
  for (long long i = 1; i < n; ++i) {
    if (r > (1ULL << 60)) return 1ULL << 62;
    r = r * static_cast<unsigned long long>(d + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

SlideExpansion peel_slide_basis(const Polynomial& f, Basis basis) {
  SlideExpansion out(basis);
  Polynomial rest = f;
  std::map<long long, unsigned long long> steps;
  while (!rest.is_zero()) {
    const std::vector<int> exp = rest.terms().begin()->first;
    const BigInt c = rest.terms().begin()->second;
    WeakComposition idx = WeakComposition(exp).trimmed();
    long long d = idx.size();
    if (++steps[d] > monomial_count_bound(d, rest.nvars()))
      throw std::logic_error("slide-basis peel failed to terminate: ordering bug");
    out.add(idx, c);
    Polynomial basis_poly = basis == Basis::monomial_slide
                                ? expand_monomial_slide(idx.padded(rest.nvars()))
                                : expand_fundamental_slide(idx.padded(rest.nvars()));
    basis_poly *= c;
    rest -= basis_poly;
  }
  return out;
}

}  // namespace

SlideExpansion to_monomial_slide_basis(const Polynomial& f) {
  return peel_slide_basis(f, Basis::monomial_slide);
}

SlideExpansion to_fundamental_slide_basis(const Polynomial& f) {
  return peel_slide_basis(f, Basis::fundamental_slide);
}

bool is_symmetric(const Polynomial& f) {
  const int n = f.nvars();
  // group by exponent multiset; each group must be a full orbit of equal coeffs
  std::map<std::vector<int>, std::pair<BigInt, long long>> groups;  // sorted exp -> (coeff, count)
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> key = e;
    std::sort(key.begin(), key.end());
    auto it = groups.find(key);
    if (it == groups.end()) {
      groups.emplace(key, std::make_pair(c, 1LL));
    } else {
      if (it->second.first != c) return false;
      ++it->second.second;
    }
  }
  for (const auto& [key, info] : groups) {
    BigInt orbit = 1;
    for (int i = 1; i <= n; ++i) orbit *= i;
    std::map<int, int> mult;
    for (int v : key) ++mult[v];
    for (const auto& [v, m] : mult) {
      BigInt fact = 1;
      for (int i = 1; i <= m; ++i) fact *= i;
      orbit /= fact;
    }
    if (orbit != info.second) return false;
  }
  return true;
}

bool is_quasisymmetric(const Polynomial& f) {
  const int n = f.nvars();
  std::map<std::vector<int>, bool> seen;  // flattened exponent patterns already checked
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> alpha;
    for (int v : e)
      if (v > 0) alpha.push_back(v);
    if (seen.count(alpha)) continue;
    seen[alpha] = true;
    const int l = static_cast<int>(alpha.size());
    BigInt expected = 0;
    bool have_expected = false;
    bool equal = true;
    detail::for_each_placement(l, n, [&](const std::vector<int>& pos) {
      std::vector<int> ee(static_cast<size_t>(n), 0);
      for (int j = 0; j < l; ++j) ee[static_cast<size_t>(pos[static_cast<size_t>(j)] - 1)] = alpha[static_cast<size_t>(j)];
      BigInt cc = f.coeff(ee);
      if (!have_expected) {
        expected = cc;
        have_expected = true;
      } else if (cc != expected) {
        equal = false;
      }
    });
    if (!equal) return false;
  }
  return true;
}

Polynomial slide_expansion_to_polynomial(const SlideExpansion& e, int n) {
  Polynomial out(n);
  for (const auto& [k, c] : e.terms()) {
    if (k.length() > n)
      throw std::invalid_argument("expansion index longer than variable count");
    Polynomial p(n);
    switch (e.basis()) {
      case Basis::monomial:
        p = Polynomial::monomial(k, n);
        break;
      case Basis::monomial_slide:
        p = expand_monomial_slide(k.padded(n));
        break;
      case Basis::fundamental_slide:
        p = expand_fundamental_slide(k.padded(n));
        break;
      default:
        throw std::invalid_argument("not a slide-type basis");
    }
    p *= c;
    out += p;
  }
  return out;
}

Polynomial qsym_expansion_to_polynomial(const QsymExpansion& e, int n) {
  Polynomial out(n);
  for (const auto& [k, c] : e.terms()) {
    Polynomial p(n);
    switch (e.basis()) {
      case Basis::monomial_qsym:
        p = expand_monomial_qsym(k, n);
        break;
      case Basis::fundamental_qsym:
        p = expand_fundamental_qsym(k, n);
        break;
      default:
        throw std::invalid_argument("not a quasisymmetric basis");
    }
    p *= c;
    out += p;
  }
  return out;
}

}  // namespace slide
