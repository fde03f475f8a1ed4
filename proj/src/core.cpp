#include "slide/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace slide {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unbalanced brackets: " + text);
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer list: " + text);
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw ParseError("not an integer list: " + text);
    out.push_back(v);
  }
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ']';
  return s;
}

std::vector<long long> prefix_sums(const std::vector<int>& v) {
  std::vector<long long> p(v.size());
  long long acc = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    p[i] = acc;
  }
  return p;
}

}  // namespace

// ---- WeakComposition ----

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("weak composition entries must be >= 0");
}

long long WeakComposition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

WeakComposition WeakComposition::padded(int n) const {
  if (n < length()) throw std::invalid_argument("padded: target length too small");
  std::vector<int> p = parts_;
  p.resize(static_cast<size_t>(n), 0);
  return WeakComposition(std::move(p));
}

WeakComposition WeakComposition::trimmed() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return WeakComposition(std::move(p));
}

WeakComposition WeakComposition::prepend_zeros(int m) const {
  std::vector<int> p(static_cast<size_t>(m), 0);
  p.insert(p.end(), parts_.begin(), parts_.end());
  return WeakComposition(std::move(p));
}

WeakComposition WeakComposition::append_zeros(int m) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), static_cast<size_t>(m), 0);
  return WeakComposition(std::move(p));
}

bool WeakComposition::all_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x == 0; });
}

bool WeakComposition::is_quasi_flat() const {
  int last = last_nonzero_index();
  int first = 0;
  for (int i = 0; i < length(); ++i)
    if (parts_[static_cast<size_t>(i)] > 0) {
      first = i + 1;
      break;
    }
  if (last == 0) return true;
  for (int i = first; i <= last; ++i)
    if (parts_[static_cast<size_t>(i - 1)] == 0) return false;
  return true;
}

int WeakComposition::last_nonzero_index() const {
  for (int i = length(); i >= 1; --i)
    if (parts_[static_cast<size_t>(i - 1)] > 0) return i;
  return 0;
}

std::string WeakComposition::str() const { return format_int_list(parts_); }

WeakComposition WeakComposition::parse(const std::string& text) {
  return WeakComposition(parse_int_list(text));
}

bool operator==(const WeakComposition& a, const WeakComposition& b) {
  return a.trimmed().parts() == b.trimmed().parts();
}

bool operator<(const WeakComposition& a, const WeakComposition& b) {
  long long sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  int len = std::max(a.length(), b.length());
  for (int i = len - 1; i >= 0; --i) {
    int ai = i < a.length() ? a[i] : 0;
    int bi = i < b.length() ? b[i] : 0;
    if (ai != bi) return ai > bi;
  }
  return false;
}

// ---- StrongComposition ----

StrongComposition::StrongComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("strong composition entries must be >= 1");
}

long long StrongComposition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool StrongComposition::is_partition() const {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) return false;
  return true;
}

std::string StrongComposition::str() const { return format_int_list(parts_); }

StrongComposition StrongComposition::parse(const std::string& text) {
  return StrongComposition(parse_int_list(text));
}

bool operator<(const StrongComposition& a, const StrongComposition& b) {
  long long sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  int len = std::max(a.length(), b.length());
  for (int i = len - 1; i >= 0; --i) {
    int ai = i < a.length() ? a[i] : 0;
    int bi = i < b.length() ? b[i] : 0;
    if (ai != bi) return ai > bi;
  }
  return false;
}

// ---- Permutation ----

Permutation::Permutation() : one_line_{1} {}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  if (one_line_.empty()) {
    one_line_ = {1};
    return;
  }
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of {1..N}");
    seen[static_cast<size_t>(v)] = true;
  }
  canonicalize();
}

void Permutation::canonicalize() {
  while (one_line_.size() > 1 &&
         one_line_.back() == static_cast<int>(one_line_.size()))
    one_line_.pop_back();
}

int Permutation::apply(int i) const {
  if (i < 1) throw std::invalid_argument("permutation applied to nonpositive value");
  return i <= degree() ? one_line_[static_cast<size_t>(i - 1)] : i;
}

bool Permutation::is_identity() const { return one_line_.size() == 1; }

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(inv));
}

long long Permutation::inversions() const {
  long long count = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (one_line_[static_cast<size_t>(i)] > one_line_[static_cast<size_t>(j)]) ++count;
  return count;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int i = 1; i < degree(); ++i)
    if (apply(i) > apply(i + 1)) out.push_back(i);
  return out;
}

int Permutation::first_descent() const {
  for (int i = 1; i < degree(); ++i)
    if (apply(i) > apply(i + 1)) return i;
  return 0;
}

int Permutation::last_descent() const {
  for (int i = degree() - 1; i >= 1; --i)
    if (apply(i) > apply(i + 1)) return i;
  return 0;
}

Permutation Permutation::left_mul_transposition(int k) const {
  if (k < 1) throw std::invalid_argument("transposition index must be >= 1");
  std::vector<int> v = one_line_;
  if (static_cast<int>(v.size()) < k + 1) {
    size_t old = v.size();
    v.resize(static_cast<size_t>(k + 1));
    for (size_t i = old; i < v.size(); ++i) v[i] = static_cast<int>(i + 1);
  }
  auto pk = std::find(v.begin(), v.end(), k);
  auto pk1 = std::find(v.begin(), v.end(), k + 1);
  std::iter_swap(pk, pk1);
  return Permutation(std::move(v));
}

Permutation Permutation::right_mul_transposition(int k) const {
  if (k < 1) throw std::invalid_argument("transposition index must be >= 1");
  std::vector<int> v = one_line_;
  if (static_cast<int>(v.size()) < k + 1) {
    size_t old = v.size();
    v.resize(static_cast<size_t>(k + 1));
    for (size_t i = old; i < v.size(); ++i) v[i] = static_cast<int>(i + 1);
  }
  std::swap(v[static_cast<size_t>(k - 1)], v[static_cast<size_t>(k)]);
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  int n = std::max(u.degree(), v.degree());
  std::vector<int> out(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i - 1)] = u.apply(v.apply(i));
  return Permutation(std::move(out));
}

std::string Permutation::str() const {
  std::string s;
  for (size_t i = 0; i < one_line_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(one_line_[i]);
  }
  return s;
}

Permutation Permutation::parse(const std::string& text) {
  if (text.find(',') == std::string::npos && !text.empty() &&
      std::all_of(text.begin(), text.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    std::vector<int> v;
    for (char c : text) v.push_back(c - '0');
    return Permutation(std::move(v));
  }
  return Permutation(parse_int_list(text));
}

bool operator<(const Permutation& a, const Permutation& b) {
  long long ia = a.inversions(), ib = b.inversions();
  if (ia != ib) return ia < ib;
  return a.one_line() < b.one_line();
}

// ---- ReducedWord ----

ReducedWord::ReducedWord(std::vector<int> indices) : indices_(std::move(indices)) {
  auto prod = reduced_word_product(indices_);
  if (!prod) throw std::invalid_argument("word is not reduced");
  target_ = *prod;
}

std::optional<Permutation> reduced_word_product(const std::vector<int>& indices) {
  Permutation v;
  for (int k : indices) {
    if (k < 1) return std::nullopt;
    // s_k * v lengthens exactly when k appears before k+1 in v.
    const Permutation inv = v.inverse();
    if (inv.apply(k) > inv.apply(k + 1)) return std::nullopt;
    v = v.left_mul_transposition(k);
  }
  return v;
}

// ---- composition operations ----

StrongComposition flatten(const WeakComposition& a) {
  std::vector<int> out;
  for (int p : a.parts())
    if (p > 0) out.push_back(p);
  return StrongComposition(std::move(out));
}

bool dominates(const WeakComposition& b, const WeakComposition& a) {
  int n = std::max(a.length(), b.length());
  long long pb = 0, pa = 0;
  for (int i = 0; i < n; ++i) {
    pb += i < b.length() ? b[i] : 0;
    pa += i < a.length() ? a[i] : 0;
    if (pb < pa) return false;
  }
  return true;
}

WeakComposition min_dominating_placement(const StrongComposition& phi,
                                         const WeakComposition& over, int n) {
  const int k = phi.length();
  if (k > n) throw std::invalid_argument("min_dominating_placement: too many parts");
  const auto need = prefix_sums(over.padded(n).parts());
  // positions are chosen right to left, each as far right as a flush-left
  // completion of the remaining prefix parts allows
  std::vector<int> pos(static_cast<size_t>(k), 0);
  auto feasible = [&](int j, int p) {
    // parts 0..j-1 flush left at 1..j, part j at p, parts j+1.. at pos[]
    std::vector<int> c(static_cast<size_t>(n), 0);
    for (int t = 0; t < j; ++t) c[static_cast<size_t>(t)] = phi[t];
    c[static_cast<size_t>(p - 1)] = phi[j];
    for (int t = j + 1; t < k; ++t) c[static_cast<size_t>(pos[static_cast<size_t>(t)] - 1)] = phi[t];
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
      acc += c[static_cast<size_t>(i)];
      if (acc < need[static_cast<size_t>(i)]) return false;
    }
    return true;
  };
  int hi = n + 1;
  for (int j = k - 1; j >= 0; --j) {
    bool found = false;
    for (int p = hi - 1; p >= j + 1; --p) {
      if (feasible(j, p)) {
        pos[static_cast<size_t>(j)] = p;
        hi = p;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("min_dominating_placement: no valid placement");
  }
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (int j = 0; j < k; ++j) c[static_cast<size_t>(pos[static_cast<size_t>(j)] - 1)] = phi[j];
  return WeakComposition(std::move(c));
}

bool strongly_dominates(const WeakComposition& b, const WeakComposition& a) {
  if (!dominates(b, a)) return false;
  int n = std::max(a.length(), b.length());
  return b == min_dominating_placement(flatten(b), a, n);
}

bool refines(const StrongComposition& beta, const StrongComposition& alpha) {
  long long acc = 0;
  int j = 0;
  for (int i = 0; i < beta.length(); ++i) {
    acc += beta[i];
    if (j >= alpha.length()) return false;
    if (acc == alpha[j]) {
      acc = 0;
      ++j;
    } else if (acc > alpha[j]) {
      return false;
    }
  }
  return acc == 0 && j == alpha.length();
}

std::vector<StrongComposition> compositions_of(int k) {
  std::vector<StrongComposition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(k);
  return out;
}

std::vector<StrongComposition> refinements_of(const StrongComposition& alpha) {
  std::vector<std::vector<int>> acc{{}};
  for (int i = 0; i < alpha.length(); ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& block : compositions_of(alpha[i]))
      for (const auto& head : acc) {
        std::vector<int> merged = head;
        merged.insert(merged.end(), block.parts().begin(), block.parts().end());
        next.push_back(std::move(merged));
      }
    acc = std::move(next);
  }
  std::vector<StrongComposition> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return out;
}

StrongComposition descent_composition(const std::vector<int>& word) {
  std::vector<int> runs;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] < word[i - 1])
      runs.push_back(1);
    else
      ++runs.back();
  }
  return StrongComposition(std::move(runs));
}

// ---- permutation operations ----

WeakComposition lehmer_code(const Permutation& w) {
  int n = w.degree();
  std::vector<int> code(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w.one_line()[static_cast<size_t>(i)] > w.one_line()[static_cast<size_t>(j)])
        ++code[static_cast<size_t>(i)];
  return WeakComposition(std::move(code));
}

Permutation code_to_permutation(const WeakComposition& a) {
  int maxp = 0;
  for (int p : a.parts()) maxp = std::max(maxp, p);
  int n = a.length() + maxp;
  std::vector<int> avail(static_cast<size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> out;
  for (int i = 0; i < a.length(); ++i) {
    int idx = a[i];
    out.push_back(avail[static_cast<size_t>(idx)]);
    avail.erase(avail.begin() + idx);
  }
  out.insert(out.end(), avail.begin(), avail.end());
  return Permutation(std::move(out));
}

Permutation grassmannian(const StrongComposition& lambda, int n) {
  if (!lambda.is_partition())
    throw std::invalid_argument("grassmannian: shape must be a partition");
  if (lambda.length() > n)
    throw std::invalid_argument("grassmannian: partition longer than n");
  if (lambda.length() == 0) return Permutation::identity();
  std::vector<int> head;
  for (int i = 1; i <= n; ++i) {
    int li = n + 1 - i <= lambda.length() ? lambda[n - i] : 0;
    head.push_back(i + li);
  }
  int total = n + lambda[0];
  std::vector<bool> used(static_cast<size_t>(total + 1), false);
  for (int v : head) used[static_cast<size_t>(v)] = true;
  std::vector<int> out = head;
  for (int v = 1; v <= total; ++v)
    if (!used[static_cast<size_t>(v)]) out.push_back(v);
  return Permutation(std::move(out));
}

namespace {

void gen_reduced_words(const Permutation& v, std::vector<int>& suffix,
                       std::vector<ReducedWord>& out) {
  if (v.is_identity()) {
    std::vector<int> word(suffix.rbegin(), suffix.rend());
    out.emplace_back(std::move(word));
    return;
  }
  const Permutation inv = v.inverse();
  int top = v.degree();
  for (int j = 1; j < top; ++j) {
    if (inv.apply(j) > inv.apply(j + 1)) {  // s_j * v is shorter
      suffix.push_back(j);
      gen_reduced_words(v.left_mul_transposition(j), suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  std::vector<int> suffix;
  gen_reduced_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation embed_left(const Permutation& w, int m) {
  if (m < 0) throw std::invalid_argument("embed_left: negative shift");
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) out.push_back(i);
  for (int v : w.one_line()) out.push_back(v + m);
  return Permutation(std::move(out));
}

Permutation embed_right(const Permutation& w, int m) {
  if (m < 0) throw std::invalid_argument("embed_right: negative shift");
  return w;  // trailing fixed points are trimmed by the canonical form
}

}  // namespace slide
