#include "slide/products.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace slide {

namespace {

std::atomic<unsigned> g_max_threads{0};  // 0: use hardware concurrency

std::vector<long long> prefix_sums_padded(const WeakComposition& a, int n) {
  std::vector<long long> p(static_cast<size_t>(n), 0);
  long long acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += i < a.length() ? a[i] : 0;
    p[static_cast<size_t>(i)] = acc;
  }
  return p;
}

unsigned long long binomial_capped(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > (1ULL << 40)) return 1ULL << 62;
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  }
  return r;
}

constexpr unsigned long long kExhaustiveBumpThreshold = 200000;

}  // namespace

// ---- ShuffleWord ----

ShuffleWord::ShuffleWord(std::vector<int> letters, std::vector<bool> from_b)
    : letters_(std::move(letters)), from_b_(std::move(from_b)) {
  if (letters_.size() != from_b_.size())
    throw std::invalid_argument("shuffle word: tag length mismatch");
  for (int l : letters_)
    if (l < 1) throw std::invalid_argument("shuffle word letters must be >= 1");
}

ShuffleWord::RunProfile ShuffleWord::runs() const {
  std::vector<int> des, da, db;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i == 0 || letters_[i] < letters_[i - 1]) {
      des.push_back(0);
      da.push_back(0);
      db.push_back(0);
    }
    ++des.back();
    if (from_b_[i])
      ++db.back();
    else
      ++da.back();
  }
  return RunProfile{StrongComposition(std::move(des)), WeakComposition(std::move(da)),
                    WeakComposition(std::move(db))};
}

// ---- placement engine ----

WeakComposition minimal_bump_placement(const std::vector<int>& parts,
                                       const std::vector<std::vector<int>>& shares,
                                       const std::vector<WeakComposition>& targets,
                                       int n) {
  const int k = static_cast<int>(parts.size());
  const int tcount = static_cast<int>(targets.size());
  if (k > n) throw std::invalid_argument("bump: more parts than slots");
  for (const auto& sh : shares)
    if (static_cast<int>(sh.size()) != k)
      throw std::invalid_argument("bump: share length mismatch");

  std::vector<std::vector<long long>> need;
  need.reserve(targets.size());
  for (const auto& t : targets) need.push_back(prefix_sums_padded(t, n));

  // feasibility of a full position assignment (1-based, strictly increasing)
  auto valid = [&](const std::vector<int>& pos) {
    std::vector<long long> acc(static_cast<size_t>(tcount), 0);
    int j = 0;
    for (int i = 1; i <= n; ++i) {
      if (j < k && pos[static_cast<size_t>(j)] == i) {
        for (int t = 0; t < tcount; ++t)
          acc[static_cast<size_t>(t)] += shares[static_cast<size_t>(t)][static_cast<size_t>(j)];
        ++j;
      }
      for (int t = 0; t < tcount; ++t)
        if (acc[static_cast<size_t>(t)] < need[static_cast<size_t>(t)][static_cast<size_t>(i - 1)])
          return false;
    }
    return true;
  };

  // greedy: choose positions right to left, each as far right as a flush-left
  // completion of the earlier parts allows
  std::vector<int> pos(static_cast<size_t>(k), 0);
  {
    std::vector<int> tentative(static_cast<size_t>(k), 0);
    int hi = n + 1;
    for (int j = k - 1; j >= 0; --j) {
      bool found = false;
      for (int p = hi - 1; p >= j + 1 && !found; --p) {
        for (int t = 0; t < j; ++t) tentative[static_cast<size_t>(t)] = t + 1;
        tentative[static_cast<size_t>(j)] = p;
        for (int t = j + 1; t < k; ++t) tentative[static_cast<size_t>(t)] = pos[static_cast<size_t>(t)];
        if (valid(tentative)) {
          pos[static_cast<size_t>(j)] = p;
          hi = p;
          found = true;
        }
      }
      if (!found) throw std::invalid_argument("bump: no valid placement");
    }
  }

  auto place = [&](const std::vector<int>& p) {
    std::vector<int> c(static_cast<size_t>(n), 0);
    for (int j = 0; j < k; ++j) c[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = parts[static_cast<size_t>(j)];
    return WeakComposition(std::move(c));
  };

  // exhaustive verification below the threshold: the set of valid placements
  // must possess a unique dominance minimum, and the greedy must find it
  if (binomial_capped(n, k) <= kExhaustiveBumpThreshold) {
    std::vector<std::vector<int>> valid_positions;
    detail::for_each_placement(k, n, [&](const std::vector<int>& p) {
      if (valid(p)) valid_positions.push_back(p);
    });
    if (valid_positions.empty()) throw std::logic_error("bump: greedy found a phantom placement");
    std::vector<long long> best = prefix_sums_padded(place(valid_positions.front()), n);
    for (const auto& p : valid_positions) {
      auto pref = prefix_sums_padded(place(p), n);
      for (int i = 0; i < n; ++i)
        best[static_cast<size_t>(i)] = std::min(best[static_cast<size_t>(i)], pref[static_cast<size_t>(i)]);
    }
    const std::vector<int>* minimum = nullptr;
    for (const auto& p : valid_positions)
      if (prefix_sums_padded(place(p), n) == best) {
        minimum = &p;
        break;
      }
    if (minimum == nullptr)
      throw std::logic_error("bump: valid placements have no dominance minimum");
    if (*minimum != pos) throw std::logic_error("bump: greedy placement is not minimal");
  }

  return place(pos);
}

// ---- quasi-shuffle ----

QsymExpansion quasi_shuffle(const StrongComposition& alpha, const StrongComposition& beta) {
  const int la = alpha.length(), lb = beta.length();
  // dp[ia][ib]: quasi-shuffle of the suffixes starting at ia, ib
  std::vector<std::vector<QsymExpansion>> dp(
      static_cast<size_t>(la + 1),
      std::vector<QsymExpansion>(static_cast<size_t>(lb + 1),
                                 QsymExpansion(Basis::monomial_qsym)));
  auto prepend = [](int head, const QsymExpansion& tail) {
    QsymExpansion out(Basis::monomial_qsym);
    for (const auto& [k, c] : tail.terms()) {
      std::vector<int> parts{head};
      parts.insert(parts.end(), k.parts().begin(), k.parts().end());
      out.add(StrongComposition(std::move(parts)), c);
    }
    return out;
  };
  dp[static_cast<size_t>(la)][static_cast<size_t>(lb)].add(StrongComposition(), 1);
  for (int ia = la; ia >= 0; --ia)
    for (int ib = lb; ib >= 0; --ib) {
      if (ia == la && ib == lb) continue;
      QsymExpansion acc(Basis::monomial_qsym);
      if (ia < la)
        acc.add_scaled(prepend(alpha[ia], dp[static_cast<size_t>(ia + 1)][static_cast<size_t>(ib)]), 1);
      if (ib < lb)
        acc.add_scaled(prepend(beta[ib], dp[static_cast<size_t>(ia)][static_cast<size_t>(ib + 1)]), 1);
      if (ia < la && ib < lb)
        acc.add_scaled(
            prepend(alpha[ia] + beta[ib], dp[static_cast<size_t>(ia + 1)][static_cast<size_t>(ib + 1)]), 1);
      dp[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = std::move(acc);
    }
  return dp[0][0];
}

QsymExpansion quasi_shuffle_recursive(const StrongComposition& alpha,
                                      const StrongComposition& beta) {
  QsymExpansion out(Basis::monomial_qsym);
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int ia, int ib) {
    if (ia == alpha.length() && ib == beta.length()) {
      out.add(StrongComposition(cur), 1);
      return;
    }
    if (ia < alpha.length()) {
      cur.push_back(alpha[ia]);
      rec(ia + 1, ib);
      cur.pop_back();
    }
    if (ib < beta.length()) {
      cur.push_back(beta[ib]);
      rec(ia, ib + 1);
      cur.pop_back();
    }
    if (ia < alpha.length() && ib < beta.length()) {
      cur.push_back(alpha[ia] + beta[ib]);
      rec(ia + 1, ib + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

// ---- quasi-slide ----

std::vector<std::pair<WeakComposition, WeakComposition>> quasi_shuffle_set(
    const WeakComposition& a_in, const WeakComposition& b_in) {
  const int n = std::max(a_in.length(), b_in.length());
  const WeakComposition a = a_in.padded(n), b = b_in.padded(n);
  const StrongComposition alpha = flatten(a), beta = flatten(b);
  const int la = alpha.length(), lb = beta.length();
  std::vector<std::pair<WeakComposition, WeakComposition>> out;
  for (int k = std::max(la, lb); k <= std::min(n, la + lb); ++k) {
    detail::for_each_placement(la, k, [&](const std::vector<int>& pa) {
      std::vector<int> ga(static_cast<size_t>(k), 0);
      for (int j = 0; j < la; ++j) ga[static_cast<size_t>(pa[static_cast<size_t>(j)] - 1)] = alpha[j];
      WeakComposition gamma_a(ga);
      if (!dominates(gamma_a, a)) return;
      detail::for_each_placement(lb, k, [&](const std::vector<int>& pb) {
        std::vector<int> gb(static_cast<size_t>(k), 0);
        for (int j = 0; j < lb; ++j) gb[static_cast<size_t>(pb[static_cast<size_t>(j)] - 1)] = beta[j];
        for (int i = 0; i < k; ++i)
          if (ga[static_cast<size_t>(i)] + gb[static_cast<size_t>(i)] == 0) return;
        WeakComposition gamma_b(gb);
        if (!dominates(gamma_b, b)) return;
        out.emplace_back(gamma_a, gamma_b);
      });
    });
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.parts() != y.first.parts()) return x.first.parts() < y.first.parts();
    return x.second.parts() < y.second.parts();
  });
  return out;
}

WeakComposition bump_quasi(const WeakComposition& a, const WeakComposition& b,
                           const WeakComposition& gamma_a,
                           const WeakComposition& gamma_b) {
  const int n = std::max(a.length(), b.length());
  const int k = std::max(gamma_a.length(), gamma_b.length());
  std::vector<int> parts(static_cast<size_t>(k));
  std::vector<int> share_a(static_cast<size_t>(k)), share_b(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    int va = i < gamma_a.length() ? gamma_a[i] : 0;
    int vb = i < gamma_b.length() ? gamma_b[i] : 0;
    if (va + vb <= 0) throw std::invalid_argument("bump_quasi: zero combined part");
    parts[static_cast<size_t>(i)] = va + vb;
    share_a[static_cast<size_t>(i)] = va;
    share_b[static_cast<size_t>(i)] = vb;
  }
  return minimal_bump_placement(parts, {share_a, share_b}, {a.padded(n), b.padded(n)}, n);
}

SlideExpansion quasi_slide_product(const WeakComposition& a_in, const WeakComposition& b_in) {
  const int n = std::max(a_in.length(), b_in.length());
  const WeakComposition a = a_in.padded(n), b = b_in.padded(n);
  SlideExpansion out(Basis::monomial_slide);
  for (const auto& [ga, gb] : quasi_shuffle_set(a, b)) out.add(bump_quasi(a, b, ga, gb), 1);
  return out;
}

// ---- shuffle ----

std::set<std::vector<int>> shuffle_words(const std::vector<int>& A,
                                         const std::vector<int>& B) {
  std::set<std::vector<int>> out;
  const size_t total = A.size() + B.size();
  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(A.size()), true);
  std::sort(mask.begin(), mask.end(), std::greater<bool>());
  do {
    std::vector<int> word(total);
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < total; ++i)
      word[i] = mask[i] ? A[ia++] : B[ib++];
    out.insert(std::move(word));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::pair<std::vector<int>, std::vector<int>> encode_words(const WeakComposition& a,
                                                           const WeakComposition& b) {
  const int n = std::max(a.length(), b.length());
  std::vector<int> A, B;
  for (int i = 1; i <= n; ++i) {
    int ai = i <= a.length() ? a[i - 1] : 0;
    int bi = i <= b.length() ? b[i - 1] : 0;
    for (int t = 0; t < ai; ++t) A.push_back(2 * (n - i) + 1);
    for (int t = 0; t < bi; ++t) B.push_back(2 * (n - i) + 2);
  }
  return {A, B};
}

std::vector<ShuffleWord> all_tagged_shuffles(const std::vector<int>& A,
                                             const std::vector<int>& B) {
  std::vector<ShuffleWord> out;
  const size_t total = A.size() + B.size();
  std::vector<bool> mask(total, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(A.size()), true);
  std::sort(mask.begin(), mask.end(), std::greater<bool>());
  std::set<std::vector<int>> seen;
  do {
    std::vector<int> word(total);
    std::vector<bool> from_b(total);
    size_t ia = 0, ib = 0;
    for (size_t i = 0; i < total; ++i) {
      if (mask[i]) {
        word[i] = A[ia++];
        from_b[i] = false;
      } else {
        word[i] = B[ib++];
        from_b[i] = true;
      }
    }
    if (seen.insert(word).second) out.emplace_back(std::move(word), std::move(from_b));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ShuffleWord> shuffle_set(const WeakComposition& a_in,
                                     const WeakComposition& b_in) {
  const int n = std::max(a_in.length(), b_in.length());
  const WeakComposition a = a_in.padded(n), b = b_in.padded(n);
  auto [A, B] = encode_words(a, b);
  std::vector<ShuffleWord> out;
  for (auto& w : all_tagged_shuffles(A, B)) {
    auto profile = w.runs();
    if (dominates(profile.des_a, a) && dominates(profile.des_b, b)) out.push_back(std::move(w));
  }
  return out;
}

WeakComposition bump_slide(const WeakComposition& a_in, const WeakComposition& b_in,
                           const ShuffleWord& C) {
  const int n = std::max(a_in.length(), b_in.length());
  const WeakComposition a = a_in.padded(n), b = b_in.padded(n);
  auto profile = C.runs();
  const int k = profile.des.length();
  if (k > n) throw std::invalid_argument("bump_slide: more runs than slots");
  std::vector<int> parts(profile.des.parts());
  return minimal_bump_placement(parts, {profile.des_a.parts(), profile.des_b.parts()},
                                {a, b}, n);
}

SlideExpansion slide_product(const WeakComposition& a_in, const WeakComposition& b_in) {
  const int n = std::max(a_in.length(), b_in.length());
  const WeakComposition a = a_in.padded(n), b = b_in.padded(n);
  SlideExpansion out(Basis::fundamental_slide);
  for (const auto& C : shuffle_set(a, b)) out.add(bump_slide(a, b, C), 1);
  return out;
}

// ---- quasisymmetric products ----

QsymExpansion fundamental_qsym_product(const StrongComposition& alpha,
                                       const StrongComposition& beta) {
  // disjoint representative words: odd letters for alpha, even for beta,
  // strictly decreasing across runs
  std::vector<int> A, B;
  for (int j = 0; j < alpha.length(); ++j)
    for (int t = 0; t < alpha[j]; ++t) A.push_back(2 * (alpha.length() - j) - 1);
  for (int j = 0; j < beta.length(); ++j)
    for (int t = 0; t < beta[j]; ++t) B.push_back(2 * (beta.length() - j));
  QsymExpansion out(Basis::fundamental_qsym);
  for (const auto& C : shuffle_words(A, B)) out.add(descent_composition(C), 1);
  return out;
}

QsymExpansion monomial_qsym_product(const StrongComposition& alpha,
                                    const StrongComposition& beta) {
  return quasi_shuffle(alpha, beta);
}

// ---- Schubert products ----

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
  unsigned n = g_max_threads.load();
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

SlideExpansion schubert_product_slide(const Permutation& u, const Permutation& v) {
  const int n = std::max({u.last_descent(), v.last_descent(), 1});
  std::vector<WeakComposition> wu, wv;
  for (const auto& P : enumerate_qpd(u)) wu.push_back(P.weight().trimmed().padded(n));
  for (const auto& Q : enumerate_qpd(v)) wv.push_back(Q.weight().trimmed().padded(n));

  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < wu.size(); ++i)
    for (size_t j = 0; j < wv.size(); ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

  unsigned nthreads = std::min<unsigned>(max_threads(), static_cast<unsigned>(pairs.size()));
  if (nthreads <= 1 || pairs.size() < 16) {
    SlideExpansion out(Basis::fundamental_slide);
    for (const auto& [i, j] : pairs)
      out.add_scaled(slide_product(wu[static_cast<size_t>(i)], wv[static_cast<size_t>(j)]), 1);
    return out;
  }
  std::vector<SlideExpansion> partial(nthreads, SlideExpansion(Basis::fundamental_slide));
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t]() {
      for (size_t idx = t; idx < pairs.size(); idx += nthreads)
        partial[t].add_scaled(
            slide_product(wu[static_cast<size_t>(pairs[idx].first)],
                          wv[static_cast<size_t>(pairs[idx].second)]),
            1);
    });
  }
  for (auto& th : workers) th.join();
  SlideExpansion out(Basis::fundamental_slide);
  for (const auto& p : partial) out.add_scaled(p, 1);
  return out;
}

SchubertExpansion slide_expansion_to_schubert(const SlideExpansion& e,
                                              bool require_positive) {
  if (e.basis() != Basis::fundamental_slide)
    throw std::invalid_argument("expected a fundamental-slide expansion");
  SchubertExpansion out(Basis::schubert);
  SlideExpansion work = e;
  while (!work.is_zero()) {
    const WeakComposition a = work.terms().begin()->first;
    const BigInt c = work.terms().begin()->second;
    Permutation w = code_to_permutation(a);
    out.add(w, c);
    work.add_scaled(schubert_to_fundamental_slide(w), -c);
    if (require_positive && !work.all_nonnegative())
      throw std::domain_error("peel produced a negative coefficient");
  }
  return out;
}

}  // namespace slide
