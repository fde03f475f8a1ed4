#include "slide/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace slide {

Tableau::Tableau(StrongComposition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (!shape_.is_partition())
    throw std::invalid_argument("tableau shape must be a partition");
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("row count does not match shape");
  for (int r = 0; r < shape_.length(); ++r) {
    const auto& row = rows_[static_cast<size_t>(r)];
    if (static_cast<int>(row.size()) != shape_[r])
      throw std::invalid_argument("row length does not match shape");
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw std::invalid_argument("tableau entries must be >= 1");
      if (c > 0 && row[c] < row[c - 1])
        throw std::invalid_argument("rows must weakly increase");
      if (r > 0 && row[c] <= rows_[static_cast<size_t>(r - 1)][c])
        throw std::invalid_argument("columns must strictly increase");
    }
  }
}

int Tableau::entry(int row, int col) const {
  return rows_[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
}

int Tableau::cell_count() const {
  return static_cast<int>(shape_.size());
}

int Tableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

WeakComposition Tableau::weight(int n) const {
  std::vector<int> w(static_cast<size_t>(n), 0);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v > n) throw std::invalid_argument("weight: entry exceeds n");
      ++w[static_cast<size_t>(v - 1)];
    }
  return WeakComposition(std::move(w));
}

bool Tableau::is_standard() const {
  int k = cell_count();
  std::vector<bool> seen(static_cast<size_t>(k + 1), false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v > k || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = true;
    }
  return true;
}

std::string Tableau::str() const {
  std::ostringstream os;
  for (int r = shape_.length(); r >= 1; --r) {
    for (size_t c = 0; c < rows_[static_cast<size_t>(r - 1)].size(); ++c) {
      if (c) os << ' ';
      os << rows_[static_cast<size_t>(r - 1)][c];
    }
    if (r > 1) os << '\n';
  }
  return os.str();
}

std::vector<Tableau> enumerate_ssyt(const StrongComposition& lambda, int n) {
  if (!lambda.is_partition())
    throw std::invalid_argument("enumerate_ssyt: shape must be a partition");
  std::vector<Tableau> out;
  if (lambda.length() == 0) {
    out.emplace_back(lambda, std::vector<std::vector<int>>{});
    return out;
  }
  if (lambda.length() > n) return out;
  std::vector<std::vector<int>> rows(static_cast<size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r)
    rows[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda[r]), 0);
  // fill cells row by row from the bottom, pruning on column strictness
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == lambda.length()) {
      out.emplace_back(lambda, rows);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= n; ++v) {
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      rec(nr, nc);
    }
    rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_syt(const StrongComposition& lambda) {
  if (!lambda.is_partition())
    throw std::invalid_argument("enumerate_syt: shape must be a partition");
  std::vector<Tableau> out;
  if (lambda.length() == 0) {
    out.emplace_back(lambda, std::vector<std::vector<int>>{});
    return out;
  }
  const int k = static_cast<int>(lambda.size());
  std::vector<std::vector<int>> rows(static_cast<size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r)
    rows[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda[r]), 0);
  std::vector<int> filled(static_cast<size_t>(lambda.length()), 0);  // cells used per row
  std::function<void(int)> rec = [&](int v) {
    if (v > k) {
      out.emplace_back(lambda, rows);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      int c = filled[static_cast<size_t>(r)];
      if (c >= lambda[r]) continue;
      if (r > 0 && filled[static_cast<size_t>(r - 1)] <= c) continue;  // cell below empty
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      ++filled[static_cast<size_t>(r)];
      rec(v + 1);
      --filled[static_cast<size_t>(r)];
      rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// column of the unique cell holding value v (standard tableaux only)
int column_of(const Tableau& T, int v) {
  for (const auto& row : T.rows())
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] == v) return static_cast<int>(c) + 1;
  throw std::logic_error("value not present in tableau");
}

int leftmost_column(const Tableau& T, int v) {
  int best = 0;
  for (const auto& row : T.rows())
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] == v && (best == 0 || static_cast<int>(c) + 1 < best))
        best = static_cast<int>(c) + 1;
  return best;  // 0 when absent
}

int rightmost_column(const Tableau& T, int v) {
  int best = 0;
  for (const auto& row : T.rows())
    for (size_t c = 0; c < row.size(); ++c)
      if (row[c] == v) best = std::max(best, static_cast<int>(c) + 1);
  return best;  // 0 when absent
}

}  // namespace

StrongComposition syt_descent_composition(const Tableau& T) {
  if (!T.is_standard())
    throw std::invalid_argument("descent composition requires a standard tableau");
  const int k = T.cell_count();
  std::vector<int> runs;
  for (int i = 1; i <= k; ++i) {
    bool new_run = i == 1 || column_of(T, i) <= column_of(T, i - 1);
    if (new_run)
      runs.push_back(1);
    else
      ++runs.back();
  }
  return StrongComposition(std::move(runs));
}

bool is_quasi_yamanouchi(const Tableau& T) {
  const int m = T.max_entry();
  for (int i = 2; i <= m; ++i) {
    int li = leftmost_column(T, i);
    if (li == 0) continue;
    int ri = rightmost_column(T, i - 1);
    if (ri == 0 || li > ri) return false;
  }
  return true;
}

std::vector<Tableau> enumerate_qyt(const StrongComposition& lambda, int n) {
  std::vector<Tableau> out;
  for (const auto& T : enumerate_ssyt(lambda, n))
    if (is_quasi_yamanouchi(T)) out.push_back(T);
  return out;
}

Tableau destandardize_tableau(const Tableau& T) {
  std::vector<std::vector<int>> rows = T.rows();
  Tableau cur(T.shape(), rows);
  bool changed = true;
  while (changed) {
    changed = false;
    int m = cur.max_entry();
    for (int i = 2; i <= m; ++i) {
      int li = leftmost_column(cur, i);
      if (li == 0) continue;
      int ri = rightmost_column(cur, i - 1);
      if (ri != 0 && li <= ri) continue;
      rows = cur.rows();
      for (auto& row : rows)
        for (int& v : row)
          if (v == i) v = i - 1;
      cur = Tableau(T.shape(), rows);
      changed = true;
      break;
    }
  }
  return cur;
}

StrongComposition qyt_weight(const Tableau& T) {
  const int m = T.max_entry();
  WeakComposition w = m == 0 ? WeakComposition() : T.weight(m);
  StrongComposition flat = flatten(w);
  if (flat.length() != w.length())
    throw std::invalid_argument("weight is not a strong composition");
  return flat;
}

Polynomial schur_via_ssyt(const StrongComposition& lambda, int n) {
  Polynomial out(n);
  for (const auto& T : enumerate_ssyt(lambda, n))
    out += Polynomial::monomial(T.weight(n), n);
  return out;
}

Polynomial schur_via_syt(const StrongComposition& lambda, int n) {
  Polynomial out(n);
  for (const auto& T : enumerate_syt(lambda))
    out += expand_fundamental_qsym(syt_descent_composition(T), n);
  return out;
}

std::pair<Polynomial, QsymExpansion> schur_via_qyt(const StrongComposition& lambda,
                                                   int n) {
  Polynomial out(n);
  QsymExpansion exp(Basis::fundamental_qsym);
  for (const auto& T : enumerate_qyt(lambda, n)) {
    StrongComposition wt = qyt_weight(T);
    exp.add(wt, 1);
    out += expand_fundamental_qsym(wt, n);
  }
  return {out, exp};
}

}  // namespace slide
