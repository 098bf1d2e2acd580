#include "legkh/smith.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "legkh/error.hpp"

namespace legkh {
namespace {

struct Overflow {};

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
  return out;
}

const std::int64_t* find_entry(const SparseMatrix::Row& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// target -= factor * pivot, reporting columns that became nonzero.
void subtract_row(SparseMatrix::Row& target, std::int64_t factor, const SparseMatrix::Row& pivot,
                  std::vector<int>& fresh) {
  SparseMatrix::Row out;
  out.reserve(target.size() + pivot.size());
  auto a = target.begin();
  auto b = pivot.begin();
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->first < a->first) {
      out.push_back({b->first, checked_sub_mul(0, factor, b->second)});
      fresh.push_back(b->first);
      ++b;
    } else {
      const std::int64_t v = checked_sub_mul(a->second, factor, b->second);
      if (v != 0) out.push_back({a->first, v});
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void normalize_diagonal(std::vector<mpz_class>& diag) {
  for (auto& d : diag) d = abs(d);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  }
}

SmithResult dense_smith(std::vector<std::vector<mpz_class>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    auto place_min = [&]() {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(a[i][j]) != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!place_min()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) dirty = true;
      }
      if (!dirty) break;
      // A remainder survived: move the smallest entry of row/column t to the pivot.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
      }
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
    }
    diag.push_back(a[t][t]);
  }
  normalize_diagonal(diag);
  SmithResult result;
  result.rank = static_cast<int>(diag.size());
  for (const auto& d : diag) {
    if (d == 1) continue;
    if (!d.fits_slong_p()) throw Error(ErrorKind::TooLarge, "invariant factor exceeds 64 bits");
    result.torsion.push_back(d.get_si());
  }
  return result;
}

std::vector<std::vector<mpz_class>> to_mpz(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    auto& r = out.emplace_back();
    r.reserve(row.size());
    for (std::int64_t v : row) r.emplace_back(static_cast<long>(v));
  }
  return out;
}

}  // namespace

void SparseMatrix::add(int r, int c, std::int64_t value) {
  if (value == 0) return;
  Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

std::int64_t SparseMatrix::at(int r, int c) const {
  const std::int64_t* v = find_entry(rows_[r], c);
  return v ? *v : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  SparseMatrix out(rows(), other.cols());
  for (int r = 0; r < rows(); ++r) {
    std::vector<std::pair<int, std::int64_t>> acc;
    for (auto [k, a] : rows_[r]) {
      for (auto [c, b] : other.rows_[k]) acc.push_back({c, a * b});
    }
    std::sort(acc.begin(), acc.end());
    for (auto [c, v] : acc) out.add(r, c, v);
  }
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows(), std::vector<std::int64_t>(cols_, 0));
  for (int r = 0; r < rows(); ++r) {
    for (auto [c, v] : rows_[r]) out[r][c] = v;
  }
  return out;
}

SmithResult dense_smith_normal_form(const std::vector<std::vector<std::int64_t>>& matrix) {
  return dense_smith(to_mpz(matrix));
}

SmithResult smith_normal_form(const SparseMatrix& matrix) {
  std::vector<SparseMatrix::Row> rows;
  for (int r = 0; r < matrix.rows(); ++r) rows.push_back(matrix.row(r));
  std::vector<std::vector<int>> col_rows(matrix.cols());
  for (int r = 0; r < matrix.rows(); ++r) {
    for (auto [c, v] : rows[r]) col_rows[c].push_back(r);
  }
  std::vector<bool> alive(rows.size(), true);
  int rank = 0;
  try {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int c = 0; c < matrix.cols(); ++c) {
        // Drop stale references and look for the shortest row with a unit here.
        auto& list = col_rows[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::erase_if(list, [&](int r) { return !alive[r] || find_entry(rows[r], c) == nullptr; });
        int pivot = -1;
        for (int r : list) {
          const std::int64_t v = *find_entry(rows[r], c);
          if ((v == 1 || v == -1) && (pivot == -1 || rows[r].size() < rows[pivot].size())) pivot = r;
        }
        if (pivot == -1) continue;
        const std::int64_t pv = *find_entry(rows[pivot], c);
        std::vector<int> fresh;
        for (int r : list) {
          if (r == pivot) continue;
          const std::int64_t factor = *find_entry(rows[r], c) * pv;
          fresh.clear();
          subtract_row(rows[r], factor, rows[pivot], fresh);
          for (int f : fresh) col_rows[f].push_back(r);
        }
        alive[pivot] = false;
        rows[pivot].clear();
        list.clear();
        ++rank;
        progress = true;
      }
    }
  } catch (const Overflow&) {
    return dense_smith(to_mpz(matrix.dense()));
  }

  // Dense remainder over the surviving rows and columns.
  std::vector<int> col_index(matrix.cols(), -1);
  int kept_cols = 0;
  std::vector<int> kept_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    kept_rows.push_back(static_cast<int>(r));
    for (auto [c, v] : rows[r]) {
      if (col_index[c] == -1) col_index[c] = kept_cols++;
    }
  }
  std::vector<std::vector<mpz_class>> rest(kept_rows.size(), std::vector<mpz_class>(kept_cols));
  for (std::size_t i = 0; i < kept_rows.size(); ++i) {
    for (auto [c, v] : rows[kept_rows[i]]) rest[i][col_index[c]] = static_cast<long>(v);
  }
  SmithResult tail = dense_smith(std::move(rest));
  tail.rank += rank;
  return tail;
}

}  // namespace legkh
