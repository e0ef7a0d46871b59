#ifndef WRED_SMAT_HPP
#define WRED_SMAT_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "wred/rational.hpp"

namespace wred {

/// Sparse row: sorted (column, value) pairs, values nonzero.
using SRow = std::vector<std::pair<int, Rat>>;

/// Sparse exact-rational matrix, row major.  Rank routines use plain
/// Gaussian elimination over Q; entries are normalized per pivot row to
/// keep growth in check.  Exactness is the point, speed is secondary.
class SMat {
 public:
  SMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}
  SMat() : SMat(0, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rat& v) {
    if (v == 0) return;
    data_[r].emplace_back(c, v);
  }

  /// Merge duplicate column entries; call once after assembly.
  void compress() {
    for (auto& row : data_) {
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      SRow out;
      for (const auto& [c, v] : row) {
        if (!out.empty() && out.back().first == c)
          out.back().second += v;
        else
          out.emplace_back(c, v);
      }
      out.erase(std::remove_if(out.begin(), out.end(),
                               [](const auto& p) { return p.second == 0; }),
                out.end());
      row = std::move(out);
    }
  }

  const SRow& row(int r) const { return data_[r]; }

  SMat transposed() const {
    SMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.add(c, r, v);
    t.compress();
    return t;
  }

  int rank() const {
    auto prof = rank_profile_by_columns();
    return prof.empty() ? 0 : prof.back();
  }

  /// prof[j] = rank of the submatrix formed by columns 0..j.  Columns are
  /// processed left to right so Kazhdan-prefix ranks come out of one pass.
  std::vector<int> rank_profile_by_columns() const {
    std::vector<int> prof(cols_, 0);
    // column-major working copy
    std::vector<std::map<int, Rat>> cols(cols_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) cols[c][r] = v;
    // pivot_row -> eliminated column content
    std::map<int, std::map<int, Rat>> pivots;
    int rank = 0;
    for (int j = 0; j < cols_; ++j) {
      std::map<int, Rat> col = std::move(cols[j]);
      // reduce against existing pivots
      for (auto it = col.begin(); it != col.end();) {
        auto pv = pivots.find(it->first);
        if (pv == pivots.end()) {
          ++it;
          continue;
        }
        Rat factor = it->second;  // pivot value is normalized to 1
        // col -= factor * pivot_col
        for (const auto& [r, v] : pv->second) {
          auto pos = col.find(r);
          if (pos == col.end()) {
            Rat nv = -factor * v;
            if (nv != 0) col[r] = nv;
          } else {
            pos->second -= factor * v;
            if (pos->second == 0) col.erase(pos);
          }
        }
        it = col.upper_bound(pv->first);
      }
      if (!col.empty()) {
        int prow = col.begin()->first;
        Rat pval = col.begin()->second;
        for (auto& [r, v] : col) v /= pval;
        pivots.emplace(prow, std::move(col));
        ++rank;
      }
      prof[j] = rank;
    }
    return prof;
  }

  /// Right kernel basis (dense columns), for small matrices.
  std::vector<QVec> kernel_basis() const {
    // dense row echelon
    std::vector<QVec> m(rows_, QVec(cols_, Rat(0)));
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) m[r][c] += v;
    std::vector<int> pivot_col;
    int prow = 0;
    for (int c = 0; c < cols_ && prow < rows_; ++c) {
      int sel = -1;
      for (int r = prow; r < rows_; ++r)
        if (m[r][c] != 0) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(m[sel], m[prow]);
      Rat pv = m[prow][c];
      for (int cc = c; cc < cols_; ++cc) m[prow][cc] /= pv;
      for (int r = 0; r < rows_; ++r) {
        if (r == prow || m[r][c] == 0) continue;
        Rat f = m[r][c];
        for (int cc = c; cc < cols_; ++cc) m[r][cc] -= f * m[prow][cc];
      }
      pivot_col.push_back(c);
      ++prow;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> ker;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      QVec v(cols_, Rat(0));
      v[c] = 1;
      for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
      ker.push_back(std::move(v));
    }
    return ker;
  }

  /// Dense solve A x = b; returns false when inconsistent.  Small systems only.
  bool solve(const QVec& b, QVec& x) const {
    std::vector<QVec> m(rows_, QVec(cols_ + 1, Rat(0)));
    for (int r = 0; r < rows_; ++r) {
      for (const auto& [c, v] : data_[r]) m[r][c] += v;
      m[r][cols_] = b[r];
    }
    std::vector<int> pivot_col;
    int prow = 0;
    for (int c = 0; c < cols_ && prow < rows_; ++c) {
      int sel = -1;
      for (int r = prow; r < rows_; ++r)
        if (m[r][c] != 0) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(m[sel], m[prow]);
      Rat pv = m[prow][c];
      for (int cc = c; cc <= cols_; ++cc) m[prow][cc] /= pv;
      for (int r = 0; r < rows_; ++r) {
        if (r == prow || m[r][c] == 0) continue;
        Rat f = m[r][c];
        for (int cc = c; cc <= cols_; ++cc) m[r][cc] -= f * m[prow][cc];
      }
      pivot_col.push_back(c);
      ++prow;
    }
    for (int r = prow; r < rows_; ++r)
      if (m[r][cols_] != 0) return false;
    x.assign(cols_, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m[i][cols_];
    return true;
  }

 private:
  int rows_, cols_;
  std::vector<SRow> data_;
};

}  // namespace wred

#endif
