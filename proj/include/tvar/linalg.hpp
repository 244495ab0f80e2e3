#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tvar/vec.hpp"

namespace tvar {

using Mat = std::vector<Vec>;  // rows

inline int mat_rank(Mat a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].sign() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != static_cast<std::size_t>(r) && a[i][c].sign() != 0) {
        Rat f = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  return r;
}

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  Vec x;             // valid for Unique
  int witness_row;   // first inconsistent row (original index) for Inconsistent
};

// Exact Gaussian elimination for A x = b; A given by rows.
inline SolveResult solve_linear(Mat a, Vec b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> orig(rows);
  for (std::size_t i = 0; i < rows; ++i) orig[i] = static_cast<int>(i);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].sign() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::swap(b[r], b[piv]);
    std::swap(orig[r], orig[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c].sign() != 0) {
        Rat f = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        b[i] -= f * b[r];
      }
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i].sign() != 0) return {SolveStatus::Inconsistent, {}, orig[i]};
  if (pivot_col.size() < cols) return {SolveStatus::Underdetermined, {}, -1};
  Vec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return {SolveStatus::Unique, x, -1};
}

// Basis of {x : A x = 0}, via reduced row echelon form; deterministic.
inline Mat nullspace(Mat a, std::size_t cols) {
  std::size_t rows = a.size();
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].sign() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    Rat d = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] / d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c].sign() != 0) {
        Rat f = a[i][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  Mat basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Vec v = zero_vec(cols);
    v[c] = Rat(1);
    for (std::size_t d = 0; d < cols; ++d)
      if (pivot_of_col[d] >= 0) v[d] = -a[pivot_of_col[d]][c];
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

// Canonical basis of the row span: reduced echelon, primitive integer rows
// with positive leading entry, sorted. Used to compare lineality spaces.
inline Mat canonical_span_basis(Mat a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].sign() == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    Rat d = a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] = a[r][j] / d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c].sign() != 0) {
        Rat f = a[i][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  Mat out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(primitive_direction(a[i]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tvar
