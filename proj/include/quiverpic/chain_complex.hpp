#pragma once

// Cellular chain complex of the picture space: one k-cell per k-element
// hom-orthogonal set, with determinant-signed boundaries.

#include <cstdint>
#include <map>
#include <vector>

#include "quiverpic/quiver.hpp"
#include "quiverpic/weights.hpp"
#include "quiverpic/wide.hpp"

namespace quiverpic {

struct Cell {
  HomOrthSet roots;  // canonical order, carries coefficient +1

  int dim() const { return static_cast<int>(roots.size()); }
  Weight weight(int n) const { return Weight::of(roots, n); }
  auto operator<=>(const Cell&) const = default;
};

/// Canonical cell order: weight lex, then root list lex.
bool cell_less(const Cell& a, const Cell& b, int n);

using Chain = std::map<Cell, std::int64_t>;

struct SparseEntry {
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
  auto operator<=>(const SparseEntry&) const = default;
};

/// Entries sorted by (col, row), no zeros.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseEntry> entries;

  std::vector<std::vector<std::int64_t>> dense() const;
};

/// A * B; throws DimensionError on shape mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct GradedComplex {
  int n = 0;
  std::vector<std::vector<Cell>> cells;  // cells[k], k = 0..n
  // d[k] : C_k -> C_{k-1}, rows index cells[k-1]; d[0] and d[n+1] are empty maps
  std::vector<SparseMatrix> d;

  int top() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t rank_of(int k) const { return k >= 0 && k <= top() ? cells[static_cast<std::size_t>(k)].size() : 0; }
  const SparseMatrix& boundary_matrix(int k) const;
};

std::vector<Cell> enumerate_cells(const SignVector& eps, int k);

/// Sign of det of the change of basis (alpha_1..alpha_{k-1}, gamma) in terms
/// of (beta_1..beta_k), each column given as a subset mask of the betas.
int change_of_basis_sign(const std::vector<std::uint32_t>& columns, int k);

Chain boundary(const SignVector& eps, const Cell& cell);

/// Number of worker threads: QUIVERPIC_THREADS if set, else hardware.
unsigned worker_count();
void set_worker_limit(unsigned limit);

GradedComplex build_complex(const SignVector& eps);

/// Cells of weight exactly w with the weight-preserving part of the boundary.
GradedComplex subquotient_complex(const SignVector& eps, const Weight& w);

/// Every boundary term has weight >= the cell's weight coordinatewise, and
/// equal weight occurs exactly when two betas merge into one alpha and the
/// remaining alphas are the remaining betas.
bool weight_filtration_check(const SignVector& eps);

}  // namespace quiverpic
