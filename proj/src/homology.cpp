#include "quiverpic/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "quiverpic/errors.hpp"

namespace quiverpic {

namespace {

// Row-major sparse matrix with a column index, for elimination.
class Eliminator {
 public:
  Eliminator(int rows, int cols) : rows_(static_cast<std::size_t>(rows)), cols_(static_cast<std::size_t>(cols)) {}

  void add(int r, int c, const BigInt& v) { set(r, c, get(r, c) + v); }

  SnfResult run() {
    SnfResult out;
    int r = 0, c = 0;
    while (global_pivot(r, c)) {
      for (;;) {
        const BigInt pv = get(r, c);
        // clear the pivot column with row operations
        const std::vector<int> others(cols_[static_cast<std::size_t>(c)].begin(), cols_[static_cast<std::size_t>(c)].end());
        for (int r2 : others) {
          if (r2 == r) continue;
          const BigInt q = get(r2, c) / pv;
          if (q != 0) add_row(r2, r, -q);
        }
        // clear the pivot row with column operations
        std::vector<int> row_cols;
        for (const auto& [c2, v] : rows_[static_cast<std::size_t>(r)]) row_cols.push_back(c2);
        for (int c2 : row_cols) {
          if (c2 == c) continue;
          const BigInt q = get(r, c2) / pv;
          if (q != 0) add_col(c2, c, -q);
        }
        if (rows_[static_cast<std::size_t>(r)].size() == 1 && cols_[static_cast<std::size_t>(c)].size() == 1) {
          out.diagonal.push_back(abs(pv));
          set(r, c, 0);
          break;
        }
        // a remainder is now smaller than the pivot; move there
        BigInt best = abs(pv);
        int nr = r, nc = c;
        for (const auto& [c2, v] : rows_[static_cast<std::size_t>(r)])
          if (abs(v) < best) best = abs(v), nr = r, nc = c2;
        for (int r2 : cols_[static_cast<std::size_t>(c)])
          if (abs(get(r2, c)) < best) best = abs(get(r2, c)), nr = r2, nc = c;
        r = nr;
        c = nc;
      }
    }
    fix_divisibility(out.diagonal);
    out.rank = out.diagonal.size();
    return out;
  }

 private:
  BigInt get(int r, int c) const {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? BigInt(0) : it->second;
  }

  void set(int r, int c, const BigInt& v) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    if (v == 0) {
      row.erase(c);
      cols_[static_cast<std::size_t>(c)].erase(r);
    } else {
      row[c] = v;
      cols_[static_cast<std::size_t>(c)].insert(r);
    }
  }

  // row dst += q * row src
  void add_row(int dst, int src, const BigInt& q) {
    const auto src_row = rows_[static_cast<std::size_t>(src)];
    for (const auto& [c, v] : src_row) set(dst, c, get(dst, c) + q * v);
  }

  // col dst += q * col src
  void add_col(int dst, int src, const BigInt& q) {
    const std::vector<int> rs(cols_[static_cast<std::size_t>(src)].begin(), cols_[static_cast<std::size_t>(src)].end());
    for (int r : rs) set(r, dst, get(r, dst) + q * get(r, src));
  }

  // smallest |value|, then Markowitz cost, then position
  bool global_pivot(int& r, int& c) const {
    bool found = false;
    BigInt best_v;
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [j, v] : rows_[i]) {
        const BigInt a = abs(v);
        const std::size_t cost = (rows_[i].size() - 1) * (cols_[static_cast<std::size_t>(j)].size() - 1);
        if (!found || a < best_v || (a == best_v && cost < best_cost)) {
          found = true;
          best_v = a;
          best_cost = cost;
          r = static_cast<int>(i);
          c = j;
        }
      }
    return found;
  }

  static void fix_divisibility(std::vector<BigInt>& d) {
    std::sort(d.begin(), d.end());
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        const BigInt g = gcd(d[i], d[j]);
        if (g == d[i]) continue;
        const BigInt l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
      }
  }

  std::vector<std::map<int, BigInt>> rows_;
  std::vector<std::set<int>> cols_;
};

}  // namespace

SnfResult smith_normal_form(const SparseMatrix& m) {
  Eliminator e(m.rows, m.cols);
  for (const auto& x : m.entries) {
    if (x.row < 0 || x.row >= m.rows || x.col < 0 || x.col >= m.cols) throw DimensionError("entry outside matrix");
    e.add(x.row, x.col, BigInt(x.value));
  }
  return e.run();
}

SnfResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) {
  SparseMatrix m;
  m.rows = static_cast<int>(dense.size());
  m.cols = dense.empty() ? 0 : static_cast<int>(dense[0].size());
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(dense[static_cast<std::size_t>(r)].size()) != m.cols) throw DimensionError("ragged matrix");
    for (int c = 0; c < m.cols; ++c)
      if (auto v = dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) m.entries.push_back({r, c, v});
  }
  return smith_normal_form(m);
}

bool HomologySummary::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

HomologySummary homology_of(const GradedComplex& complex) {
  const int top = complex.top();
  for (int k = 2; k <= top; ++k)
    if (!multiply(complex.boundary_matrix(k - 1), complex.boundary_matrix(k)).entries.empty())
      throw InvalidComplexError("boundary of boundary is nonzero in degree " + std::to_string(k));
  std::vector<SnfResult> snf(static_cast<std::size_t>(top + 2));
  for (int k = 1; k <= top; ++k) snf[static_cast<std::size_t>(k)] = smith_normal_form(complex.boundary_matrix(k));
  HomologySummary h;
  for (int k = 0; k <= top; ++k) {
    const auto dk = static_cast<std::int64_t>(snf[static_cast<std::size_t>(k)].rank);
    const auto dk1 = static_cast<std::int64_t>(snf[static_cast<std::size_t>(k + 1)].rank);
    h.betti.push_back(static_cast<std::int64_t>(complex.rank_of(k)) - dk - dk1);
    std::vector<std::string> t;
    for (const auto& v : snf[static_cast<std::size_t>(k + 1)].diagonal)
      if (v > 1) t.push_back(v.str());
    h.torsion.push_back(std::move(t));
  }
  return h;
}

std::vector<std::int64_t> associated_graded_betti(const SignVector& eps) {
  const int n = eps.n();
  std::set<Weight> weights;
  for (int k = 0; k <= n; ++k)
    for (const Cell& c : enumerate_cells(eps, k)) weights.insert(c.weight(n));
  std::vector<std::int64_t> total(static_cast<std::size_t>(n + 1), 0);
  for (const Weight& w : weights) {
    const auto h = homology_of(subquotient_complex(eps, w));
    for (std::size_t k = 0; k < h.betti.size() && k < total.size(); ++k) total[k] += h.betti[k];
  }
  return total;
}

std::int64_t betti_fast(const SignVector& eps, int k) {
  return static_cast<std::int64_t>(enumerate_basic_weights(eps.n(), k).size());
}

std::vector<std::int64_t> betti_fast_all(const SignVector& eps) {
  std::vector<std::int64_t> out;
  for (int k = 0; k <= eps.n(); ++k) out.push_back(betti_fast(eps, k));
  return out;
}

std::int64_t euler_characteristic(const SignVector& eps) {
  std::int64_t chi = 0;
  for (int k = 0; k <= eps.n(); ++k) {
    const auto c = static_cast<std::int64_t>(enumerate_cells(eps, k).size());
    chi += (k % 2 ? -c : c);
  }
  return chi;
}

}  // namespace quiverpic
