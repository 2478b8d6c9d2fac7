#include "quiverpic/chain_complex.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "quiverpic/errors.hpp"

namespace quiverpic {

bool cell_less(const Cell& a, const Cell& b, int n) {
  const Weight wa = a.weight(n), wb = b.weight(n);
  if (wa != wb) return wa < wb;
  return a.roots < b.roots;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols), 0));
  for (const auto& e : entries) m[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] += e.value;
  return m;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw DimensionError("matrix shapes do not compose");
  std::vector<std::vector<std::pair<int, std::int64_t>>> acol(static_cast<std::size_t>(a.cols));
  for (const auto& e : a.entries) acol[static_cast<std::size_t>(e.col)].push_back({e.row, e.value});
  std::map<std::pair<int, int>, std::int64_t> acc;
  for (const auto& e : b.entries)
    for (auto [r, v] : acol[static_cast<std::size_t>(e.row)]) acc[{e.col, r}] += v * e.value;
  SparseMatrix out{a.rows, b.cols, {}};
  for (auto& [key, v] : acc)
    if (v != 0) out.entries.push_back({key.second, key.first, v});
  return out;
}

const SparseMatrix& GradedComplex::boundary_matrix(int k) const {
  if (k < 0 || k >= static_cast<int>(d.size())) throw DomainError("no boundary matrix in degree " + std::to_string(k));
  return d[static_cast<std::size_t>(k)];
}

std::vector<Cell> enumerate_cells(const SignVector& eps, int k) {
  const int n = eps.n();
  if (k < 0 || k > n) throw DomainError("cell dimension out of range");
  const auto roots = all_positive_roots(n);
  const std::size_t m = roots.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) adj[a][b] = adj[b][a] = hom_orthogonal(eps, roots[a], roots[b]);
  std::vector<Cell> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == k) {
      Cell c;
      for (auto t : pick) c.roots.push_back(roots[t]);
      out.push_back(std::move(c));
      return;
    }
    for (std::size_t t = from; t < m; ++t) {
      bool ok = true;
      for (auto s : pick)
        if (!adj[s][t]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(t);
      rec(t + 1);
      pick.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [n](const Cell& a, const Cell& b) { return cell_less(a, b, n); });
  return out;
}

int change_of_basis_sign(const std::vector<std::uint32_t>& columns, int k) {
  if (static_cast<int>(columns.size()) != k) throw DimensionError("change of basis needs k columns");
  if (k == 0) return 1;
  std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k)));
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (columns[static_cast<std::size_t>(c)] >> r) & 1u;
  // Bareiss fraction-free elimination
  int sign = 1;
  std::int64_t prev = 1;
  for (int p = 0; p < k; ++p) {
    auto P = static_cast<std::size_t>(p);
    if (m[P][P] == 0) {
      int r = p + 1;
      while (r < k && m[static_cast<std::size_t>(r)][P] == 0) ++r;
      if (r == k) throw ConsistencyError("singular change of basis");
      std::swap(m[P], m[static_cast<std::size_t>(r)]);
      sign = -sign;
    }
    for (int r = p + 1; r < k; ++r)
      for (int c = p + 1; c < k; ++c) {
        auto R = static_cast<std::size_t>(r), C = static_cast<std::size_t>(c);
        m[R][C] = (m[R][C] * m[P][P] - m[R][P] * m[P][C]) / prev;
      }
    prev = m[P][P];
  }
  const std::int64_t det = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
  if (det == 0) throw ConsistencyError("singular change of basis");
  return det > 0 ? sign : -sign;
}

Chain boundary(const SignVector& eps, const Cell& cell) {
  const int k = cell.dim();
  if (k < 1) throw PreconditionError("boundary of a 0-cell");
  const auto wide = phi_plus_masked(eps, cell.roots);
  Chain out;
  for (const WideRoot& g : wide) {
    if (is_relative_projective(eps, cell.roots, g.root)) continue;
    HomOrthSet alpha = perp_simples_within(eps, cell.roots, g.root);
    std::vector<std::uint32_t> cols;
    for (const Root& a : alpha) {
      auto m = wide_mask(cell.roots, a);
      if (!m) throw ConsistencyError("perpendicular simple outside the wide subcategory");
      cols.push_back(*m);
    }
    cols.push_back(g.mask);
    const int s = change_of_basis_sign(cols, k);
    auto& coef = out[Cell{std::move(alpha)}];
    coef += s;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {
std::atomic<unsigned> g_worker_limit{0};

// Runs body(i) for i in [0, count) on up to worker_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

GradedComplex assemble(const SignVector& eps, std::vector<std::vector<Cell>> cells, const Weight* only) {
  const int n = eps.n();
  GradedComplex gc;
  gc.n = n;
  gc.cells = std::move(cells);
  const int top = gc.top();
  gc.d.assign(static_cast<std::size_t>(top + 2), SparseMatrix{});
  gc.d[0] = SparseMatrix{0, static_cast<int>(gc.rank_of(0)), {}};
  gc.d[static_cast<std::size_t>(top + 1)] = SparseMatrix{static_cast<int>(gc.rank_of(top)), 0, {}};
  for (int k = 1; k <= top; ++k) {
    const auto& rows = gc.cells[static_cast<std::size_t>(k - 1)];
    const auto& cols = gc.cells[static_cast<std::size_t>(k)];
    std::map<Cell, int> index;
    for (std::size_t r = 0; r < rows.size(); ++r) index.emplace(rows[r], static_cast<int>(r));
    std::vector<std::vector<SparseEntry>> per_col(cols.size());
    parallel_for(cols.size(), [&](std::size_t c) {
      for (const auto& [term, v] : boundary(eps, cols[c])) {
        if (only && term.weight(n) != *only) continue;
        auto it = index.find(term);
        if (it == index.end()) throw ConsistencyError("boundary term is not a cell");
        per_col[c].push_back({it->second, static_cast<int>(c), v});
      }
      std::sort(per_col[c].begin(), per_col[c].end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    });
    SparseMatrix m{static_cast<int>(rows.size()), static_cast<int>(cols.size()), {}};
    for (auto& col : per_col) m.entries.insert(m.entries.end(), col.begin(), col.end());
    gc.d[static_cast<std::size_t>(k)] = std::move(m);
  }
  return gc;
}
}  // namespace

unsigned worker_count() {
  unsigned limit = g_worker_limit.load();
  if (limit == 0) {
    if (const char* env = std::getenv("QUIVERPIC_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0) limit = static_cast<unsigned>(v);
    }
  }
  if (limit == 0) limit = std::max(1u, std::thread::hardware_concurrency());
  return limit;
}

void set_worker_limit(unsigned limit) { g_worker_limit = limit; }

GradedComplex build_complex(const SignVector& eps) {
  std::vector<std::vector<Cell>> cells;
  for (int k = 0; k <= eps.n(); ++k) cells.push_back(enumerate_cells(eps, k));
  return assemble(eps, std::move(cells), nullptr);
}

GradedComplex subquotient_complex(const SignVector& eps, const Weight& w) {
  const int n = eps.n();
  if (w.n() != n) throw DimensionError("weight length does not match quiver");
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(n + 1));
  for (auto& s : enumerate_hom_orth_sets_of_weight(eps, w)) cells[s.size()].push_back(Cell{std::move(s)});
  for (auto& v : cells) std::sort(v.begin(), v.end());
  return assemble(eps, std::move(cells), &w);
}

bool weight_filtration_check(const SignVector& eps) {
  const int n = eps.n();
  for (int k = 1; k <= n; ++k)
    for (const Cell& c : enumerate_cells(eps, k)) {
      const Weight wc = c.weight(n);
      for (const auto& [term, v] : boundary(eps, c)) {
        const Weight wt = term.weight(n);
        if (!wc.dominated_by(wt)) return false;
        // equal weight: two betas merge into one alpha and the rest agree
        bool sum_of_two = false;
        for (std::size_t x = 0; x < c.roots.size() && !sum_of_two; ++x)
          for (std::size_t y = 0; y < c.roots.size() && !sum_of_two; ++y) {
            if (c.roots[x].j != c.roots[y].i) continue;
            HomOrthSet merged{Root{c.roots[x].i, c.roots[y].j}};
            for (std::size_t z = 0; z < c.roots.size(); ++z)
              if (z != x && z != y) merged.push_back(c.roots[z]);
            std::sort(merged.begin(), merged.end());
            sum_of_two = merged == term.roots;
          }
        if ((wt == wc) != sum_of_two) return false;
      }
    }
  return true;
}

}  // namespace quiverpic
