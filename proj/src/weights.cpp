#include "quiverpic/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>

#include "quiverpic/errors.hpp"

namespace quiverpic {

Weight Weight::parse(std::string_view text) {
  Weight w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError("bad weight '" + std::string(text) + "'");
    w.coords.push_back(v);
    pos = end + 1;
  }
  return w;
}

Weight Weight::of(const std::vector<Root>& roots, int n) {
  Weight w{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (const Root& r : roots) {
    if (r.j > n) throw DimensionError("root does not fit the quiver");
    for (int k = r.i; k < r.j; ++k) ++w.coords[static_cast<std::size_t>(k)];
  }
  return w;
}

int Weight::at(int k) const {
  if (k <= 0 || k > n()) return 0;
  return coords[static_cast<std::size_t>(k - 1)];
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords[k]);
  }
  return s;
}

std::string Weight::compact() const {
  std::string s;
  for (int c : coords) s += std::to_string(c);
  return s;
}

bool Weight::dominated_by(const Weight& other) const {
  if (n() != other.n()) throw DimensionError("weights of different length");
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] > other.coords[k]) return false;
  return true;
}

int Block::degree() const {
  int d = 0, prev = 0;
  for (int c : coords) {
    if (c == prev + 1) ++d;
    prev = c;
  }
  return d;
}

bool is_admissible(const Weight& w) {
  for (int k = 0; k <= w.n(); ++k)
    if (std::abs(w.at(k) - w.at(k + 1)) > 1) return false;
  return true;
}

std::vector<int> resolution_set(const Weight& w) {
  std::vector<int> r;
  for (int k = 1; k < w.n(); ++k)
    if (w.at(k) == w.at(k + 1) && w.at(k) > 0) r.push_back(k);
  return r;
}

bool is_basic(const Weight& w) { return is_admissible(w) && resolution_set(w).empty(); }

int degree(const Weight& w) {
  int d = 0;
  for (int k = 0; k < w.n(); ++k)
    if (w.at(k + 1) == w.at(k) + 1) ++d;
  return d;
}

std::vector<Block> blocks(const Weight& w) {
  std::vector<Block> out;
  int k = 1;
  while (k <= w.n()) {
    if (w.at(k) == 0) {
      ++k;
      continue;
    }
    Block b;
    b.p = k - 1;
    while (k <= w.n() && w.at(k) > 0) b.coords.push_back(w.at(k++));
    b.q = k - 1;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Block> enumerate_blocks(int p, int q) {
  const int len = q - p;
  if (p < 0 || len <= 0 || len % 2 == 0) throw DomainError("blocks need odd positive length");
  std::vector<Block> out;
  std::vector<int> coords;
  // coords are a Dyck path of length len - 1 shifted up by one
  std::function<void(int)> rec = [&](int h) {
    const int placed = static_cast<int>(coords.size());
    if (placed == len) {
      if (h == 1) out.push_back({p, q, coords});
      return;
    }
    const int remaining = len - placed;
    for (int next : {h - 1, h + 1}) {
      if (placed == 0 && next != 1) continue;
      if (next < 1 || next - 1 > remaining - 1) continue;
      coords.push_back(next);
      rec(next);
      coords.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Weight> enumerate_basic_weights(int n, int k) {
  std::vector<Weight> out;
  if (n < 0 || k < 0) return out;
  std::vector<int> coords;
  std::function<void(int, int)> rec = [&](int prev, int asc) {
    const int placed = static_cast<int>(coords.size());
    if (asc > k) return;
    if (placed == n) {
      if (asc == k && prev <= 1) out.push_back(Weight{coords});
      return;
    }
    // must be able to descend to zero in the remaining steps
    if (prev > n - placed + 1) return;
    const int down = std::max(prev - 1, 0);
    coords.push_back(down);
    rec(down, asc);
    coords.pop_back();
    coords.push_back(prev + 1);
    rec(prev + 1, asc + 1);
    coords.pop_back();
  };
  rec(0, 0);
  return out;
}

std::vector<Weight> enumerate_admissible_weights(int n) {
  std::vector<Weight> out;
  std::vector<int> coords;
  std::function<void(int)> rec = [&](int prev) {
    const int placed = static_cast<int>(coords.size());
    if (placed == n) {
      if (prev <= 1) out.push_back(Weight{coords});
      return;
    }
    if (prev > n - placed + 1) return;
    for (int next : {prev - 1, prev, prev + 1}) {
      if (next < 0) continue;
      coords.push_back(next);
      rec(next);
      coords.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::pair<int, int>> height_intervals(const SignVector& eps, const Weight& w) {
  const int n = eps.n();
  if (w.n() != n) throw DimensionError("weight length does not match quiver");
  std::vector<std::pair<int, int>> iv(static_cast<std::size_t>(n));
  iv[0] = {0, w.at(1)};
  for (int i = 1; i < n; ++i) {
    auto [a, b] = iv[static_cast<std::size_t>(i - 1)];
    if (eps.plus(i))
      iv[static_cast<std::size_t>(i)] = {a, a + w.at(i + 1)};
    else
      iv[static_cast<std::size_t>(i)] = {b - w.at(i + 1), b};
  }
  return iv;
}

std::vector<Root> generic_decomposition(const SignVector& eps, const Weight& w) {
  const int n = eps.n();
  const auto iv = height_intervals(eps, w);
  auto in = [&](int k, int c) {
    if (k < 1 || k > n) return false;
    auto [a, b] = iv[static_cast<std::size_t>(k - 1)];
    return a < c && c <= b;
  };
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto [lo, hi] = iv[static_cast<std::size_t>(i)];  // interval of vertex i+1
      for (int c = lo + 1; c <= hi; ++c) {
        if (in(i, c) || in(j + 1, c)) continue;
        bool all = true;
        for (int k = i + 1; k <= j && all; ++k) all = in(k, c);
        if (all) out.push_back({i, j});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

HomOrthSet cut_set_cell(const SignVector& eps, const Weight& w, const std::vector<int>& S) {
  const int n = eps.n();
  if (w.n() != n) throw DimensionError("weight length does not match quiver");
  if (!is_admissible(w)) throw DomainError("weight " + w.str() + " is not admissible");
  const auto R = resolution_set(w);
  std::vector<int> cut = S;
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  for (int s : cut)
    if (!std::binary_search(R.begin(), R.end(), s)) throw DomainError(std::to_string(s) + " is not in R(w)");

  // enlarged quiver: a copy of vertex s, weight w_s - 1, placed after s
  std::vector<int> big;
  std::vector<bool> inserted;
  std::vector<Sign> signs;
  for (int k = 1; k <= n; ++k) {
    big.push_back(w.at(k));
    inserted.push_back(false);
    const bool dup = std::binary_search(cut.begin(), cut.end(), k);
    if (dup) {
      big.push_back(w.at(k) - 1);
      inserted.push_back(true);
    }
    if (k < n) {
      signs.push_back(eps.at(k));
      if (dup) signs.push_back(eps.at(k));
    }
  }
  const SignVector big_eps(std::move(signs));
  // original[t] = number of original vertices among the first t enlarged ones
  std::vector<int> original(big.size() + 1, 0);
  for (std::size_t t = 0; t < big.size(); ++t) original[t + 1] = original[t] + (inserted[t] ? 0 : 1);

  std::vector<Root> out;
  for (const Root& r : generic_decomposition(big_eps, Weight{big})) {
    Root s{original[static_cast<std::size_t>(r.i)], original[static_cast<std::size_t>(r.j)]};
    if (s.i >= s.j) throw ConsistencyError("cut-set construction produced an empty root");
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end() || !is_hom_orthogonal_set(eps, out) ||
      Weight::of(out, n) != w)
    throw ConsistencyError("cut-set construction failed for " + w.str());
  return out;
}

std::vector<int> cut_set_of(const HomOrthSet& roots, const Weight& w) {
  std::vector<int> out;
  for (int k : resolution_set(w))
    if (std::any_of(roots.begin(), roots.end(), [k](const Root& r) { return r.i == k || r.j == k; })) out.push_back(k);
  return out;
}

std::vector<HomOrthSet> enumerate_hom_orth_sets_of_weight(const SignVector& eps, const Weight& w) {
  const int n = eps.n();
  if (w.n() != n) throw DimensionError("weight length does not match quiver");
  std::vector<HomOrthSet> out;
  std::vector<int> rest = w.coords;
  std::vector<Root> chosen;
  std::function<void()> rec = [&]() {
    std::size_t p = 0;
    while (p < rest.size() && rest[p] == 0) ++p;
    if (p == rest.size()) {
      HomOrthSet s = chosen;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    // any root still to come that covers vertex p+1 must start at p
    for (std::size_t q = p; q < rest.size() && rest[q] > 0; ++q) {
      Root r{static_cast<int>(p), static_cast<int>(q) + 1};
      bool ok = true;
      for (const Root& c : chosen)
        if (!hom_orthogonal(eps, r, c)) ok = false;
      if (!ok) continue;
      for (std::size_t t = p; t <= q; ++t) --rest[t];
      chosen.push_back(r);
      rec();
      chosen.pop_back();
      for (std::size_t t = p; t <= q; ++t) ++rest[t];
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ballot(int j, int k) {
  if (k < 0 || j < k) return 0;
  std::vector<std::vector<std::int64_t>> b(static_cast<std::size_t>(j + 1), std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 0));
  for (int a = 0; a <= j; ++a)
    for (int c = 0; c <= std::min(a, k); ++c) {
      if (a == 0 && c == 0) {
        b[0][0] = 1;
        continue;
      }
      std::int64_t v = 0;
      if (a > 0 && c <= a - 1) v += b[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(c)];
      if (c > 0) v += b[static_cast<std::size_t>(a)][static_cast<std::size_t>(c - 1)];
      b[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = v;
    }
  return b[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
}

std::int64_t catalan(int j) { return j < 0 ? 0 : ballot(j, j); }

}  // namespace quiverpic
