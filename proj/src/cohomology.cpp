#include "quiverpic/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "quiverpic/errors.hpp"

namespace quiverpic {

std::string DualBlock::name() const {
  std::string s = "B[" + std::to_string(block.p) + "," + std::to_string(block.q) + ":";
  for (int c : block.coords) s += std::to_string(c);
  return s + "]";
}

int BasisElement::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.degree();
  return d;
}

std::string BasisElement::name() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < factors.size(); ++t) s += (t ? "*" : "") + factors[t].name();
  return s;
}

DualBlock make_dual_block(const Block& block) {
  const auto all = enumerate_blocks(block.p, block.q);
  if (std::find(all.begin(), all.end(), block) == all.end()) throw DomainError("not a basic block");
  return DualBlock{block};
}

std::vector<BasisElement> dual_block_basis(int n, int k) {
  std::vector<BasisElement> out;
  if (n < 0 || k < 0) return out;
  std::vector<DualBlock> cur;
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      out.push_back(BasisElement{cur});
      return;
    }
    for (int p = from; p < n; ++p)
      for (int q = p + 1; q <= n; q += 2) {
        const int deg = (q - p + 1) / 2;
        if (deg > left) break;
        for (const Block& b : enumerate_blocks(p, q)) {
          cur.push_back(DualBlock{b});
          rec(q + 1, left - deg);
          cur.pop_back();
        }
      }
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ring_rank(int n, int k) { return static_cast<std::int64_t>(dual_block_basis(n, k).size()); }

RingElement ring_element(const BasisElement& b, std::int64_t coef) {
  RingElement r;
  if (coef != 0) r[b] = coef;
  return r;
}

RingElement cup(const BasisElement& x, const BasisElement& y) {
  for (const auto& f : x.factors)
    for (const auto& g : y.factors)
      if (!(f.q() < g.p() || g.q() < f.p())) return {};
  int parity = 0;
  for (const auto& f : x.factors)
    for (const auto& g : y.factors)
      if (g.p() < f.p()) parity ^= (f.degree() * g.degree()) & 1;
  BasisElement z;
  z.factors = x.factors;
  z.factors.insert(z.factors.end(), y.factors.begin(), y.factors.end());
  std::sort(z.factors.begin(), z.factors.end(), [](const DualBlock& a, const DualBlock& b) { return a.p() < b.p(); });
  return ring_element(z, parity ? -1 : 1);
}

RingElement cup(const RingElement& x, const RingElement& y) {
  RingElement out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [c, cc] : cup(a, b)) out[c] += ca * cb * cc;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

int pair_with_homology(const BasisElement& b, const Weight& w) {
  if (!is_basic(w)) throw DomainError("weight " + w.str() + " is not basic");
  if (b.degree() != degree(w)) throw DomainError("degree mismatch between class and weight");
  const auto bl = blocks(w);
  if (bl.size() != b.factors.size()) return 0;
  for (std::size_t t = 0; t < bl.size(); ++t)
    if (bl[t] != b.factors[t].block) return 0;
  int parity = 0;
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = i + 1; j < bl.size(); ++j) parity ^= (b.factors[i].degree() * b.factors[j].degree()) & 1;
  return parity ? -1 : 1;
}

std::vector<StructureConstant> structure_constants(int n, int a, int b) {
  const auto left = dual_block_basis(n, a);
  const auto right = dual_block_basis(n, b);
  const auto target = dual_block_basis(n, a + b);
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      for (const auto& [z, c] : cup(left[i], right[j])) {
        auto it = std::lower_bound(target.begin(), target.end(), z);
        if (it == target.end() || *it != z) throw ConsistencyError("product outside the basis");
        out.push_back({i, j, static_cast<std::size_t>(it - target.begin()), static_cast<int>(c)});
      }
  return out;
}

}  // namespace quiverpic
