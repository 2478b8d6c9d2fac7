#include "quiverpic/wide.hpp"

#include <algorithm>

#include "quiverpic/errors.hpp"

namespace quiverpic {

bool is_hom_orthogonal_set(const SignVector& eps, const HomOrthSet& roots) {
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (!hom_orthogonal(eps, roots[a], roots[b])) return false;
  return true;
}

HomOrthSet make_hom_orth_set(const SignVector& eps, std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end());
  for (const Root& r : roots)
    if (r.i < 0 || r.j > eps.n() || r.i >= r.j) throw DimensionError("root " + r.name() + " does not fit the quiver");
  if (!is_hom_orthogonal_set(eps, roots)) throw DomainError("roots are not pairwise hom-orthogonal");
  return roots;
}

std::optional<std::uint32_t> wide_mask(const HomOrthSet& bset, const Root& gamma) {
  std::uint32_t mask = 0;
  int pos = gamma.i;
  while (pos < gamma.j) {
    std::size_t t = 0;
    while (t < bset.size() && bset[t].i != pos) ++t;
    if (t == bset.size() || bset[t].j > gamma.j) return std::nullopt;
    mask |= std::uint32_t{1} << t;
    pos = bset[t].j;
  }
  return mask;
}

std::vector<WideRoot> phi_plus_masked(const SignVector& eps, const HomOrthSet& bset) {
  std::vector<WideRoot> out;
  if (bset.empty()) return out;
  if (bset.size() > 31) throw DomainError("hom-orthogonal set too large");
  for (const Root& g : all_positive_roots(eps.n()))
    if (auto m = wide_mask(bset, g)) out.push_back({g, *m});
  return out;
}

std::vector<Root> phi_plus(const SignVector& eps, const HomOrthSet& bset) {
  std::vector<Root> out;
  for (const WideRoot& w : phi_plus_masked(eps, bset)) out.push_back(w.root);
  return out;
}

HomOrthSet minimal_elements(const std::vector<Root>& closed) {
  HomOrthSet simples;
  for (const Root& d : closed) {
    bool split = false;
    for (const Root& a : closed) {
      if (a.i != d.i || a.j >= d.j) continue;
      if (std::find(closed.begin(), closed.end(), Root{a.j, d.j}) != closed.end()) {
        split = true;
        break;
      }
    }
    if (!split) simples.push_back(d);
  }
  return simples;
}

HomOrthSet perp_simples_within(const SignVector& eps, const HomOrthSet& bset, const Root& gamma) {
  const auto all = phi_plus(eps, bset);
  if (std::find(all.begin(), all.end(), gamma) == all.end())
    throw DomainError(gamma.name() + " is not in the wide subcategory");
  std::vector<Root> perp;
  for (const Root& d : all)
    if (euler_form(eps, gamma, d) == 0) perp.push_back(d);
  HomOrthSet simples = minimal_elements(perp);
  if (simples.size() + 1 != bset.size() || !is_hom_orthogonal_set(eps, simples) || phi_plus(eps, simples) != perp)
    throw ConsistencyError("perpendicular of " + gamma.name() + " is not a wide subcategory of the expected rank");
  return simples;
}

bool is_relative_projective(const SignVector& eps, const HomOrthSet& bset, const Root& gamma) {
  const auto all = phi_plus(eps, bset);
  if (std::find(all.begin(), all.end(), gamma) == all.end())
    throw DomainError(gamma.name() + " is not in the wide subcategory");
  return std::all_of(all.begin(), all.end(), [&](const Root& d) { return euler_form(eps, gamma, d) >= 0; });
}

std::vector<LocalComponent> local_quiver(const SignVector& eps, const HomOrthSet& aset) {
  const std::size_t m = aset.size();
  // adjacency with direction: out[a][b] when a -> b
  std::vector<std::vector<int>> nbr(m);
  auto arrow = [&](std::size_t a, std::size_t b) { return euler_form(eps, aset[a], aset[b]) < 0; };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const bool ab = arrow(a, b), ba = arrow(b, a);
      if (ab && ba) throw ConsistencyError("two-cycle in local quiver");
      if (ab || ba) {
        nbr[a].push_back(static_cast<int>(b));
        nbr[b].push_back(static_cast<int>(a));
      }
    }
  for (const auto& v : nbr)
    if (v.size() > 2) throw ConsistencyError("local quiver is not a union of lines");

  std::vector<LocalComponent> comps;
  std::vector<bool> seen(m, false);
  // aset is sorted, so scanning in order visits each line first at its smaller endpoint
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s] || nbr[s].size() > 1) continue;
    std::vector<std::size_t> line{s};
    seen[s] = true;
    std::size_t cur = s;
    for (;;) {
      std::size_t next = m;
      for (int t : nbr[cur])
        if (!seen[static_cast<std::size_t>(t)]) next = static_cast<std::size_t>(t);
      if (next == m) break;
      seen[next] = true;
      line.push_back(next);
      cur = next;
    }
    LocalComponent c;
    std::vector<Sign> signs;
    for (std::size_t t = 0; t < line.size(); ++t) {
      c.order.push_back(aset[line[t]]);
      if (t + 1 < line.size()) signs.push_back(arrow(line[t + 1], line[t]) ? Sign::Plus : Sign::Minus);
    }
    c.eps = SignVector(std::move(signs));
    comps.push_back(std::move(c));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ConsistencyError("cycle in local quiver");
  std::sort(comps.begin(), comps.end(), [](const LocalComponent& a, const LocalComponent& b) { return a.order.front() < b.order.front(); });
  return comps;
}

}  // namespace quiverpic
