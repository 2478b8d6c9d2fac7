#pragma once

// Root-set combinatorics of the wide subcategory generated by a
// hom-orthogonal set of roots.

#include <cstdint>
#include <optional>
#include <vector>

#include "quiverpic/quiver.hpp"

namespace quiverpic {

/// Canonically sorted, pairwise hom-orthogonal roots.
using HomOrthSet = std::vector<Root>;

bool is_hom_orthogonal_set(const SignVector& eps, const HomOrthSet& roots);

/// Sorts and checks; throws DomainError if two roots are not hom-orthogonal.
HomOrthSet make_hom_orth_set(const SignVector& eps, std::vector<Root> roots);

/// A root of the wide subcategory together with the subset of generators
/// (bit t = bset[t]) whose sum it is.
struct WideRoot {
  Root root;
  std::uint32_t mask = 0;
};

/// If gamma is a 0/1 combination of `bset`, the mask of that combination.
/// Members of a hom-orthogonal set never share a left endpoint, so the tiling
/// of (i, j] is forced.
std::optional<std::uint32_t> wide_mask(const HomOrthSet& bset, const Root& gamma);

std::vector<WideRoot> phi_plus_masked(const SignVector& eps, const HomOrthSet& bset);
std::vector<Root> phi_plus(const SignVector& eps, const HomOrthSet& bset);

/// Simple objects of the right perpendicular of gamma inside the wide
/// subcategory of `bset`.  Throws DomainError if gamma is not in it and
/// ConsistencyError if the perpendicular is not generated by k-1 simples.
HomOrthSet perp_simples_within(const SignVector& eps, const HomOrthSet& bset, const Root& gamma);

/// Simples of a set of roots closed under the wide-subcategory sums: the
/// elements that are not the sum of two others.
HomOrthSet minimal_elements(const std::vector<Root>& closed);

bool is_relative_projective(const SignVector& eps, const HomOrthSet& bset, const Root& gamma);

struct LocalComponent {
  std::vector<Root> order;  // u_1, ..., u_m along the line
  SignVector eps;           // entry m is + when the arrow is u_{m+1} -> u_m
};

/// Ext-quiver on a hom-orthogonal set, split into line components.  Each line
/// is read from its endpoint that is smaller in the canonical root order and
/// the components are sorted by their first root.
std::vector<LocalComponent> local_quiver(const SignVector& eps, const HomOrthSet& aset);

}  // namespace quiverpic
