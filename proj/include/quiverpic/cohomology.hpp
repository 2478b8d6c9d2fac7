#pragma once

// Cohomology ring of the picture group in the dual-block basis.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverpic/weights.hpp"

namespace quiverpic {

/// Dual of a one-block basic weight on (p, q]; degree (q - p + 1) / 2.
struct DualBlock {
  Block block;

  int p() const { return block.p; }
  int q() const { return block.q; }
  int degree() const { return (block.q - block.p + 1) / 2; }
  std::string name() const;  // "B[p,q:coords]"
  auto operator<=>(const DualBlock&) const = default;
};

/// Product of dual blocks with pairwise disjoint extended supports [p, q],
/// sorted by p.  The empty product is the unit.
struct BasisElement {
  std::vector<DualBlock> factors;

  int degree() const;
  std::string name() const;  // "1" or factor names joined by '*'
  auto operator<=>(const BasisElement&) const = default;
};

using RingElement = std::map<BasisElement, std::int64_t>;

DualBlock make_dual_block(const Block& block);

std::vector<BasisElement> dual_block_basis(int n, int k);
std::int64_t ring_rank(int n, int k);

RingElement ring_element(const BasisElement& b, std::int64_t coef = 1);

/// Product of basis elements: nullopt-like zero is the empty map.
RingElement cup(const BasisElement& x, const BasisElement& y);
RingElement cup(const RingElement& x, const RingElement& y);

/// Evaluation of a basis class on the homology class of a basic weight.
int pair_with_homology(const BasisElement& b, const Weight& w);

/// Structure constants x * y = c z for basis elements of degrees (a, b) in
/// A_n, listed in basis order; zero products are omitted.
struct StructureConstant {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t result = 0;
  int sign = 0;
};
std::vector<StructureConstant> structure_constants(int n, int a, int b);

}  // namespace quiverpic
