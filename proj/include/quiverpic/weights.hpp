#pragma once

// Weight vectors: admissibility, blocks, resolution and cut sets, the
// generic decomposition, and the ballot / Catalan counts of basic weights.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quiverpic/quiver.hpp"
#include "quiverpic/wide.hpp"

namespace quiverpic {

/// A vector in N^n; w_0 = w_{n+1} = 0 implicitly.  Coordinates are 1-based
/// through at().
struct Weight {
  std::vector<int> coords;

  static Weight parse(std::string_view text);
  static Weight of(const std::vector<Root>& roots, int n);

  int n() const { return static_cast<int>(coords.size()); }
  /// w_k for 0 <= k <= n+1, with the boundary zeros.
  int at(int k) const;
  std::string str() const;  // "1,2,3"
  std::string compact() const;  // "123" (digits only; used for block names)

  /// Coordinatewise partial order.
  bool dominated_by(const Weight& other) const;

  auto operator<=>(const Weight&) const = default;
};

struct Block {
  int p = 0;
  int q = 0;
  std::vector<int> coords;  // w restricted to (p, q]

  int length() const { return q - p; }
  int degree() const;
  auto operator<=>(const Block&) const = default;
};

bool is_admissible(const Weight& w);
std::vector<int> resolution_set(const Weight& w);
bool is_basic(const Weight& w);

/// Number of ascents w_{i+1} = w_i + 1, counted from w_0 = 0.
int degree(const Weight& w);

/// Maximal positive runs, left to right.
std::vector<Block> blocks(const Weight& w);

/// The C_j basic blocks supported on (p, q], q - p = 2j + 1, in lex order.
std::vector<Block> enumerate_blocks(int p, int q);

/// Basic weights of N^n with k ascents, in lex order.
std::vector<Weight> enumerate_basic_weights(int n, int k);

/// All admissible weights in N^n (used by sweeps over the filtration).
std::vector<Weight> enumerate_admissible_weights(int n);

/// The intervals (a_k, b_k] of the height construction, k = 1..n.
std::vector<std::pair<int, int>> height_intervals(const SignVector& eps, const Weight& w);

/// Generic (ext-orthogonal) decomposition as a sorted multiset of roots.
std::vector<Root> generic_decomposition(const SignVector& eps, const Weight& w);

/// Hom-orthogonal set of weight w whose cut set is S.
HomOrthSet cut_set_cell(const SignVector& eps, const Weight& w, const std::vector<int>& S);

/// Elements of R(w) that occur as an endpoint of some root of the set.
std::vector<int> cut_set_of(const HomOrthSet& roots, const Weight& w);

/// Every pairwise hom-orthogonal set of weight w, canonically sorted.
std::vector<HomOrthSet> enumerate_hom_orth_sets_of_weight(const SignVector& eps, const Weight& w);

/// b(j, k): paths with j "yes" and k "no" votes where yes never trails.
std::int64_t ballot(int j, int k);
std::int64_t catalan(int j);

}  // namespace quiverpic
