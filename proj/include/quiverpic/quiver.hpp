#pragma once

// Type-A_n quivers with arbitrary orientation: sign vectors, interval roots,
// the Euler-Ringel form and the orthogonality predicates built on it.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quiverpic {

enum class Sign : char { Plus, Minus };

/// Orientation of the A_n line 1 - 2 - ... - n.  Entry k (1-based) is `+`
/// when the arrow between k and k+1 points left, k <- k+1, and `-` when it
/// points right, k -> k+1.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  /// All arrows pointing left: 1 <- 2 <- ... <- n.
  static SignVector straight(int n);

  /// Parses a string over {+, -} (the Unicode minus sign is accepted too) or
  /// the aliases L (= +) and R (= -).  When `n` is given the length must be
  /// n - 1; the empty string needs an explicit n to mean anything but A_1.
  static SignVector parse(std::string_view text, std::optional<int> n = std::nullopt);

  /// Every orientation of A_n, in lexicographic order of the string form
  /// (`+` before `-`).
  static std::vector<SignVector> all(int n);

  int n() const { return static_cast<int>(signs_.size()) + 1; }
  int arrows() const { return static_cast<int>(signs_.size()); }

  Sign at(int k) const;
  bool plus(int k) const { return at(k) == Sign::Plus; }

  const std::vector<Sign>& signs() const { return signs_; }

  /// Signs of the full subquiver on the vertices (p, q].
  SignVector restrict_to(int p, int q) const;

  /// Same quiver with arrow k repeated (the degeneracy s_k on signs).
  SignVector repeat(int k) const;

  std::string str() const;

  auto operator<=>(const SignVector&) const = default;

 private:
  std::vector<Sign> signs_;
};

/// Arbitrary integer vector of length n (dimension vectors and arguments of
/// the Euler form).
using DimVector = std::vector<int>;

/// The interval root beta_ij = e_{i+1} + ... + e_j, 0 <= i < j <= n.
struct Root {
  int i = 0;
  int j = 1;

  static Root simple(int k) { return Root{k - 1, k}; }

  bool contains(int vertex) const { return i < vertex && vertex <= j; }
  bool contains(const Root& other) const { return i <= other.i && other.j <= j; }
  int length() const { return j - i; }
  DimVector dim(int n) const;

  /// "x_i_j"; used for generator names and file formats.
  std::string name() const;

  auto operator<=>(const Root&) const = default;
};

/// All n(n+1)/2 positive roots of A_n in the canonical (i, j) order.
std::vector<Root> all_positive_roots(int n);

/// Dimension vector of the indecomposable projective P_i: the interval
/// through i reached by following arrows out of i.
DimVector projective_dim(const SignVector& eps, int vertex);

/// A positive root or a negative projective root -pi_i.
class AlmostPositiveRoot {
 public:
  static AlmostPositiveRoot positive(Root r) { return AlmostPositiveRoot(r, 0); }
  static AlmostPositiveRoot negative_projective(int vertex) { return AlmostPositiveRoot({}, vertex); }

  bool is_positive() const { return vertex_ == 0; }
  const Root& root() const { return root_; }
  int vertex() const { return vertex_; }

  /// Signed dimension vector: dim M for positives, -dim P_i otherwise.
  DimVector dim(const SignVector& eps) const;
  /// Unsigned dimension vector |v|.
  DimVector abs_dim(const SignVector& eps) const;

  std::string name() const;

  /// Positives in canonical order first, then -pi_1, ..., -pi_n.
  std::strong_ordering operator<=>(const AlmostPositiveRoot& other) const;
  bool operator==(const AlmostPositiveRoot& other) const = default;

 private:
  AlmostPositiveRoot(Root r, int vertex) : root_(r), vertex_(vertex) {}
  Root root_{};
  int vertex_ = 0;
};

int euler_form(const SignVector& eps, const DimVector& v, const DimVector& w);
int euler_form(const SignVector& eps, const Root& a, const Root& b);

int hom_dim(const SignVector& eps, const Root& a, const Root& b);
int ext_dim(const SignVector& eps, const Root& a, const Root& b);

/// Five-case noncrossing test on half-open intervals with distinct endpoints.
/// Throws PreconditionError when an endpoint is shared.
bool noncrossing(const SignVector& eps, const Root& a, const Root& b);

bool hom_orthogonal(const SignVector& eps, const Root& a, const Root& b);
bool ext_orthogonal(const SignVector& eps, const Root& a, const Root& b);

bool cluster_compatible(const SignVector& eps, const AlmostPositiveRoot& a, const AlmostPositiveRoot& b);

}  // namespace quiverpic
