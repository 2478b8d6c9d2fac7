#include "quiverpic/quiver.hpp"

#include <algorithm>

#include "quiverpic/errors.hpp"

namespace quiverpic {

SignVector SignVector::straight(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  return SignVector(std::vector<Sign>(static_cast<std::size_t>(n - 1), Sign::Plus));
}

SignVector SignVector::parse(std::string_view text, std::optional<int> n) {
  std::vector<Sign> signs;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c == '+' || c == 'L' || c == 'l') {
      signs.push_back(Sign::Plus);
    } else if (c == '-' || c == 'R' || c == 'r') {
      signs.push_back(Sign::Minus);
    } else if (c == 0xE2 && pos + 2 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 0x88 &&
               static_cast<unsigned char>(text[pos + 2]) == 0x92) {
      // U+2212 MINUS SIGN
      signs.push_back(Sign::Minus);
      pos += 2;
    } else if (c == ' ' || c == ',') {
      continue;
    } else {
      throw ParseError("bad character in sign vector: '" + std::string(text) + "'");
    }
  }
  if (n) {
    if (*n < 1) throw DomainError("n must be at least 1");
    if (static_cast<int>(signs.size()) != *n - 1)
      throw DimensionError("sign vector '" + std::string(text) + "' has length " + std::to_string(signs.size()) +
                           ", expected " + std::to_string(*n - 1));
  }
  return SignVector(std::move(signs));
}

std::vector<SignVector> SignVector::all(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  if (n > 25) throw DomainError("too many orientations");
  const int m = n - 1;
  std::vector<SignVector> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Sign> s(static_cast<std::size_t>(m));
    // most significant bit is arrow 1 so that the order is lexicographic
    for (int k = 0; k < m; ++k) s[static_cast<std::size_t>(k)] = (mask >> (m - 1 - k)) & 1u ? Sign::Minus : Sign::Plus;
    out.emplace_back(std::move(s));
  }
  return out;
}

Sign SignVector::at(int k) const {
  if (k < 1 || k > arrows()) throw DomainError("arrow index " + std::to_string(k) + " out of range");
  return signs_[static_cast<std::size_t>(k - 1)];
}

SignVector SignVector::restrict_to(int p, int q) const {
  if (p < 0 || q > n() || p >= q) throw DomainError("bad subinterval");
  return SignVector(std::vector<Sign>(signs_.begin() + p, signs_.begin() + (q - 1)));
}

SignVector SignVector::repeat(int k) const {
  std::vector<Sign> s = signs_;
  s.insert(s.begin() + k, at(k));
  return SignVector(std::move(s));
}

std::string SignVector::str() const {
  std::string s;
  for (Sign x : signs_) s.push_back(x == Sign::Plus ? '+' : '-');
  return s;
}

DimVector Root::dim(int n) const {
  if (j > n) throw DimensionError("root " + name() + " does not fit in A_" + std::to_string(n));
  DimVector v(static_cast<std::size_t>(n), 0);
  for (int k = i; k < j; ++k) v[static_cast<std::size_t>(k)] = 1;
  return v;
}

std::string Root::name() const { return "x_" + std::to_string(i) + "_" + std::to_string(j); }

std::vector<Root> all_positive_roots(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  std::vector<Root> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

DimVector projective_dim(const SignVector& eps, int vertex) {
  const int n = eps.n();
  if (vertex < 1 || vertex > n) throw DomainError("vertex out of range");
  int lo = vertex, hi = vertex;
  while (hi < n && !eps.plus(hi)) ++hi;
  while (lo > 1 && eps.plus(lo - 1)) --lo;
  return Root{lo - 1, hi}.dim(n);
}

DimVector AlmostPositiveRoot::dim(const SignVector& eps) const {
  if (is_positive()) return root_.dim(eps.n());
  DimVector v = projective_dim(eps, vertex_);
  for (int& x : v) x = -x;
  return v;
}

DimVector AlmostPositiveRoot::abs_dim(const SignVector& eps) const {
  return is_positive() ? root_.dim(eps.n()) : projective_dim(eps, vertex_);
}

std::string AlmostPositiveRoot::name() const {
  return is_positive() ? root_.name() : "-p_" + std::to_string(vertex_);
}

std::strong_ordering AlmostPositiveRoot::operator<=>(const AlmostPositiveRoot& other) const {
  if (is_positive() != other.is_positive()) return is_positive() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (is_positive()) return root_ <=> other.root_;
  return vertex_ <=> other.vertex_;
}

int euler_form(const SignVector& eps, const DimVector& v, const DimVector& w) {
  const auto n = static_cast<std::size_t>(eps.n());
  if (v.size() != n || w.size() != n) throw DimensionError("vector length does not match quiver");
  int s = 0;
  for (std::size_t i = 0; i < n; ++i) s += v[i] * w[i];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (eps.signs()[k] == Sign::Plus)
      s -= v[k + 1] * w[k];
    else
      s -= v[k] * w[k + 1];
  }
  return s;
}

int euler_form(const SignVector& eps, const Root& a, const Root& b) {
  const int n = eps.n();
  if (a.j > n || b.j > n) throw DimensionError("root does not fit the quiver");
  // <a,b> = |a cap b| minus the arrows from a into b.
  int s = std::max(0, std::min(a.j, b.j) - std::max(a.i, b.i));
  for (int k = 1; k < n; ++k) {
    if (eps.plus(k)) {
      if (a.contains(k + 1) && b.contains(k)) --s;
    } else {
      if (a.contains(k) && b.contains(k + 1)) --s;
    }
  }
  return s;
}

int hom_dim(const SignVector& eps, const Root& a, const Root& b) { return std::max(euler_form(eps, a, b), 0); }
int ext_dim(const SignVector& eps, const Root& a, const Root& b) { return std::max(-euler_form(eps, a, b), 0); }

bool noncrossing(const SignVector& eps, const Root& a, const Root& b) {
  const int i = a.i, j = a.j, k = b.i, l = b.j;
  if (i == k || i == l || j == k || j == l) throw PreconditionError("noncrossing needs four distinct endpoints");
  if (j < k || l < i) return true;
  if (k < i && j < l) return eps.at(i) == eps.at(j);
  if (i < k && l < j) return eps.at(k) == eps.at(l);
  if (i < k && k < j && j < l) return eps.at(k) != eps.at(j);
  if (k < i && i < l && l < j) return eps.at(i) != eps.at(l);
  return false;
}

bool hom_orthogonal(const SignVector& eps, const Root& a, const Root& b) {
  if (a == b) return false;
  if (a.j == b.i || a.i == b.j) return true;
  if (a.i == b.i || a.j == b.j) return false;
  return noncrossing(eps, a, b);
}

bool ext_orthogonal(const SignVector& eps, const Root& a, const Root& b) {
  if (a == b) return false;
  if (a.j == b.i || a.i == b.j) return false;
  if (a.i == b.i || a.j == b.j) return true;
  return noncrossing(eps, a, b);
}

bool cluster_compatible(const SignVector& eps, const AlmostPositiveRoot& a, const AlmostPositiveRoot& b) {
  if (!a.is_positive() && !b.is_positive()) return true;
  if (a.is_positive() && b.is_positive()) return ext_orthogonal(eps, a.root(), b.root());
  const AlmostPositiveRoot& pos = a.is_positive() ? a : b;
  const AlmostPositiveRoot& neg = a.is_positive() ? b : a;
  if (neg.vertex() < 1 || neg.vertex() > eps.n() || pos.root().j > eps.n())
    throw DimensionError("almost positive root does not fit the quiver");
  return !pos.root().contains(neg.vertex());
}

}  // namespace quiverpic
