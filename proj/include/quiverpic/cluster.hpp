#pragma once

// The cluster complex on almost positive roots, wall labels, links, and the
// spherical picture for n <= 3.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quiverpic/quiver.hpp"
#include "quiverpic/wide.hpp"

namespace quiverpic {

using Simplex = std::vector<int>;  // sorted vertex indices

struct ClusterComplex {
  SignVector eps;
  std::vector<AlmostPositiveRoot> vertices;
  // faces[s] = simplices with s vertices, lex sorted; faces[0] = {{}}
  std::vector<std::vector<Simplex>> faces;

  /// f_s = number of faces with s vertices, s = 0..n (includes the empty face).
  std::vector<std::int64_t> f_vector() const;
  const std::vector<Simplex>& maximal() const { return faces.back(); }
  std::vector<AlmostPositiveRoot> roots_of(const Simplex& s) const;
};

/// Positives in canonical order, then -pi_1..-pi_n.
std::vector<AlmostPositiveRoot> almost_positive_roots(const SignVector& eps);

ClusterComplex build_cluster_complex(const SignVector& eps);

/// Right perpendicular of the |dim| vectors of rho among the positive roots.
std::vector<Root> perpendicular_roots(const SignVector& eps, const std::vector<AlmostPositiveRoot>& rho);

/// The positive root gamma with <|v|, gamma> = 0 for every vertex v of an
/// (n-2)-simplex rho.
Root wall_label(const SignVector& eps, const std::vector<AlmostPositiveRoot>& rho);

/// Subintervals of beta that carry a subrepresentation (closed under the
/// arrows leaving them inside beta), including beta itself.
std::vector<Root> submodule_roots(const SignVector& eps, const Root& beta);

/// v lies in D(beta): <v, beta> = 0 and <v, beta'> <= 0 for every submodule root.
bool in_domain(const SignVector& eps, const DimVector& v, const Root& beta);

/// The link of rho, re-indexed over its own vertex list.
ClusterComplex link_of(const ClusterComplex& sigma, const Simplex& rho);

/// f-vector of the join of the cluster complexes of the local quiver
/// components of the perpendicular simples of rho.
std::vector<std::int64_t> expected_link_f_vector(const SignVector& eps, const std::vector<AlmostPositiveRoot>& rho);

std::array<double, 3> realize3(const SignVector& eps, const AlmostPositiveRoot& v);
std::vector<double> realize(const SignVector& eps, const AlmostPositiveRoot& v);

/// Projected picture, shared by the renderer and by the geometric tests.
struct PictureArc {
  int u = 0;
  int v = 0;  // vertex indices
  Root label;
  std::vector<std::array<double, 2>> points;
};
struct Picture {
  int n = 0;
  std::vector<std::array<double, 2>> vertex_points;
  std::vector<std::string> vertex_names;
  std::vector<Root> vertex_labels;  // n = 2 only: the wall through each point
  std::vector<PictureArc> arcs;     // n = 3 only
  std::array<double, 3> pole{};
};

constexpr int kArcSamples = 48;

Picture project_picture(const SignVector& eps);
std::string render_picture_svg(const SignVector& eps);

}  // namespace quiverpic
