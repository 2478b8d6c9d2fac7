#include "quiverpic/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "quiverpic/errors.hpp"

namespace quiverpic {

std::vector<std::int64_t> ClusterComplex::f_vector() const {
  std::vector<std::int64_t> f;
  for (const auto& level : faces) f.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

std::vector<AlmostPositiveRoot> ClusterComplex::roots_of(const Simplex& s) const {
  std::vector<AlmostPositiveRoot> out;
  for (int v : s) out.push_back(vertices[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<AlmostPositiveRoot> almost_positive_roots(const SignVector& eps) {
  std::vector<AlmostPositiveRoot> out;
  for (const Root& r : all_positive_roots(eps.n())) out.push_back(AlmostPositiveRoot::positive(r));
  for (int i = 1; i <= eps.n(); ++i) out.push_back(AlmostPositiveRoot::negative_projective(i));
  return out;
}

ClusterComplex build_cluster_complex(const SignVector& eps) {
  ClusterComplex c;
  c.eps = eps;
  c.vertices = almost_positive_roots(eps);
  const std::size_t m = c.vertices.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) adj[a][b] = adj[b][a] = cluster_compatible(eps, c.vertices[a], c.vertices[b]);
  c.faces.assign(static_cast<std::size_t>(eps.n() + 1), {});
  Simplex cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    c.faces[cur.size()].push_back(cur);
    if (static_cast<int>(cur.size()) == eps.n()) return;
    for (std::size_t t = from; t < m; ++t) {
      bool ok = true;
      for (int s : cur)
        if (!adj[static_cast<std::size_t>(s)][t]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(static_cast<int>(t));
      rec(t + 1);
      cur.pop_back();
    }
  };
  rec(0);
  for (std::size_t s = 0; s < c.faces.size(); ++s)
    if (c.faces[s].empty() && s > 0) throw ConsistencyError("cluster complex has a gap in its face levels");
  return c;
}

std::vector<Root> perpendicular_roots(const SignVector& eps, const std::vector<AlmostPositiveRoot>& rho) {
  std::vector<Root> out;
  for (const Root& g : all_positive_roots(eps.n())) {
    const DimVector gd = g.dim(eps.n());
    bool ok = true;
    for (const auto& v : rho)
      if (euler_form(eps, v.abs_dim(eps), gd) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

Root wall_label(const SignVector& eps, const std::vector<AlmostPositiveRoot>& rho) {
  if (static_cast<int>(rho.size()) != eps.n() - 1) throw PreconditionError("wall labels need n-1 vertices");
  for (std::size_t a = 0; a < rho.size(); ++a)
    for (std::size_t b = a + 1; b < rho.size(); ++b)
      if (!cluster_compatible(eps, rho[a], rho[b])) throw PreconditionError("vertices are not compatible");
  const auto perp = perpendicular_roots(eps, rho);
  if (perp.size() != 1) throw ConsistencyError("wall label is not unique (" + std::to_string(perp.size()) + " candidates)");
  return perp.front();
}

std::vector<Root> submodule_roots(const SignVector& eps, const Root& beta) {
  std::vector<Root> out;
  for (int k = beta.i; k < beta.j; ++k)
    for (int l = k + 1; l <= beta.j; ++l) {
      // the arrow at the left edge must not leave (k, l] towards k,
      // the one at the right edge must not leave towards l+1
      bool closed = true;
      if (k > beta.i && eps.plus(k)) closed = false;       // k+1 -> k
      if (l < beta.j && !eps.plus(l)) closed = false;      // l -> l+1
      if (closed) out.push_back({k, l});
    }
  return out;
}

bool in_domain(const SignVector& eps, const DimVector& v, const Root& beta) {
  const int n = eps.n();
  if (euler_form(eps, v, beta.dim(n)) != 0) return false;
  for (const Root& s : submodule_roots(eps, beta))
    if (euler_form(eps, v, s.dim(n)) > 0) return false;
  return true;
}

ClusterComplex link_of(const ClusterComplex& sigma, const Simplex& rho) {
  ClusterComplex lk;
  lk.eps = sigma.eps;
  std::map<int, int> index;
  for (std::size_t v = 0; v < sigma.vertices.size(); ++v) {
    const int vi = static_cast<int>(v);
    if (std::binary_search(rho.begin(), rho.end(), vi)) continue;
    bool ok = true;
    for (int r : rho)
      if (!cluster_compatible(sigma.eps, sigma.vertices[v], sigma.vertices[static_cast<std::size_t>(r)])) ok = false;
    if (!ok) continue;
    index[vi] = static_cast<int>(lk.vertices.size());
    lk.vertices.push_back(sigma.vertices[v]);
  }
  const std::size_t levels = sigma.faces.size() - rho.size();
  lk.faces.assign(levels, {});
  for (std::size_t s = rho.size(); s < sigma.faces.size(); ++s)
    for (const Simplex& f : sigma.faces[s]) {
      if (!std::includes(f.begin(), f.end(), rho.begin(), rho.end())) continue;
      Simplex rest;
      for (int v : f)
        if (!std::binary_search(rho.begin(), rho.end(), v)) rest.push_back(index.at(v));
      lk.faces[s - rho.size()].push_back(std::move(rest));
    }
  for (auto& level : lk.faces) std::sort(level.begin(), level.end());
  return lk;
}

std::vector<std::int64_t> expected_link_f_vector(const SignVector& eps, const std::vector<AlmostPositiveRoot>& rho) {
  const auto perp = perpendicular_roots(eps, rho);
  const HomOrthSet simples = minimal_elements(perp);
  if (static_cast<int>(simples.size()) != eps.n() - static_cast<int>(rho.size()))
    throw ConsistencyError("perpendicular category has the wrong rank");
  std::vector<std::int64_t> poly{1};
  for (const LocalComponent& c : local_quiver(eps, simples)) {
    const auto f = build_cluster_complex(c.eps).f_vector();
    std::vector<std::int64_t> next(poly.size() + f.size() - 1, 0);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b) next[a + b] += poly[a] * f[b];
    poly = std::move(next);
  }
  return poly;
}

std::vector<double> realize(const SignVector& eps, const AlmostPositiveRoot& v) {
  const DimVector d = v.dim(eps);
  double norm = 0;
  for (int x : d) norm += static_cast<double>(x) * x;
  norm = std::sqrt(norm);
  std::vector<double> out;
  for (int x : d) out.push_back(x / norm);
  return out;
}

std::array<double, 3> realize3(const SignVector& eps, const AlmostPositiveRoot& v) {
  if (eps.n() != 3) throw UnsupportedDimensionError("realize3 needs n = 3");
  const auto r = realize(eps, v);
  return {r[0], r[1], r[2]};
}

namespace {

using V3 = std::array<double, 3>;
using V2 = std::array<double, 2>;

double dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
V3 add(const V3& a, const V3& b, double s = 1.0) { return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]}; }
V3 scale(const V3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
V3 normalize(const V3& a) { return scale(a, 1.0 / std::sqrt(dot(a, a))); }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

V3 slerp(const V3& a, const V3& b, double t) {
  const double omega = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
  if (omega < 1e-12) return a;
  const double s = std::sin(omega);
  return add(scale(a, std::sin((1 - t) * omega) / s), b, std::sin(t * omega) / s);
}

struct Projector {
  V3 pole, e1, e2;
  V2 operator()(const V3& x) const {
    const double xp = dot(x, pole);
    const V3 y = scale(add(x, pole, -xp), 1.0 / (1.0 - xp));
    return {dot(y, e1), dot(y, e2)};
  }
};

Projector make_projector(const V3& pole) {
  V3 axis{1, 0, 0};
  double best = 2;
  for (int k = 0; k < 3; ++k) {
    V3 a{0, 0, 0};
    a[static_cast<std::size_t>(k)] = 1;
    if (std::abs(dot(a, pole)) < best - 1e-12) best = std::abs(dot(a, pole)), axis = a;
  }
  const V3 e1 = normalize(add(axis, pole, -dot(axis, pole)));
  return {pole, e1, cross(pole, e1)};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

}  // namespace

Picture project_picture(const SignVector& eps) {
  const int n = eps.n();
  if (n != 2 && n != 3) throw UnsupportedDimensionError("pictures exist only for n = 2 or 3");
  Picture pic;
  pic.n = n;
  const ClusterComplex sigma = build_cluster_complex(eps);
  for (const auto& v : sigma.vertices) pic.vertex_names.push_back(v.name());

  if (n == 2) {
    for (const auto& v : sigma.vertices) {
      const auto r = realize(eps, v);
      pic.vertex_points.push_back({r[0], r[1]});
      pic.vertex_labels.push_back(wall_label(eps, {v}));
    }
    return pic;
  }

  std::vector<V3> pts;
  for (const auto& v : sigma.vertices) pts.push_back(realize3(eps, v));
  V3 bary{0, 0, 0};
  for (std::size_t t = 0; t < sigma.vertices.size(); ++t)
    if (!sigma.vertices[t].is_positive()) bary = add(bary, pts[t]);
  V3 pole = normalize(scale(bary, -1.0));

  std::vector<std::vector<V3>> arcs3;
  for (const Simplex& e : sigma.faces[2]) {
    std::vector<V3> samples;
    for (int s = 0; s < kArcSamples; ++s)
      samples.push_back(slerp(pts[static_cast<std::size_t>(e[0])], pts[static_cast<std::size_t>(e[1])], static_cast<double>(s) / (kArcSamples - 1)));
    arcs3.push_back(std::move(samples));
  }
  auto collides = [&](const V3& p) {
    for (const auto& arc : arcs3)
      for (const V3& x : arc)
        if (dot(add(x, p, -1), add(x, p, -1)) < 1e-6) return true;
    return false;
  };
  if (collides(pole)) pole = normalize(add(pole, V3{1, 1, 1}, 1e-3 / std::sqrt(3.0)));
  pic.pole = pole;
  const Projector proj = make_projector(pole);

  for (const V3& p : pts) pic.vertex_points.push_back(proj(p));
  for (std::size_t t = 0; t < sigma.faces[2].size(); ++t) {
    const Simplex& e = sigma.faces[2][t];
    PictureArc arc;
    arc.u = e[0];
    arc.v = e[1];
    arc.label = wall_label(eps, sigma.roots_of(e));
    for (const V3& x : arcs3[t]) arc.points.push_back(proj(x));
    pic.arcs.push_back(std::move(arc));
  }
  std::stable_sort(pic.arcs.begin(), pic.arcs.end(), [](const PictureArc& a, const PictureArc& b) { return a.label < b.label; });
  return pic;
}

std::string render_picture_svg(const SignVector& eps) {
  const Picture pic = project_picture(eps);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

  if (pic.n == 2) {
    const double cx = 200, cy = 200, rad = 140;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    os << "<title>semi-invariant picture, n=2, eps=" << eps.str() << "</title>\n";
    os << "<circle class=\"sphere\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(rad)
       << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
    for (std::size_t t = 0; t < pic.vertex_points.size(); ++t) {
      const double x = cx + rad * pic.vertex_points[t][0], y = cy - rad * pic.vertex_points[t][1];
      const double lx = cx + (rad + 24) * pic.vertex_points[t][0], ly = cy - (rad + 24) * pic.vertex_points[t][1];
      os << "<g class=\"wall\" data-label=\"" << pic.vertex_labels[t].name() << "\">\n";
      os << "<circle class=\"vertex\" data-root=\"" << pic.vertex_names[t] << "\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
         << "\" r=\"5\" fill=\"" << kPalette[t % 10] << "\"/>\n";
      os << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
         << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << pic.vertex_labels[t].name() << "</text>\n";
      os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
  }

  // fit the projected picture into an 800 x 800 canvas
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  auto grow = [&](const V2& p) {
    minx = std::min(minx, p[0]);
    maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  };
  for (const auto& a : pic.arcs)
    for (const auto& p : a.points) grow(p);
  for (const auto& p : pic.vertex_points) grow(p);
  const double size = 800, margin = 60;
  const double s = (size - 2 * margin) / std::max(maxx - minx, maxy - miny);
  auto X = [&](const V2& p) { return margin + (p[0] - minx) * s; };
  auto Y = [&](const V2& p) { return size - margin - (p[1] - miny) * s; };

  const Projector proj = make_projector(pic.pole);
  const ClusterComplex sigma = build_cluster_complex(eps);

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<title>semi-invariant picture, n=3, eps=" << eps.str() << "</title>\n";
  std::size_t group = 0;
  for (std::size_t t = 0; t < pic.arcs.size(); ++group) {
    const Root label = pic.arcs[t].label;
    const char* color = kPalette[group % 10];
    os << "<g class=\"wall\" data-label=\"" << label.name() << "\" stroke=\"" << color
       << "\" stroke-width=\"2\" fill=\"none\">\n";
    const std::size_t first = t;
    for (; t < pic.arcs.size() && pic.arcs[t].label == label; ++t) {
      os << "<polyline points=\"";
      for (std::size_t k = 0; k < pic.arcs[t].points.size(); ++k)
        os << (k ? " " : "") << fmt(X(pic.arcs[t].points[k])) << "," << fmt(Y(pic.arcs[t].points[k]));
      os << "\"/>\n";
    }
    // label at the middle of the first arc, pushed towards <x, label> > 0
    const PictureArc& arc = pic.arcs[first];
    const V3 a = realize3(eps, sigma.vertices[static_cast<std::size_t>(arc.u)]);
    const V3 b = realize3(eps, sigma.vertices[static_cast<std::size_t>(arc.v)]);
    const V3 mid = slerp(a, b, 0.5);
    V3 grad{0, 0, 0};
    for (int k = 0; k < 3; ++k) {
      DimVector e(3, 0);
      e[static_cast<std::size_t>(k)] = 1;
      grad[static_cast<std::size_t>(k)] = euler_form(eps, e, label.dim(3));
    }
    const V3 tangent = add(grad, mid, -dot(grad, mid));
    const V3 ahead = normalize(add(mid, normalize(tangent), 0.05));
    const V2 pm = proj(mid), pa = proj(ahead);
    double dx = X(pa) - X(pm), dy = Y(pa) - Y(pm);
    const double len = std::sqrt(dx * dx + dy * dy);
    if (len > 1e-9) dx /= len, dy /= len;
    os << "<text class=\"wall-label\" x=\"" << fmt(X(pm) + 16 * dx) << "\" y=\"" << fmt(Y(pm) + 16 * dy)
       << "\" fill=\"" << color << "\" stroke=\"none\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">"
       << label.name() << "</text>\n";
    os << "</g>\n";
  }
  os << "<g class=\"vertices\" fill=\"#222222\">\n";
  for (std::size_t t = 0; t < pic.vertex_points.size(); ++t)
    os << "<circle class=\"vertex\" data-root=\"" << pic.vertex_names[t] << "\" cx=\"" << fmt(X(pic.vertex_points[t]))
       << "\" cy=\"" << fmt(Y(pic.vertex_points[t])) << "\" r=\"4\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace quiverpic
