#include "quiverpic/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "quiverpic/chain_complex.hpp"
#include "quiverpic/cluster.hpp"
#include "quiverpic/cohomology.hpp"
#include "quiverpic/errors.hpp"
#include "quiverpic/homology.hpp"

namespace quiverpic {

namespace {

Json header(const SignVector& eps) {
  Json j;
  j["n"] = eps.n();
  j["eps"] = eps.str();
  return j;
}

Json block_to_json(const Block& b) {
  Json j;
  j["p"] = b.p;
  j["q"] = b.q;
  j["block"] = b.coords;
  return j;
}

Json basis_to_json(const BasisElement& b) {
  Json j;
  j["name"] = b.name();
  j["degree"] = b.degree();
  Json f = Json::array();
  for (const auto& d : b.factors) f.push_back(block_to_json(d.block));
  j["factors"] = f;
  return j;
}

std::vector<std::string> names(const std::vector<Root>& roots) {
  std::vector<std::string> out;
  for (const Root& r : roots) out.push_back(r.name());
  return out;
}

}  // namespace

Json roots_to_json(const std::vector<Root>& roots) { return names(roots); }

Json roots_report(const SignVector& eps) {
  Json j = header(eps);
  Json roots = Json::array();
  for (const Root& r : all_positive_roots(eps.n())) {
    Json x;
    x["name"] = r.name();
    x["i"] = r.i;
    x["j"] = r.j;
    x["dim"] = r.dim(eps.n());
    roots.push_back(x);
  }
  j["roots"] = roots;
  Json proj = Json::array();
  for (int i = 1; i <= eps.n(); ++i) proj.push_back(projective_dim(eps, i));
  j["projectives"] = proj;
  return j;
}

Json cells_report(const SignVector& eps, std::optional<int> degree) {
  Json j = header(eps);
  Json counts = Json::array();
  for (int k = 0; k <= eps.n(); ++k) counts.push_back(enumerate_cells(eps, k).size());
  j["counts"] = counts;
  if (degree) {
    j["degree"] = *degree;
    Json cells = Json::array();
    for (const Cell& c : enumerate_cells(eps, *degree)) {
      Json x;
      x["roots"] = names(c.roots);
      x["weight"] = c.weight(eps.n()).coords;
      cells.push_back(x);
    }
    j["cells"] = cells;
  }
  return j;
}

Json homology_report(const SignVector& eps, const std::string& method) {
  Json j = header(eps);
  j["method"] = method;
  Json counts = Json::array();
  for (int k = 0; k <= eps.n(); ++k) counts.push_back(enumerate_cells(eps, k).size());
  if (method == "snf") {
    const auto h = homology_of(build_complex(eps));
    j["betti"] = h.betti;
    j["torsion"] = h.torsion;
  } else if (method == "fast") {
    j["betti"] = betti_fast_all(eps);
    j["torsion"] = std::vector<std::vector<std::string>>(static_cast<std::size_t>(eps.n() + 1));
  } else {
    throw DomainError("unknown homology method '" + method + "'");
  }
  j["cells"] = counts;
  j["euler"] = euler_characteristic(eps);
  return j;
}

Json weights_report(int n, std::optional<int> degree, const std::optional<Weight>& weight) {
  Json j;
  j["n"] = n;
  if (weight) {
    if (weight->n() != n) throw DimensionError("weight length does not match n");
    Json w;
    w["coords"] = weight->coords;
    w["admissible"] = is_admissible(*weight);
    w["basic"] = is_basic(*weight);
    w["degree"] = quiverpic::degree(*weight);
    if (is_admissible(*weight)) {
      w["resolution_set"] = resolution_set(*weight);
      Json bl = Json::array();
      for (const Block& b : blocks(*weight)) bl.push_back(block_to_json(b));
      w["blocks"] = bl;
    }
    j["weight"] = w;
    return j;
  }
  Json per = Json::array();
  const int lo = degree ? *degree : 0;
  const int hi = degree ? *degree : n;
  for (int k = lo; k <= hi; ++k) {
    Json d;
    d["degree"] = k;
    d["ballot"] = ballot(n - k + 1, k);
    Json ws = Json::array();
    for (const Weight& w : enumerate_basic_weights(n, k)) ws.push_back(w.coords);
    d["count"] = ws.size();
    d["weights"] = ws;
    per.push_back(d);
  }
  j["basic_weights"] = per;
  return j;
}

Json decompose_report(const SignVector& eps, const Weight& w, const std::optional<std::vector<int>>& cut) {
  Json j = header(eps);
  j["weight"] = w.coords;
  j["generic"] = names(generic_decomposition(eps, w));
  j["admissible"] = is_admissible(w);
  if (is_admissible(w)) {
    j["resolution_set"] = resolution_set(w);
    const std::vector<int> S = cut ? *cut : std::vector<int>{};
    j["cut"] = S;
    const HomOrthSet cell = cut_set_cell(eps, w, S);
    j["cell"] = names(cell);
    j["cut_set_of_cell"] = cut_set_of(cell, w);
  } else if (cut) {
    throw DomainError("cut sets need an admissible weight");
  }
  return j;
}

Json presentation_report(const Presentation& p) {
  Json j = header(p.eps);
  j["group"] = p.group;
  j["generators"] = names(p.generators);
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(r.str());
  j["relators"] = rels;
  const auto ab = abelianize(p);
  j["abelianization"] = {{"rank", ab.rank}, {"torsion", ab.torsion}};
  return j;
}

Json ring_report(int n, std::optional<int> degree) {
  Json j;
  j["n"] = n;
  const int lo = degree ? *degree : 0;
  const int hi = degree ? *degree : n;
  Json per = Json::array();
  for (int k = lo; k <= hi; ++k) {
    Json d;
    d["degree"] = k;
    Json basis = Json::array();
    for (const auto& b : dual_block_basis(n, k)) basis.push_back(basis_to_json(b));
    d["rank"] = basis.size();
    d["basis"] = basis;
    per.push_back(d);
  }
  j["degrees"] = per;
  if (!degree) {
    Json sc = Json::array();
    for (int a = 1; a <= n; ++a)
      for (int b = 1; a + b <= n; ++b)
        for (const auto& c : structure_constants(n, a, b)) {
          Json x;
          x["left"] = {a, c.left};
          x["right"] = {b, c.right};
          x["result"] = {a + b, c.result};
          x["sign"] = c.sign;
          sc.push_back(x);
        }
    j["products"] = sc;
  }
  return j;
}

Json complex_report(const SignVector& eps) {
  const GradedComplex gc = build_complex(eps);
  Json j = header(eps);
  Json cells = Json::array();
  for (const auto& level : gc.cells) {
    Json l = Json::array();
    for (const Cell& c : level) l.push_back(names(c.roots));
    cells.push_back(l);
  }
  j["cells"] = cells;
  Json d = Json::array();
  for (int k = 1; k <= gc.top(); ++k) {
    const SparseMatrix& m = gc.boundary_matrix(k);
    Json x;
    x["degree"] = k;
    x["rows"] = m.rows;
    x["cols"] = m.cols;
    Json e = Json::array();
    for (const auto& t : m.entries) e.push_back({t.row, t.col, t.value});
    x["entries"] = e;
    d.push_back(x);
  }
  j["boundaries"] = d;
  return j;
}

std::vector<CheckResult> verify_orientation(const SignVector& eps, const VerifyBounds& bounds) {
  const int n = eps.n();
  std::vector<CheckResult> out;
  auto record = [&](const std::string& name, int bound, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    if (n > bound) {
      r.pass = true;
      r.detail = "skipped (n > " + std::to_string(bound) + ")";
    } else {
      try {
        r.detail = body();
        r.pass = r.detail.empty();
        if (r.pass) r.detail = "ok";
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
    }
    out.push_back(std::move(r));
  };

  std::vector<std::int64_t> ballots;
  for (int k = 0; k <= n; ++k) ballots.push_back(ballot(n - k + 1, k));

  record("boundary_squares_to_zero", bounds.snf_max + 1, [&]() -> std::string {
    const GradedComplex gc = build_complex(eps);
    for (int k = 2; k <= gc.top(); ++k)
      if (!multiply(gc.boundary_matrix(k - 1), gc.boundary_matrix(k)).entries.empty()) return "d^2 != 0 in degree " + std::to_string(k);
    for (const auto& m : gc.d)
      for (const auto& e : m.entries)
        if (e.value != 1 && e.value != -1) return "non-unit incidence";
    return "";
  });
  record("snf_homology_is_ballot", bounds.snf_max, [&]() -> std::string {
    const auto h = homology_of(build_complex(eps));
    if (h.betti != ballots) return "betti numbers differ from ballot numbers";
    if (!h.torsion_free()) return "torsion found";
    return "";
  });
  record("weight_filtration", bounds.snf_max, [&]() -> std::string { return weight_filtration_check(eps) ? "" : "filtration violated"; });
  record("cut_set_bijection", bounds.snf_max, [&]() -> std::string {
    for (const Weight& w : enumerate_admissible_weights(n)) {
      const auto R = resolution_set(w);
      const auto all = enumerate_hom_orth_sets_of_weight(eps, w);
      if (all.size() != (std::size_t{1} << R.size())) return "count mismatch at " + w.str();
      std::set<HomOrthSet> seen;
      for (std::uint32_t mask = 0; mask < (1u << R.size()); ++mask) {
        std::vector<int> S;
        for (std::size_t t = 0; t < R.size(); ++t)
          if (mask >> t & 1u) S.push_back(R[t]);
        const auto cell = cut_set_cell(eps, w, S);
        if (cut_set_of(cell, w) != S) return "cut set round trip failed at " + w.str();
        seen.insert(cell);
      }
      if (std::set<HomOrthSet>(all.begin(), all.end()) != seen) return "cut-set cells differ from enumeration at " + w.str();
    }
    return "";
  });
  record("nonbasic_subquotients_acyclic", bounds.snf_max, [&]() -> std::string {
    for (const Weight& w : enumerate_admissible_weights(n)) {
      const auto h = homology_of(subquotient_complex(eps, w));
      const std::int64_t total = std::accumulate(h.betti.begin(), h.betti.end(), std::int64_t{0});
      const std::int64_t expect = is_basic(w) ? 1 : 0;
      if (total != expect || !h.torsion_free()) return "subquotient homology wrong at " + w.str();
    }
    return "";
  });
  record("basic_weights_are_ballot", bounds.enum_max, [&]() -> std::string {
    return betti_fast_all(eps) == ballots ? "" : "basic weight counts differ from ballot numbers";
  });
  record("euler_characteristic", bounds.enum_max, [&]() -> std::string {
    std::int64_t chi = 0;
    for (int k = 0; k <= n; ++k) chi += (k % 2 ? -1 : 1) * ballots[static_cast<std::size_t>(k)];
    return euler_characteristic(eps) == chi ? "" : "cell Euler characteristic differs";
  });
  record("cluster_complex_catalan", bounds.enum_max, [&]() -> std::string {
    const auto s = build_cluster_complex(eps);
    return static_cast<std::int64_t>(s.maximal().size()) == catalan(n + 1) ? "" : "top simplex count is not Catalan";
  });
  record("ring_rank_is_betti", bounds.enum_max, [&]() -> std::string {
    for (int k = 0; k <= n; ++k)
      if (ring_rank(n, k) != ballots[static_cast<std::size_t>(k)]) return "ring rank differs in degree " + std::to_string(k);
    return "";
  });
  record("pairing_unimodular", bounds.enum_max, [&]() -> std::string {
    for (int k = 0; k <= n; ++k) {
      const auto basis = dual_block_basis(n, k);
      const auto ws = enumerate_basic_weights(n, k);
      std::vector<int> hits(ws.size(), 0);
      for (const auto& b : basis) {
        int row = 0;
        for (std::size_t t = 0; t < ws.size(); ++t) {
          const int v = pair_with_homology(b, ws[t]);
          if (v != 0 && v != 1 && v != -1) return "pairing value out of range";
          if (v) ++row, ++hits[t];
        }
        if (row != 1) return "pairing row is not a signed unit vector";
      }
      if (basis.size() != ws.size() || std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        return "pairing is not a signed permutation in degree " + std::to_string(k);
    }
    return "";
  });
  record("abelianization_rank", bounds.enum_max, [&]() -> std::string {
    const auto ab = abelianize(g0_presentation(eps));
    return ab.rank == static_cast<std::size_t>(n) && ab.torsion.empty() ? "" : "H1 of the presentation is not Z^n";
  });
  return out;
}

Json verify_report(const SignVector& eps, const std::vector<CheckResult>& results) {
  Json j = header(eps);
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  j["checks"] = checks;
  j["pass"] = all;
  return j;
}

}  // namespace quiverpic
