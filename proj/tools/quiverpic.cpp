// quiverpic: command-line front end.

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "quiverpic/chain_complex.hpp"
#include "quiverpic/cluster.hpp"
#include "quiverpic/errors.hpp"
#include "quiverpic/presentation.hpp"
#include "quiverpic/report.hpp"

using namespace quiverpic;

namespace {

constexpr int kMaxN = 12;

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::string eps_text;
  bool eps_given = false;
  std::string output;
  std::optional<int> degree;
  std::string weight;
  std::string cut;
  std::string method = "fast";
  std::string group = "g0";
  unsigned threads = 0;
  VerifyBounds bounds;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (int v : Weight::parse(s).coords) out.push_back(v);
  return out;
}

std::string default_output(const std::string& command) {
  if (command == "picture") return "svg";
  if (command == "presentation") return "gap";
  return "json";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? sep : "") + v[t];
  return s;
}

std::string list_str(const Json& arr) {
  std::vector<std::string> parts;
  for (const auto& x : arr) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  return join(parts, " ");
}

// Plain-text rendering of a report.
std::string to_table(const std::string& command, const Json& j) {
  std::ostringstream os;
  if (j.contains("n")) os << "n " << j["n"].dump() << (j.contains("eps") ? "  eps " + j["eps"].get<std::string>() : "") << "\n";
  if (command == "roots") {
    for (const auto& r : j["roots"]) os << r["name"].get<std::string>() << "  " << list_str(r["dim"]) << "\n";
    int i = 1;
    for (const auto& p : j["projectives"]) os << "P_" << i++ << "  " << list_str(p) << "\n";
  } else if (command == "cells") {
    int k = 0;
    for (const auto& c : j["counts"]) os << "C_" << k++ << "  " << c.dump() << "\n";
    if (j.contains("cells"))
      for (const auto& c : j["cells"]) os << "[" << list_str(c["roots"]) << "]  weight " << list_str(c["weight"]) << "\n";
  } else if (command == "homology") {
    os << "degree  cells  betti  torsion\n";
    for (std::size_t k = 0; k < j["betti"].size(); ++k)
      os << k << "  " << j["cells"][k].dump() << "  " << j["betti"][k].dump() << "  " << list_str(j["torsion"][k]) << "\n";
    os << "euler " << j["euler"].dump() << "\n";
  } else if (command == "weights") {
    if (j.contains("weight")) {
      for (const auto& [key, val] : j["weight"].items()) os << key << "  " << val.dump() << "\n";
    } else {
      for (const auto& d : j["basic_weights"]) {
        os << "degree " << d["degree"].dump() << "  count " << d["count"].dump() << "\n";
        for (const auto& w : d["weights"]) os << "  " << list_str(w) << "\n";
      }
    }
  } else if (command == "decompose") {
    os << "generic  " << join(j["generic"].get<std::vector<std::string>>(), " + ") << "\n";
    if (j.contains("cell")) {
      os << "cut      " << list_str(j["cut"]) << "\n";
      os << "cell     " << list_str(j["cell"]) << "\n";
    }
  } else if (command == "ring") {
    for (const auto& d : j["degrees"]) {
      os << "H^" << d["degree"].dump() << "  rank " << d["rank"].dump() << "\n";
      for (const auto& b : d["basis"]) os << "  " << b["name"].get<std::string>() << "\n";
    }
    if (j.contains("products"))
      for (const auto& p : j["products"])
        os << p["left"].dump() << " * " << p["right"].dump() << " = " << (p["sign"].get<int>() < 0 ? "-" : "+") << p["result"].dump() << "\n";
  } else if (command == "complex") {
    for (const auto& d : j["boundaries"])
      os << "d_" << d["degree"].dump() << "  " << d["rows"].dump() << "x" << d["cols"].dump() << "  nonzeros "
         << d["entries"].size() << "\n";
  } else if (command == "verify") {
    for (const auto& c : j["checks"])
      os << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << "  " << c["detail"].get<std::string>() << "\n";
  } else if (command == "presentation") {
    for (const auto& r : j["relators"]) os << r.get<std::string>() << "\n";
  }
  return os.str();
}

// One command on one orientation, as JSON.
Json run_one(const RunConfig& cfg, const SignVector& eps) {
  const std::string& c = cfg.command;
  if (c == "roots") return roots_report(eps);
  if (c == "cells") return cells_report(eps, cfg.degree);
  if (c == "homology") return homology_report(eps, cfg.method);
  if (c == "weights") {
    std::optional<Weight> w;
    if (!cfg.weight.empty()) w = Weight::parse(cfg.weight);
    return weights_report(eps.n(), cfg.degree, w);
  }
  if (c == "decompose") {
    if (cfg.weight.empty()) throw UsageError("decompose needs --weight");
    const Weight w = Weight::parse(cfg.weight);
    if (w.n() != eps.n()) throw UsageError("weight length does not match n");
    std::optional<std::vector<int>> cut;
    if (!cfg.cut.empty()) cut = parse_int_list(cfg.cut);
    return decompose_report(eps, w, cut);
  }
  if (c == "presentation") return presentation_report(cfg.group == "u" ? u_presentation(eps) : g0_presentation(eps));
  if (c == "ring") return ring_report(eps.n(), cfg.degree);
  if (c == "complex") return complex_report(eps);
  if (c == "verify") return verify_report(eps, verify_orientation(eps, cfg.bounds));
  throw UsageError("command '" + c + "' has no JSON report");
}

// Quantities that must not depend on the orientation.
Json invariant_part(const std::string& command, const Json& j) {
  if (command == "homology") return j["betti"];
  if (command == "ring") {
    Json r = Json::array();
    for (const auto& d : j["degrees"]) r.push_back(d["rank"]);
    return r;
  }
  if (command == "weights") return j;
  if (command == "verify") return j["pass"];
  return nullptr;
}

int run_sweep(const RunConfig& cfg, int n) {
  if (cfg.output != "json" && cfg.output != "table") throw UsageError("sweeps support json or table output only");
  if (cfg.command == "picture") throw UsageError("picture does not support sweeps");
  const auto all = SignVector::all(n);
  std::vector<Json> results(all.size());
  std::vector<std::string> errors(all.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(all.size())));
  // per-orientation work runs single-threaded inside the pool
  const unsigned saved = worker_count();
  set_worker_limit(1);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < all.size();) {
        try {
          results[i] = run_one(cfg, all[i]);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    });
  for (auto& th : pool) th.join();
  set_worker_limit(saved);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!errors[i].empty()) throw std::runtime_error("eps " + all[i].str() + ": " + errors[i]);

  Json out;
  out["n"] = n;
  out["command"] = cfg.command;
  Json per = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) per.push_back(results[i]);
  out["orientations"] = per;
  const Json ref = invariant_part(cfg.command, results.front());
  std::vector<std::string> diffs;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const Json inv = invariant_part(cfg.command, results[i]);
    if (inv != ref) diffs.push_back(all[i].str() + ": " + inv.dump() + " vs " + all.front().str() + ": " + ref.dump());
  }
  bool pass = diffs.empty();
  if (cfg.command == "verify")
    for (const auto& r : results) pass = pass && r["pass"].get<bool>();
  out["invariant"] = ref;
  out["consistent"] = diffs.empty();
  out["diffs"] = diffs;
  if (cfg.output == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) std::cout << "== eps " << all[i].str() << "\n" << to_table(cfg.command, results[i]);
    std::cout << (diffs.empty() ? "orientation-invariant quantities agree\n" : "orientation-invariant quantities DIFFER\n");
  }
  for (const auto& d : diffs) std::cerr << "invariance violation: " << d << "\n";
  return pass ? 0 : 1;
}

int run(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  if (cfg.output.empty()) cfg.output = default_output(cfg.command);
  if (cfg.threads > 0) set_worker_limit(cfg.threads);
  if (cfg.method != "fast" && cfg.method != "snf") throw UsageError("--method must be fast or snf");
  if (cfg.group != "g0" && cfg.group != "u") throw UsageError("--group must be g0 or u");

  const bool sweep = cfg.eps_given && cfg.eps_text == "all";
  int n = 0;
  std::optional<SignVector> eps;
  if (sweep) {
    if (!cfg.n) throw UsageError("--eps all needs --n");
    n = *cfg.n;
  } else if (cfg.eps_given) {
    try {
      eps = SignVector::parse(cfg.eps_text, cfg.n);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    n = eps->n();
  } else {
    if (!cfg.n) throw UsageError("give --n or --eps");
    n = *cfg.n;
  }
  if (n < 1 || n > kMaxN) throw UsageError("n must be between 1 and " + std::to_string(kMaxN));
  if (!eps && !sweep) eps = SignVector::straight(n);
  if (cfg.degree && (*cfg.degree < 0 || *cfg.degree > n)) throw UsageError("--degree out of range");

  if (sweep) return run_sweep(cfg, n);

  if (cfg.command == "picture") {
    if (n != 2 && n != 3) throw UsageError("picture needs n = 2 or 3");
    if (cfg.output != "svg") throw UsageError("picture supports svg output only");
    std::cout << render_picture_svg(*eps);
    return 0;
  }
  if (cfg.output == "svg") throw UsageError("svg output is only available for picture");
  if (cfg.output == "gap") {
    if (cfg.command != "presentation") throw UsageError("gap output is only available for presentation");
    std::cout << export_gap(cfg.group == "u" ? u_presentation(*eps) : g0_presentation(*eps));
    return 0;
  }
  const Json j = run_one(cfg, *eps);
  if (cfg.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << to_table(cfg.command, j);
  if (cfg.command == "verify" && !j["pass"].get<bool>()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picture groups and picture spaces of type A_n quivers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  int n = 0;
  auto* n_opt = app.add_option("--n", n, "number of vertices");
  app.add_option("--eps", cfg.eps_text, "orientation, e.g. +-+ or LRL; 'all' sweeps every orientation");
  app.add_option("--output", cfg.output, "table, json, svg or gap")->check(CLI::IsMember({"table", "json", "svg", "gap"}));
  int degree = -1;
  auto* deg_opt = app.add_option("--degree", degree, "restrict to one degree");
  app.add_option("--weight", cfg.weight, "weight vector, e.g. 1,2,3,3,2,1,1");
  app.add_option("--cut", cfg.cut, "cut set, e.g. 3,6");
  app.add_option("--method", cfg.method, "homology method: fast or snf");
  app.add_option("--group", cfg.group, "presentation: g0 or u");
  app.add_option("--threads", cfg.threads, "worker thread cap (also QUIVERPIC_THREADS)");
  app.add_option("--snf-max", cfg.bounds.snf_max, "largest n for Smith normal form checks in verify");
  app.add_option("--enum-max", cfg.bounds.enum_max, "largest n for enumerative checks in verify");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"roots", "positive roots and projective dimension vectors"},
      {"cells", "cell counts, or the cells of one degree"},
      {"homology", "integral homology of the picture space"},
      {"weights", "basic weights, or the classification of one weight"},
      {"decompose", "generic decomposition and cut-set cells of a weight"},
      {"presentation", "presentation of the picture group or the unipotent group"},
      {"ring", "dual-block basis and cup products of the cohomology ring"},
      {"complex", "cell bases and boundary matrices"},
      {"picture", "SVG of the semi-invariant picture (n = 2, 3)"},
      {"verify", "property checks with a pass/fail matrix"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (n_opt->count()) cfg.n = n;
  if (deg_opt->count()) cfg.degree = degree;
  cfg.eps_given = app.count("--eps") > 0;

  try {
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
