#include "quiverpic/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

#include "quiverpic/errors.hpp"
#include "quiverpic/homology.hpp"

namespace quiverpic {

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->root, -it->exp});
  return w;
}

GroupWord GroupWord::reduced() const {
  GroupWord w;
  for (const Letter& l : letters) {
    if (!w.letters.empty() && w.letters.back().root == l.root && w.letters.back().exp == -l.exp)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& other) const {
  GroupWord w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

std::string GroupWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    if (t) s += ' ';
    s += letters[t].root.name();
    if (letters[t].exp == -1) s += "^-1";
  }
  return s;
}

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return y.inverse() * x * y * x.inverse(); }

GroupWord canonical_cyclic(const GroupWord& w) {
  std::vector<Letter> v = w.reduced().letters;
  while (v.size() >= 2 && v.front().root == v.back().root && v.front().exp == -v.back().exp) {
    v.erase(v.begin());
    v.pop_back();
  }
  GroupWord best{v};
  for (const GroupWord& base : {GroupWord{v}, GroupWord{v}.inverse()}) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      GroupWord cand;
      cand.letters.assign(base.letters.begin() + static_cast<std::ptrdiff_t>(r), base.letters.end());
      cand.letters.insert(cand.letters.end(), base.letters.begin(), base.letters.begin() + static_cast<std::ptrdiff_t>(r));
      if (cand < best) best = cand;
    }
  }
  return best;
}

Presentation g0_presentation(const SignVector& eps) {
  Presentation p;
  p.n = eps.n();
  p.eps = eps;
  p.group = "g0";
  p.generators = all_positive_roots(p.n);
  const auto& roots = p.generators;
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      const Root& x = roots[a];
      const Root& y = roots[b];
      if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) continue;
      if (noncrossing(eps, x, y)) p.relators.push_back(commutator(GroupWord::gen(x), GroupWord::gen(y)));
    }
  for (int i = 0; i < p.n; ++i)
    for (int j = i + 1; j < p.n; ++j)
      for (int k = j + 1; k <= p.n; ++k) {
        const auto xij = GroupWord::gen({i, j}), xjk = GroupWord::gen({j, k}), xik = GroupWord::gen({i, k});
        const GroupWord c = eps.plus(j) ? commutator(xij, xjk) : commutator(xjk, xij);
        p.relators.push_back(c * xik.inverse());
      }
  return p;
}

Presentation u_presentation(const SignVector& eps) {
  Presentation p;
  p.n = eps.n();
  p.eps = eps;
  p.group = "u";
  p.generators = all_positive_roots(p.n);
  const auto& roots = p.generators;
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      const Root& x = roots[a];
      const Root& y = roots[b];
      const auto X = GroupWord::gen(x), Y = GroupWord::gen(y);
      if (x.j != y.i && y.j != x.i) {
        p.relators.push_back(commutator(X, Y));
        continue;
      }
      const Root g{std::min(x.i, y.i), std::max(x.j, y.j)};
      const int e = euler_form(eps, x, y) == 0 ? 1 : -1;
      // X(a) X(b) = X(b) X(a+b)^e X(a)
      p.relators.push_back(X * Y * X.inverse() * GroupWord::gen(g, -e) * Y.inverse());
    }
  return p;
}

GroupWord restrict_word(const GroupWord& word, const std::vector<int>& J) {
  GroupWord w;
  for (const Letter& l : word.letters) {
    bool inside = true;
    for (int v = l.root.i + 1; v <= l.root.j && inside; ++v) inside = std::find(J.begin(), J.end(), v) != J.end();
    if (inside) w.letters.push_back(l);
  }
  return w.reduced();
}

GroupWord include_word(const GroupWord& word, int p) {
  GroupWord w = word;
  for (Letter& l : w.letters) l.root = {l.root.i + p, l.root.j + p};
  return w;
}

std::string export_gap(const Presentation& p) {
  std::ostringstream os;
  os << "# quiverpic presentation\n";
  os << "# n=" << p.n << " eps=" << p.eps.str() << " group=" << p.group << "\n";
  os << "gens: ";
  for (std::size_t t = 0; t < p.generators.size(); ++t) os << (t ? ", " : "") << p.generators[t].name();
  os << "\n";
  for (const auto& r : p.relators) os << "rel: " << r.str() << "\n";
  return os.str();
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer in " + std::string(context));
  return v;
}

Root parse_generator(std::string_view tok) {
  if (tok.size() < 5 || tok.substr(0, 2) != "x_") throw ParseError("bad generator '" + std::string(tok) + "'");
  tok.remove_prefix(2);
  const auto us = tok.find('_');
  if (us == std::string_view::npos) throw ParseError("bad generator '" + std::string(tok) + "'");
  Root r{parse_int(tok.substr(0, us), tok), parse_int(tok.substr(us + 1), tok)};
  if (r.i < 0 || r.i >= r.j) throw ParseError("bad generator indices");
  return r;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool header = false, gens = false;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# n=", 0) == 0) {
      for (const std::string& field : split(line.substr(2), ' ')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("bad header field");
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "n")
          p.n = parse_int(val, "header");
        else if (key == "eps")
          p.eps = SignVector::parse(val);
        else if (key == "group")
          p.group = val;
      }
      if (p.n < 1) throw ParseError("bad n in header");
      header = true;
    } else if (line[0] == '#') {
      continue;
    } else if (line.rfind("gens:", 0) == 0) {
      for (const std::string& g : split(std::string_view(line).substr(5), ',')) p.generators.push_back(parse_generator(g));
      gens = true;
    } else if (line.rfind("rel:", 0) == 0) {
      GroupWord w;
      for (const std::string& tok : split(std::string_view(line).substr(4), ' ')) {
        std::string_view t = tok;
        int e = 1;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
          e = -1;
          t.remove_suffix(3);
        }
        const Root r = parse_generator(t);
        if (std::find(p.generators.begin(), p.generators.end(), r) == p.generators.end())
          throw ParseError("relator uses undeclared generator " + r.name());
        w.letters.push_back({r, e});
      }
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError("unrecognised line: " + line);
    }
  }
  if (!header || !gens) throw ParseError("missing header or generator line");
  if (p.eps.n() != p.n) throw ParseError("header n does not match eps");
  return p;
}

Abelianization abelianize(const Presentation& p) {
  SparseMatrix m;
  m.rows = static_cast<int>(p.relators.size());
  m.cols = static_cast<int>(p.generators.size());
  for (int r = 0; r < m.rows; ++r) {
    std::map<int, std::int64_t> sums;
    for (const Letter& l : p.relators[static_cast<std::size_t>(r)].letters) {
      auto it = std::find(p.generators.begin(), p.generators.end(), l.root);
      if (it == p.generators.end()) throw DomainError("relator uses an unknown generator");
      sums[static_cast<int>(it - p.generators.begin())] += l.exp;
    }
    for (auto [c, v] : sums)
      if (v) m.entries.push_back({r, c, v});
  }
  std::sort(m.entries.begin(), m.entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return std::tie(a.col, a.row) < std::tie(b.col, b.row);
  });
  const SnfResult s = smith_normal_form(m);
  Abelianization a;
  a.rank = p.generators.size() - s.rank;
  for (const auto& d : s.diagonal)
    if (d > 1) a.torsion.push_back(d.str());
  return a;
}

}  // namespace quiverpic
