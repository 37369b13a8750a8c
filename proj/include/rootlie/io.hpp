#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rootlie/label.hpp"
#include "rootlie/quiver.hpp"
#include "rootlie/rootcat.hpp"
#include "rootlie/serre.hpp"

namespace rootlie {

/// Deterministic structured-text export of an assembled table: basis
/// listing, (x,y,z,c) bracket quadruples in index order, then the Gram
/// matrix. Golden-file friendly.
inline std::string lie_table_export(const LieTable& t) {
  std::ostringstream os;
  os << "basis " << t.dim() << "\n";
  for (int i = 0; i < t.dim(); ++i)
    os << "  " << i << " " << t.basis[i].str(*t.q) << "\n";
  os << "brackets\n";
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      const auto& b = t.bracket(i, j);
      if (!b) {
        os << "  [" << i << "," << j << "] out-of-range\n";
        continue;
      }
      for (const auto& [k, c] : *b)
        os << "  (" << i << "," << j << "," << k << "," << c.str() << ")\n";
    }
  os << "gram\n";
  for (int i = 0; i < t.dim(); ++i) {
    os << " ";
    for (int j = 0; j < t.dim(); ++j) os << " " << t.gram[i][j].str();
    os << "\n";
  }
  return os.str();
}

/// One line per check, PASS/FAIL first so reports grep cleanly.
inline std::string report_export(const CheckReport& rep) {
  std::ostringstream os;
  for (const CheckLine& l : rep.lines) {
    os << (l.pass ? "PASS" : "FAIL") << "  " << l.what;
    if (!l.detail.empty()) os << "  [" << l.detail << "]";
    os << "\n";
  }
  os << (rep.all_pass() ? "all checks passed"
                        : std::to_string(rep.failures()) + " checks FAILED")
     << " (" << rep.lines.size() << " lines)\n";
  return os.str();
}

inline std::string jacobi_export(const JacobiReport& r) {
  std::ostringstream os;
  os << "jacobi: " << r.violations << " violations over " << r.checked
     << " triples";
  if (r.skipped) os << " (" << r.skipped << " skipped by truncation)";
  os << "\n";
  for (const auto& w : r.witnesses)
    os << "  witness triple (" << w[0] << "," << w[1] << "," << w[2] << ")\n";
  return os.str();
}

/// Line-oriented quiver format:
///   vertex <label>
///   arrow <label>: <src> -> <dst>
///   relation <coeff> <arrow.arrow...> [<coeff> <path> ...]
/// Order-insensitive; errors carry line numbers.
inline Quiver parse_quiver_text(const std::string& text) {
  std::vector<std::string> vertices;
  struct RawArrow {
    std::string label, src, dst;
    int line;
  };
  std::vector<RawArrow> raw_arrows;
  std::vector<std::pair<std::vector<std::pair<int, std::string>>, int>>
      raw_relations;  // (coeff, path-word) list + line

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("quiver parse error at line " +
                             std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "vertex") {
      std::string v;
      if (!(ls >> v)) fail("expected a vertex label");
      vertices.push_back(v);
    } else if (kw == "arrow") {
      std::string name, src, arrow_sym, dst;
      if (!(ls >> name >> src >> arrow_sym >> dst) || arrow_sym != "->")
        fail("expected 'arrow <label>: <src> -> <dst>'");
      if (!name.empty() && name.back() == ':') name.pop_back();
      raw_arrows.push_back({name, src, dst, lineno});
    } else if (kw == "relation") {
      std::vector<std::pair<int, std::string>> terms;
      int coeff;
      std::string word;
      while (ls >> coeff >> word) terms.emplace_back(coeff, word);
      if (terms.empty()) fail("expected '<coeff> <path>' terms");
      raw_relations.emplace_back(std::move(terms), lineno);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  auto vertex_of = [&](const std::string& label, int at) -> int {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return static_cast<int>(i);
    lineno = at;
    fail("unknown vertex '" + label + "'");
    return -1;
  };
  std::vector<Arrow> arrows;
  for (const RawArrow& a : raw_arrows)
    arrows.push_back(
        {a.label, vertex_of(a.src, a.line), vertex_of(a.dst, a.line)});
  auto arrow_of = [&](const std::string& label, int at) -> int {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return static_cast<int>(i);
    lineno = at;
    fail("unknown arrow '" + label + "'");
    return -1;
  };
  std::vector<Relation> relations;
  for (auto& [terms, at] : raw_relations) {
    Relation rel;
    for (auto& [coeff, word] : terms) {
      RelationTerm t;
      t.coeff = coeff;
      std::string cur;
      for (char c : word + ".") {
        if (c == '.') {
          if (!cur.empty()) t.arrows.push_back(arrow_of(cur, at));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (t.arrows.empty()) {
        lineno = at;
        fail("empty relation path");
      }
      rel.push_back(std::move(t));
    }
    relations.push_back(std::move(rel));
  }
  return Quiver(std::move(vertices), std::move(arrows), std::move(relations));
}

namespace detail {

inline DimVector parse_dim_list(const std::string& s, int expected = -1) {
  DimVector d;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw std::runtime_error("bad dimension list '" + s + "'");
      d.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (expected >= 0 && static_cast<int>(d.size()) != expected)
    throw std::runtime_error("dimension list '" + s + "' has wrong length");
  return d;
}

}  // namespace detail

/// Wire syntax for iso-class labels:
///   S(d1,...,dn)            unique class of a real root
///   R(z=<point>,l=<len>,i=<socle>)@(d1,...,dn)   per-field regular class
///   E0(n)                   aggregate class of dimension n*delta
/// summands joined by '+', a trailing [1] shifts one summand.
inline RootCatLabel parse_label(const std::string& text, const Quiver& q,
                                const DimVector& delta = {}) {
  RootCatLabel out;
  std::string s = text;
  if (s == "0") return out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? next
                                                              : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    bool shifted = false;
    if (tok.size() >= 3 && tok.substr(tok.size() - 3) == "[1]") {
      shifted = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    IndecLabel l;
    if (tok.rfind("S(", 0) == 0 || tok.rfind("P(", 0) == 0 ||
        tok.rfind("I(", 0) == 0) {
      // accept P/I spellings as synonyms for a root class
      l.dim = detail::parse_dim_list(tok.substr(2, tok.size() - 3), q.n());
    } else if (tok.rfind("E0(", 0) == 0) {
      int n = std::stoi(tok.substr(3, tok.size() - 4));
      if (delta.empty())
        throw std::runtime_error("E0 label needs an affine quiver");
      l.dim = n * delta;
      l.aggregate = true;
    } else if (tok.rfind("R(", 0) == 0) {
      std::string inner = tok.substr(2, tok.size() - 3);
      TubeCoord tc;
      std::istringstream ps(inner);
      std::string fld;
      while (std::getline(ps, fld, ',')) {
        if (fld.rfind("z=", 0) == 0) tc.z = fld.substr(2);
        else if (fld.rfind("l=", 0) == 0) tc.length = std::stoi(fld.substr(2));
        else if (fld.rfind("i=", 0) == 0) tc.socle = std::stoi(fld.substr(2));
        else throw std::runtime_error("bad tube field '" + fld + "'");
      }
      if (delta.empty())
        throw std::runtime_error("R label needs an affine quiver");
      // the point degree is 1 for rational points, else the minimal
      // polynomial degree read off the coefficient list
      int deg = 1;
      if (tc.z.rfind("m[", 0) == 0)
        deg = static_cast<int>(std::count(tc.z.begin(), tc.z.end(), ';'));
      l.dim = (tc.length * deg) * delta;
      l.tube = tc;
    } else {
      throw std::runtime_error("bad label token '" + tok + "'");
    }
    if (shifted) out.sh.push_back(std::move(l));
    else out.mod.push_back(std::move(l));
  }
  out.mod = normalized(std::move(out.mod));
  out.sh = normalized(std::move(out.sh));
  return out;
}

}  // namespace rootlie
