#pragma once

// Tables and reports rendered as JSON, CSV or standalone TeX.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "twaffine/rootsys.hpp"

namespace twaffine::emit {

struct TableClause {
  DotKind kind;
  std::optional<int> component;
  std::vector<RootVector> dots;
  ProgressionSet progression;
};

struct Table {
  int number;
  std::string title;
  std::vector<TableClause> clauses;
};

inline std::vector<RootVector> members(DotKind k, Ambient a) {
  if (k == DotKind::Zero) return {RootVector::zero(a)};
  return dot_kind_members(k, a);
}

/// Tables 1-5 for one parameter set, with every S-set computed from the
/// root system (not copied from the closed forms).
inline std::vector<Table> build_tables(const RootSystem& rs) {
  const auto& p = rs.params();
  const Ambient a = p.ambient();
  std::vector<Table> out;
  auto from_row = [&](const TableRow& row, std::optional<int> comp, Table& t) {
    for (const auto& c : row) {
      auto ms = members(c.kind, a);
      if (!ms.empty()) t.clauses.push_back({c.kind, comp, ms, c.progression});
    }
  };
  Table t1{1, "root system R", {}};
  from_row(tables::roots(p), std::nullopt, t1);
  out.push_back(t1);

  Table t2{2, "S-sets", {}};
  for (DotKind k : tables::s_table_rows()) {
    auto ms = members(k, a);
    if (ms.empty() || !rs.is_dot_root(ms.front())) continue;
    t2.clauses.push_back({k, std::nullopt, ms, rs.s_set(ms.front())});
  }
  out.push_back(t2);

  Table t3{3, "even components R0(i)", {}};
  for (int i = 1; i <= 2; ++i) from_row(tables::even_component(p, i), i, t3);
  out.push_back(t3);

  Table t4{4, "dot roots of R0(i)", {}};
  for (int i = 1; i <= 2; ++i)
    for (DotKind k : tables::dot_roots_0(p, i)) {
      auto ms = members(k, a);
      if (ms.empty()) continue;
      t4.clauses.push_back({k, i, ms, rs.component_row(i).progression(ms.front())});
    }
  out.push_back(t4);

  Table t5{5, "S-sets of R0(i)", {}};
  for (auto [i, k] : tables::s0_table_rows()) {
    if (!p.has_component(i)) continue;
    auto ms = members(k, a);
    const auto& d0 = rs.dot_roots_0(i);
    if (ms.empty() || !std::binary_search(d0.begin(), d0.end(), ms.front())) continue;
    t5.clauses.push_back({k, i, ms, rs.s_set_0(i, ms.front())});
  }
  out.push_back(t5);
  return out;
}

inline nlohmann::json table_json(const AlgebraParams& p, const Table& t) {
  auto clauses = nlohmann::json::array();
  for (const auto& c : t.clauses) {
    nlohmann::json j{{"shape", dot_kind_name(c.kind)}, {"dot", c.dots}, {"progression", c.progression}};
    if (c.component) j["component"] = *c.component;
    clauses.push_back(std::move(j));
  }
  return {{"family", family_token(p.family)}, {"k", p.k}, {"l", p.l}, {"table", t.number}, {"title", t.title},
          {"clauses", clauses}};
}

inline std::string join_residues(const ProgressionSet& s) {
  std::string r;
  for (std::size_t n = 0; n < s.residues().size(); ++n) r += (n ? ";" : "") + std::to_string(s.residues()[n]);
  return r;
}

inline const char* kTablesCsvHeader = "table,component,shape,dot,mod,res\n";

inline std::string table_csv_rows(const Table& t) {
  std::ostringstream os;
  for (const auto& c : t.clauses)
    for (const auto& d : c.dots)
      os << t.number << "," << (c.component ? std::to_string(*c.component) : "") << "," << dot_kind_name(c.kind) << ","
         << to_string(d) << "," << (c.progression.is_empty() ? 0 : c.progression.modulus()) << ","
         << join_residues(c.progression) << "\n";
  return os.str();
}

inline std::string tex_preamble() {
  return "\\documentclass{article}\n\\usepackage{amsmath,amssymb,longtable}\n\\begin{document}\n";
}
inline std::string tex_postamble() { return "\\end{document}\n"; }

inline std::string table_tex(const AlgebraParams& p, const Table& t) {
  std::ostringstream os;
  const bool comp = t.number >= 3;
  os << "\\begin{table}[h]\n\\centering\n";
  os << "\\caption{Table " << t.number << ": " << t.title << " for $" << family_tex(p.family) << "$, $k=" << p.k
     << "$, $\\ell=" << p.l << "$}\n";
  os << "\\begin{tabular}{" << (comp ? "cll" : "ll") << "}\n\\hline\n";
  if (comp) os << "$i$ & ";
  os << (t.number == 2 || t.number == 5 ? "$\\dot\\alpha$ & $S_{\\dot\\alpha}$" : "$\\dot\\alpha$ & $\\sigma$")
     << " \\\\\n\\hline\n";
  for (const auto& c : t.clauses) {
    if (comp) os << *c.component << " & ";
    os << "$" << dot_kind_tex(c.kind) << "$ & $" << c.progression.to_tex() << "$ \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n\\end{table}\n";
  return os.str();
}

}  // namespace twaffine::emit
