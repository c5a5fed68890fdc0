#pragma once

// The twaffine command line. `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit status: 0 success, 1 a check failed (or the queried root is not a
// root), 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twaffine/emit.hpp"
#include "twaffine/parabolic.hpp"
#include "twaffine/suites.hpp"

namespace twaffine::cli {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "a-even-2";
  int k = 1;
  int l = 1;
  Coord mmax = 2;
  std::string format = "json";
  std::string config;
  std::uint64_t seed = 1;
  std::string out;
  std::string root;
  std::string zeta;
  int table = 0;
  int samples = 20;
  bool list_families = false;
};

inline const char* kCsvHelp =
    "CSV columns:\n"
    "  roots:  root,eps_1..eps_k,del_1..del_l,dc,class,parity,component\n"
    "  tables: table,component,shape,dot,mod,res   (res is ';'-separated)\n"
    "  verify: suite,checks,failures,ok\n";

inline AlgebraParams params_of(const Options& o) {
  auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family \"" + o.family + "\"");
  try {
    return AlgebraParams(*f, o.k, o.l);
  } catch (const InvalidParams& e) {
    throw UsageError(std::string("invalid parameters: ") + e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A JSON argument given inline or as @file.
inline json json_arg(const std::string& flag, const std::string& value) {
  std::string text = value, where = flag;
  if (!value.empty() && value[0] == '@') {
    text = slurp(value.substr(1));
    where = value.substr(1);
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("parse error in " + where + ": " + e.what());
  }
}

inline RootVector root_arg(const Options& o, const AlgebraParams& p) {
  if (o.root.empty()) throw UsageError("--root is required");
  json j = json_arg("--root", o.root);
  try {
    RootVector v = j.get<RootVector>();
    if (v.ambient() != p.ambient())
      throw UsageError("--root has " + std::to_string(v.eps().size()) + " eps and " + std::to_string(v.del().size()) +
                       " del coordinates; expected k=" + std::to_string(p.k) + ", l=" + std::to_string(p.l));
    return v;
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad --root: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --root: ") + e.what());
  }
}

inline Functional zeta_arg(const Options& o, const AlgebraParams& p) {
  if (o.zeta.empty()) throw UsageError("--zeta is required");
  json j = json_arg("--zeta", o.zeta);
  try {
    Functional z = j.get<Functional>();
    if (z.ambient() != p.ambient()) throw UsageError("--zeta has the wrong number of coefficients for k, l");
    return z;
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad --zeta: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --zeta: ") + e.what());
  }
}

inline ShadowConfig config_arg(const Options& o, const AlgebraParams& p) {
  if (o.config.empty()) throw UsageError("--config is required");
  std::string text = slurp(o.config);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("parse error in " + o.config + ": " + e.what());
  }
  try {
    return config_from_json(p, j);
  } catch (const ConfigError& e) {
    throw UsageError("config error in " + o.config + ": " + e.what());
  }
}

inline void require_json(const Options& o, const std::string& cmd) {
  if (o.format != "json") throw UsageError(cmd + " supports --format json only");
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json root_entry(const RootSystem& rs, const RootVector& v) {
  json e{{"root", v}};
  if (v.is_zero()) {
    e["class"] = "zero";
    e["parity"] = nullptr;
    e["component"] = nullptr;
    return e;
  }
  RootInfo info = rs.classify(v);
  e["class"] = to_string(info.cls);
  e["parity"] = info.parity ? json(to_string(*info.parity)) : json("unspecified");
  e["component"] = to_string(info.component);
  return e;
}

// --- commands -------------------------------------------------------------

inline int cmd_roots(const Options& o, std::ostream& out) {
  AlgebraParams p = params_of(o);
  RootSystem rs(p);
  auto w = rs.enumerate_window(o.mmax);
  if (o.format == "json") {
    json roots = json::array();
    for (const auto& v : w) roots.push_back(root_entry(rs, v));
    out << dump({{"family", family_token(p.family)}, {"k", p.k}, {"l", p.l}, {"mmax", o.mmax}, {"count", w.size()},
                 {"roots", roots}});
  } else if (o.format == "csv") {
    out << "root";
    for (int i = 1; i <= p.k; ++i) out << ",eps_" << i;
    for (int j = 1; j <= p.l; ++j) out << ",del_" << j;
    out << ",dc,class,parity,component\n";
    for (const auto& v : w) {
      json e = root_entry(rs, v);
      out << to_string(v);
      for (auto c : v.eps()) out << "," << c;
      for (auto c : v.del()) out << "," << c;
      out << "," << v.dc() << "," << e["class"].get<std::string>() << ","
          << (e["parity"].is_null() ? "" : e["parity"].get<std::string>()) << ","
          << (e["component"].is_null() ? "" : e["component"].get<std::string>()) << "\n";
    }
  } else {
    out << emit::tex_preamble();
    out << "\\section*{Roots of $" << family_tex(p.family) << "$, $k=" << p.k << "$, $\\ell=" << p.l
        << "$, $|\\text{dc}|\\le " << o.mmax << "$ (" << w.size() << " roots)}\n";
    out << "\\begin{longtable}{ll}\n";
    for (const auto& v : w) out << "$" << to_tex(v) << "$ & " << root_entry(rs, v)["class"].get<std::string>() << " \\\\\n";
    out << "\\end{longtable}\n" << emit::tex_postamble();
  }
  return 0;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  require_json(o, "classify");
  AlgebraParams p = params_of(o);
  RootSystem rs(p);
  RootVector v = root_arg(o, p);
  if (!rs.is_root(v)) {
    out << dump({{"root", v}, {"is_root", false}});
    return 1;
  }
  json e = root_entry(rs, v);
  e["is_root"] = true;
  out << dump(e);
  return 0;
}

inline int cmd_tables(const Options& o, std::ostream& out) {
  AlgebraParams p = params_of(o);
  if (o.table < 0 || o.table > 5) throw UsageError("--table must be 0 (all) or 1..5");
  RootSystem rs(p);
  auto all = emit::build_tables(rs);
  std::vector<emit::Table> ts;
  for (auto& t : all)
    if (o.table == 0 || t.number == o.table) ts.push_back(t);
  if (o.format == "json") {
    if (ts.size() == 1) {
      out << dump(emit::table_json(p, ts.front()));
    } else {
      json arr = json::array();
      for (const auto& t : ts) arr.push_back(emit::table_json(p, t));
      out << dump(arr);
    }
  } else if (o.format == "csv") {
    out << emit::kTablesCsvHeader;
    for (const auto& t : ts) out << emit::table_csv_rows(t);
  } else {
    out << emit::tex_preamble();
    for (const auto& t : ts) out << emit::table_tex(p, t);
    out << emit::tex_postamble();
  }
  return 0;
}

inline int report(const Options& o, const AlgebraParams& p, const std::vector<Verdict>& vs, std::ostream& out) {
  bool ok = std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.ok(); });
  if (o.format == "json") {
    out << dump({{"family", family_token(p.family)},
                 {"k", p.k},
                 {"l", p.l},
                 {"mmax", o.mmax},
                 {"seed", o.seed},
                 {"samples", o.samples},
                 {"ok", ok},
                 {"suites", vs}});
  } else if (o.format == "csv") {
    out << "suite,checks,failures,ok\n";
    for (const auto& v : vs) out << v.name << "," << v.checks << "," << v.failures.size() << "," << (v.ok() ? 1 : 0) << "\n";
  } else {
    out << emit::tex_preamble() << "\\begin{tabular}{lrrl}\n\\hline\nsuite & checks & failures & status \\\\\n\\hline\n";
    for (const auto& v : vs)
      out << "\\texttt{" << v.name << "} & " << v.checks << " & " << v.failures.size() << " & "
          << (v.ok() ? "pass" : "fail") << " \\\\\n";
    out << "\\hline\n\\end{tabular}\n" << emit::tex_postamble();
  }
  return ok ? 0 : 1;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  AlgebraParams p = params_of(o);
  auto rs = std::make_shared<RootSystem>(p);
  std::vector<Verdict> vs = suites::rootsys(*rs, o.mmax);
  Rng rng(o.seed);
  vs.push_back(suites::pipeline(rs, rng, o.samples, o.mmax));
  vs.push_back(suites::mutants(rs, rng, o.samples, o.mmax));
  vs.push_back(suites::pi_decomposition(*rs, rng, o.samples, o.mmax));
  for (int i = 1; i <= 2; ++i)
    if (p.has_component(i)) vs.push_back(suites::round_trip(*rs, i, rng, o.samples));
  return report(o, p, vs, out);
}

inline int cmd_shadow_validate(const Options& o, std::ostream& out) {
  require_json(o, "shadow-validate");
  AlgebraParams p = params_of(o);
  Shadow sh(config_arg(o, p));
  Verdict v = sh.validate();
  json j{{"validate", v}};
  if (v.ok()) {
    j["tight"] = sh.is_tight();
    j["hybrid_module"] = sh.is_hybrid_module();
    j["hypothesis"] = sh.hypothesis_main2(o.mmax);
  }
  out << dump(j);
  return v.ok() ? 0 : 1;
}

inline int cmd_shadow_derive_p(const Options& o, std::ostream& out) {
  require_json(o, "shadow-derive-p");
  AlgebraParams p = params_of(o);
  Shadow sh(config_arg(o, p));
  Verdict v = sh.validate();
  if (!v.ok()) {
    out << dump({{"validate", v}});
    return 1;
  }
  json inP = json::array();
  for (const auto& r : sh.roots().enumerate_window(o.mmax)) {
    if (!r.dot_is_zero() && form(r, r) == 0) continue;
    if (sh.in_P(r)) inP.push_back(r);
  }
  Verdict cp = sh.check_P(o.mmax);
  bool ok = cp.ok();
  json comps = json::array();
  for (int i = 1; i <= 2; ++i) {
    if (!p.has_component(i)) continue;
    auto dp = dot_parabolic_from_P(sh, i);
    Verdict par = is_parabolic(sh.roots(), dp);
    Verdict rt = check_round_trip(sh, dp, o.mmax);
    ok = ok && par.ok() && rt.ok();
    comps.push_back({{"component", i},
                     {"members", dp.members},
                     {"proper", is_proper(sh.roots(), dp)},
                     {"parabolic", par},
                     {"round_trip", rt}});
  }
  out << dump({{"mmax", o.mmax}, {"P", inP}, {"check_P", cp}, {"dot_P", comps}});
  return ok ? 0 : 1;
}

inline int cmd_parabolic_synth(const Options& o, std::ostream& out) {
  require_json(o, "parabolic-synth");
  AlgebraParams p = params_of(o);
  RootSystem rs(p);
  if (!o.zeta.empty()) {
    Functional z = zeta_arg(o, p);
    json comps = json::array();
    bool ok = true;
    for (int i = 1; i <= 2; ++i) {
      if (!p.has_component(i)) continue;
      auto hs = half_space(rs, i, z);
      json c{{"component", i}, {"members", hs.members}};
      try {
        Functional zz = synthesize_functional(rs, hs);
        bool same = half_space(rs, i, zz).members == hs.members;
        ok = ok && same;
        c["zeta"] = zz;
        c["recovered"] = same;
      } catch (const Infeasible& e) {
        ok = false;
        c["infeasible"] = e.what();
      }
      comps.push_back(c);
    }
    out << dump({{"components", comps}, {"ok", ok}});
    return ok ? 0 : 1;
  }
  Shadow sh(config_arg(o, p));
  auto res = run_pipeline(sh, o.mmax);
  json comps = json::array();
  for (std::size_t n = 0; n < res.parabolics.size(); ++n) {
    json c{{"component", res.parabolics[n].component},
           {"members", res.parabolics[n].members},
           {"proper", is_proper(sh.roots(), res.parabolics[n])}};
    if (n < res.zetas.size()) c["zeta"] = res.zetas[n];
    comps.push_back(c);
  }
  json j{{"components", comps}, {"verdict", res.verdict}};
  if (res.zeta) {
    j["zeta"] = res.zeta->zeta;
    j["trivial"] = res.zeta->trivial;
  }
  out << dump(j);
  return res.verdict.ok() ? 0 : 1;
}

inline int cmd_phi_pi(const Options& o, std::ostream& out) {
  require_json(o, "phi-pi");
  AlgebraParams p = params_of(o);
  RootSystem rs(p);
  Functional z = zeta_arg(o, p);
  if (z.delta() != 0) throw UsageError("--zeta must vanish on delta");
  auto ps = phi_pi(rs, z, o.mmax);
  out << dump({{"r", ps.r},
               {"phi_real", ps.phi_real},
               {"phi_full", ps.phi_full},
               {"phi_plus", ps.phi_plus},
               {"pi", ps.pi},
               {"variants_differ", ps.variants_differ},
               {"eq_equal", ps.equal_check}});
  return ps.equal_check.ok() ? 0 : 1;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  require_json(o, "decompose");
  AlgebraParams p = params_of(o);
  RootSystem rs(p);
  Functional z = zeta_arg(o, p);
  if (z.delta() != 0) throw UsageError("--zeta must vanish on delta");
  auto ps = phi_pi(rs, z, o.mmax);
  std::vector<RootVector> targets = ps.phi_plus;
  if (!o.root.empty()) {
    RootVector b = root_arg(o, p);
    if (!std::binary_search(ps.phi_plus.begin(), ps.phi_plus.end(), b))
      throw UsageError(to_string(b) + " is not in Phi^+ for this functional");
    targets = {b};
  }
  json ds = json::array();
  bool ok = true;
  for (const auto& b : targets) {
    try {
      ds.push_back({{"root", b}, {"coefficients", decompose_over_pi(b, ps, z)}});
    } catch (const NoDecompositionFound& e) {
      ok = false;
      ds.push_back({{"root", b}, {"error", e.what()}});
    }
  }
  out << dump({{"pi", ps.pi}, {"decompositions", ds}});
  return ok ? 0 : 1;
}

inline void list_families(std::ostream& out) {
  for (auto f : kAllFamilies)
    out << family_token(f) << "\t" << family_tex(f) << "\t" << family_constraints(f) << "\n";
}

// --- entry point ------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Root-system combinatorics of twisted affine Lie superalgebras with nonzero odd part."};
  app.footer(kCsvHelp);
  app.add_flag("--list-families", o.list_families, "Print family tokens, names and parameter constraints");

  auto common = [&](CLI::App* sub, Coord default_mmax) {
    sub->add_option("--family", o.family, "Family token")
        ->check(CLI::IsMember({"a-even-2", "a-odd-2", "a-4", "d-2"}))
        ->capture_default_str();
    sub->add_option("--k", o.k, "Rank parameter k")->capture_default_str();
    sub->add_option("--l", o.l, "Rank parameter l")->capture_default_str();
    o.mmax = default_mmax;
    sub->add_option("--mmax", o.mmax, "Window half-width on the delta coordinate")
        ->check(CLI::Range(Coord{0}, Coord{1000}))
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "tex"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  struct Cmd {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
    Coord mmax;
  };
  const std::vector<Cmd> cmds{
      {"roots", "Enumerate the roots on a delta-window", cmd_roots, 2},
      {"classify", "Classify one root (--root)", cmd_classify, 2},
      {"tables", "Emit the root, S-set and even-part tables", cmd_tables, 2},
      {"verify", "Run the full invariant battery", cmd_verify, 8},
      {"shadow-validate", "Validate a shadow configuration (--config)", cmd_shadow_validate, 8},
      {"shadow-derive-p", "Derive P and dot P_i from a configuration (--config)", cmd_shadow_derive_p, 8},
      {"parabolic-synth", "Synthesize functionals from a configuration (--config) or a functional (--zeta)",
       cmd_parabolic_synth, 8},
      {"phi-pi", "Compute Phi, Phi^+ and Pi for a functional (--zeta)", cmd_phi_pi, 8},
      {"decompose", "Decompose Phi^+ elements over Pi (--zeta, optional --root)", cmd_decompose, 8},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    common(sub, 0);
    subs.push_back(sub);
  }
  auto by_name = [&](const std::string& n) { return subs[static_cast<std::size_t>(
                                                 std::find_if(cmds.begin(), cmds.end(), [&](const Cmd& c) { return n == c.name; }) -
                                                 cmds.begin())]; };
  by_name("classify")->add_option("--root", o.root, "Root as JSON {\"eps\":[..],\"del\":[..],\"dc\":n} or @file");
  by_name("decompose")->add_option("--root", o.root, "Element of Phi^+ as JSON or @file");
  by_name("tables")->add_option("--table", o.table, "Table number 1..5, or 0 for all")->capture_default_str();
  for (const char* n : {"shadow-validate", "shadow-derive-p", "parabolic-synth"})
    by_name(n)->add_option("--config", o.config, "Shadow configuration JSON file");
  for (const char* n : {"parabolic-synth", "phi-pi", "decompose"})
    by_name(n)->add_option("--zeta", o.zeta, "Functional as JSON {\"eps\":[\"p/q\",..],\"del\":[..],\"delta\":\"0/1\"} or @file");
  by_name("verify")->add_option("--seed", o.seed, "Seed for the randomized suites")->capture_default_str();
  by_name("verify")->add_option("--samples", o.samples, "Samples per randomized suite")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.list_families) {
    list_families(out);
    return 0;
  }
  const Cmd* chosen = nullptr;
  Coord mmax_default = 2;
  for (std::size_t n = 0; n < cmds.size(); ++n)
    if (subs[n]->parsed()) {
      chosen = &cmds[n];
      if (subs[n]->count("--mmax") == 0) mmax_default = cmds[n].mmax;
    }
  if (!chosen) {
    err << app.help();
    return 2;
  }
  if (subs[static_cast<std::size_t>(chosen - cmds.data())]->count("--mmax") == 0) o.mmax = mmax_default;

  auto start = std::chrono::steady_clock::now();
  std::ostringstream buf;
  int code;
  try {
    code = chosen->fn(o, buf);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  err << chosen->name << ": exit " << code << ", wall time " << ms << " ms\n";
  return code;
}

}  // namespace twaffine::cli
