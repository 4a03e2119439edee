// Command-line front end: parse points and spaces, compute the complete
// orbit invariant (G_x, c), decide equivalence with explicit witnesses, and
// emit machine-readable JSON (one document per query on stdout; summaries on
// stderr with -v).
//
// Exit codes: 0 success / equivalent, 1 not equivalent (equiv, verify),
// 2 parse error, 3 semantic error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glnz/glnz.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSemanticError = 3;

struct CommonOpts {
  std::size_t n = 1;
  std::vector<std::string> sym_decls;
  bool verbose = false;
  bool json_out = true;  // JSON is the only output format; flag kept for scripts
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_dim = true) {
  if (with_dim)
    cmd->add_option("-n,--dim", o.n, "ambient dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--sym", o.sym_decls,
                  "declare a symbol, e.g. --sym r2=1.41421356 (repeatable)");
  cmd->add_flag("--json", o.json_out, "emit JSON on stdout (default)");
  cmd->add_flag("-v,--verbose", o.verbose, "human-readable summary on stderr");
}

glnz::SymBasis make_basis(const std::vector<std::string>& decls) {
  glnz::SymBasis b;
  for (const std::string& d : decls) {
    auto eq = d.find('=');
    std::string name = (eq == std::string::npos) ? d : d.substr(0, eq);
    if (name.empty()) throw glnz::ParseError("empty symbol name");
    for (const std::string& s : b.symbols)
      if (s == name) throw glnz::ParseError("duplicate symbol: " + name);
    double value = std::nan("");
    if (eq != std::string::npos) {
      try {
        value = std::stod(d.substr(eq + 1));
      } catch (...) {
        throw glnz::ParseError("bad numeric value for symbol " + name);
      }
    }
    b.symbols.push_back(name);
    b.values.push_back(value);
  }
  return b;
}

// Optional numeric sanity check: scan small integer combinations of the
// declared values for a near-zero residual.  Dependent declarations break
// the classification silently, so a hit is worth a warning (never an error:
// exact decisions use only the declared arithmetic).
void warn_if_numerically_dependent(const glnz::SymBasis& b) {
  const std::size_t k = b.k();
  if (k == 0) return;
  for (double v : b.values)
    if (std::isnan(v)) return;
  const int bound = 8;
  std::size_t combos = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    combos *= 2 * bound + 1;
    if (combos > 2000000) return;
  }
  std::vector<int> c(k + 1, -bound);
  while (true) {
    bool all_zero = true, sym_zero = true;
    double s = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      if (c[i] != 0) all_zero = false;
      if (i > 0 && c[i] != 0) sym_zero = false;
      s += c[i] * (i == 0 ? 1.0 : b.values[i - 1]);
    }
    if (!all_zero && !sym_zero && std::fabs(s) < 1e-9) {
      std::ostringstream os;
      os << "warning: declared symbol values admit a near-integer relation:";
      for (std::size_t i = 0; i <= k; ++i)
        if (c[i] != 0)
          os << " " << (c[i] > 0 ? "+" : "") << c[i] << "*"
             << (i == 0 ? std::string("1") : b.symbols[i - 1]);
      os << " ~ 0; results assume the symbols are rationally independent";
      std::cerr << os.str() << "\n";
      return;
    }
    std::size_t i = 0;
    while (i <= k && c[i] == bound) c[i++] = -bound;
    if (i > k) break;
    ++c[i];
  }
}

glnz::SymPoint parse_point_arg(const std::string& text,
                               const glnz::SymBasis& basis, std::size_t n) {
  glnz::SymPoint p = glnz::parse_point(text, basis);
  if (p.n() != n)
    throw glnz::DimensionMismatch("point has " + std::to_string(p.n()) +
                                  " coordinates, expected " + std::to_string(n));
  return p;
}

json lattice_json(const glnz::LatticeBasis& b) {
  json rows = json::array();
  for (const glnz::RatVec& r : b.rows) {
    json row = json::array();
    for (const glnz::Rat& x : r) row.push_back(glnz::format_rat(x));
    rows.push_back(row);
  }
  return json{{"ambient", b.ambient}, {"rows", rows}};
}

std::string lattice_compact(const glnz::LatticeBasis& b) {
  std::string s = "[";
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < b.rows[i].size(); ++j) {
      if (j) s += ", ";
      s += glnz::format_rat(b.rows[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

json space_json(const glnz::RatAffineSpace& f) {
  const std::size_t n = f.ambient_dim();
  const glnz::IntMat& eq = f.equation_rows();
  json eqs = json::array();
  json text = json::array();
  for (std::size_t i = 0; i < eq.rows(); ++i) {
    json h = json::array();
    std::string line;
    for (std::size_t j = 0; j < n; ++j) {
      h.push_back(glnz::to_string(eq(i, j)));
      if (eq(i, j) == 0) continue;
      glnz::Int v = eq(i, j);
      if (line.empty()) {
        if (v < 0) {
          line += "-";
          v = -v;
        }
      } else {
        line += (v < 0) ? " - " : " + ";
        if (v < 0) v = -v;
      }
      if (v != 1) line += glnz::to_string(v) + "*";
      line += "y" + std::to_string(j + 1);
    }
    glnz::Int r = -eq(i, n);
    if (line.empty()) line = "0";
    line += " = " + glnz::to_string(r);
    eqs.push_back(json{{"h", h}, {"r", glnz::to_string(r)}});
    text.push_back(line);
  }
  return json{{"n", n}, {"equations", eqs}, {"text", text}};
}

json witness_json(const glnz::AffineWitness& w) {
  json u = json::array();
  for (std::size_t i = 0; i < w.u.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < w.u.cols(); ++j)
      row.push_back(glnz::to_string(w.u(i, j)));
    u.push_back(row);
  }
  json t = json::array();
  for (const glnz::Int& x : w.t) t.push_back(glnz::to_string(x));
  return json{{"U", u}, {"t", t}};
}

glnz::AffineWitness witness_from_json(const json& j) {
  const json& w = j.contains("witness") ? j.at("witness") : j;
  const json& u = w.at("U");
  const json& t = w.at("t");
  std::size_t n = t.size();
  if (u.size() != n) throw glnz::ParseError("witness: U/t size mismatch");
  glnz::AffineWitness g{glnz::IntMat(n, n), glnz::IntVec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].size() != n) throw glnz::ParseError("witness: U not square");
    for (std::size_t j2 = 0; j2 < n; ++j2)
      g.u(i, j2) = glnz::Int(u[i][j2].get<std::string>());
    g.t[i] = glnz::Int(t[i].get<std::string>());
  }
  return g;
}

// ---------------------------------------------------------------------------

int cmd_invariants(const CommonOpts& o, const std::string& point_text,
                   std::ostream& out, std::ostream& err) {
  glnz::SymBasis basis = make_basis(o.sym_decls);
  warn_if_numerically_dependent(basis);
  glnz::SymPoint x = parse_point_arg(point_text, basis, o.n);
  glnz::OrbitInvariant inv = glnz::invariant_of(x);
  glnz::RatAffineSpace fx = glnz::minimal_space(x);
  json j{{"n", o.n},
         {"rank", inv.rank()},
         {"dim_Fx", fx.dim()},
         {"d", glnz::to_string(inv.d())},
         {"c", glnz::to_string(inv.c)},
         {"G", lattice_json(inv.group.lattice)},
         {"Fx", space_json(fx)}};
  out << j.dump() << "\n";
  if (o.verbose)
    err << "rank " << inv.rank() << ", dim F_x " << fx.dim() << ", d "
        << inv.d() << ", c " << inv.c << "\n";
  return kExitOk;
}

int cmd_equiv(const CommonOpts& o, const std::string& xt, const std::string& yt,
              std::ostream& out, std::ostream& err) {
  glnz::SymBasis basis = make_basis(o.sym_decls);
  warn_if_numerically_dependent(basis);
  glnz::SymPoint x = parse_point_arg(xt, basis, o.n);
  glnz::SymPoint y = parse_point_arg(yt, basis, o.n);
  glnz::OrbitInvariant ix = glnz::invariant_of(x);
  glnz::OrbitInvariant iy = glnz::invariant_of(y);
  if (!(ix == iy)) {
    std::string reason;
    if (!(ix.group == iy.group))
      reason = "G: " + lattice_compact(ix.group.lattice) + " ≠ " +
               lattice_compact(iy.group.lattice);
    else
      reason = "c: " + glnz::to_string(ix.c) + " ≠ " +
               glnz::to_string(iy.c);
    json j{{"equivalent", false}, {"reason", reason}};
    out << j.dump() << "\n";
    if (o.verbose) err << "not equivalent (" << reason << ")\n";
    return kExitNotEquivalent;
  }
  auto w = glnz::witness(x, y);
  glnz::detail::internal_check(w.has_value(), "equiv: missing witness");
  json j{{"equivalent", true}, {"witness", witness_json(*w)}};
  out << j.dump() << "\n";
  if (o.verbose) err << "equivalent\n";
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& witness_file,
               const std::string& xt, const std::string& yt, std::ostream& out,
               std::ostream& err) {
  glnz::SymBasis basis = make_basis(o.sym_decls);
  glnz::SymPoint x = parse_point_arg(xt, basis, o.n);
  glnz::SymPoint y = parse_point_arg(yt, basis, o.n);
  std::ifstream in(witness_file);
  if (!in) throw glnz::Error("cannot open witness file: " + witness_file);
  json jw;
  try {
    in >> jw;
  } catch (const std::exception& e) {
    throw glnz::ParseError(std::string("witness file: ") + e.what());
  }
  glnz::AffineWitness g = witness_from_json(jw);
  if (g.dim() != o.n)
    throw glnz::DimensionMismatch("witness dimension does not match -n");
  bool ok = glnz::verify_witness(g, x, y);
  json j{{"valid", ok}};
  out << j.dump() << "\n";
  if (o.verbose) err << (ok ? "valid witness\n" : "invalid witness\n");
  return ok ? kExitOk : kExitNotEquivalent;
}

int cmd_canon(const CommonOpts& o, std::size_t e, const std::string& d,
              const std::string& c, std::ostream& out, std::ostream& err) {
  glnz::SpaceInvariants t{e, glnz::Int(d), glnz::Int(c)};
  auto [f, p] = glnz::canonical_space(t, o.n);
  glnz::RatVec rep(o.n, glnz::Rat(0));
  for (std::size_t j = e; j < o.n; ++j) rep[j] = glnz::make_rat(p, t.d);
  json j{{"n", o.n},
         {"e", e},
         {"d", d},
         {"c", c},
         {"p", glnz::to_string(p)},
         {"space", space_json(f)},
         {"representative", glnz::format_point(glnz::rational_sym_point(rep))}};
  out << j.dump() << "\n";
  if (o.verbose) err << "p = " << p << "\n";
  return kExitOk;
}

int cmd_count(const CommonOpts& o, const std::string& d_str, std::ostream& out,
              std::ostream& err) {
  glnz::Int d(d_str);
  if (d < 1) throw glnz::Error("count: d must be positive");
  // the rank-n group (1/d)Z + a_1 Z + ... + a_{n-1} Z over synthesized
  // independent symbols
  glnz::SymBasis basis;
  for (std::size_t i = 1; i < o.n; ++i) {
    basis.symbols.push_back("a" + std::to_string(i));
    basis.values.push_back(std::nan(""));
  }
  std::vector<glnz::RatVec> gens;
  glnz::RatVec e0(o.n, glnz::Rat(0));
  e0[0] = glnz::make_rat(1, d);
  gens.push_back(e0);
  for (std::size_t i = 1; i < o.n; ++i) {
    glnz::RatVec ei(o.n, glnz::Rat(0));
    ei[i] = 1;
    gens.push_back(ei);
  }
  glnz::GroupInvariant g{basis, glnz::lattice_canon(gens, o.n)};
  glnz::OrbitCount cnt = glnz::count_orbits(g, o.n);
  json reps = json::array();
  for (const auto& [c, rep] : cnt.representatives)
    reps.push_back(json{{"c", glnz::to_string(c)},
                        {"point", glnz::format_point(rep)}});
  json j{{"d", d_str},
         {"n", o.n},
         {"count", glnz::to_string(cnt.count)},
         {"symbols", basis.symbols},
         {"representatives", reps}};
  out << j.dump() << "\n";
  if (o.verbose) err << "count " << cnt.count << "\n";
  return kExitOk;
}

int cmd_space(const CommonOpts& o, const std::vector<std::string>& eq_texts,
              std::ostream& out, std::ostream& err) {
  std::vector<std::pair<glnz::RatVec, glnz::Rat>> eqs;
  for (const std::string& t : eq_texts)
    eqs.push_back(glnz::parse_equation(t, o.n));
  glnz::RatAffineSpace f = glnz::space_from_equations(o.n, eqs);
  json j{{"n", o.n},
         {"e", f.dim()},
         {"d", glnz::to_string(f.d())},
         {"c", glnz::to_string(f.c())},
         {"space", space_json(f)}};
  out << j.dump() << "\n";
  if (o.verbose)
    err << "(e, d, c) = (" << f.dim() << ", " << f.d() << ", " << f.c()
        << ")\n";
  return kExitOk;
}

int cmd_oracle_bfs(const CommonOpts& o, const std::string& point_text,
                   int depth, const std::string& bound,
                   std::size_t node_cap, std::ostream& out, std::ostream&) {
  glnz::SymBasis basis;  // the search oracle is rational-only
  glnz::SymPoint p = parse_point_arg(point_text, basis, o.n);
  glnz::SearchBudget b;
  b.max_word_length = depth;
  b.coordinate_bound = glnz::parse_rat(bound);
  b.node_cap = node_cap;
  glnz::OrbitSample s = glnz::bfs_orbit(p.rational_coords(), b);
  json pts = json::array();
  for (const glnz::RatVec& v : s.points)
    pts.push_back(glnz::format_point(glnz::rational_sym_point(v)));
  json j{{"complete", s.complete}, {"count", s.points.size()}, {"points", pts}};
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_oracle_n1(const std::string& rat_text, std::ostream& out) {
  glnz::Rat v = glnz::parse_rat(rat_text);
  auto [d, c] = glnz::n1_classify(v);
  json j{{"d", glnz::to_string(d)}, {"c", glnz::to_string(c)}};
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_oracle_cdef(const CommonOpts& o, const std::vector<std::string>& eqs,
                    const std::string& cap, const std::string& bound,
                    std::ostream& out) {
  std::vector<std::pair<glnz::RatVec, glnz::Rat>> parsed;
  for (const std::string& t : eqs) parsed.push_back(glnz::parse_equation(t, o.n));
  glnz::RatAffineSpace f = glnz::space_from_equations(o.n, parsed);
  auto c = glnz::c_by_definition(f, glnz::Int(cap), glnz::Int(bound));
  json j{{"c", c ? json(glnz::to_string(*c)) : json(nullptr)}};
  out << j.dump() << "\n";
  return kExitOk;
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

int cmd_batch(std::istream& in, std::ostream& out, std::ostream& err) {
  std::string line;
  while (std::getline(in, line)) {
    // shell-like tokenization with single/double quotes
    std::vector<std::string> args;
    std::string cur;
    bool have = false;
    char quote = '\0';
    for (char ch : line) {
      if (quote) {
        if (ch == quote)
          quote = '\0';
        else
          cur += ch;
      } else if (ch == '\'' || ch == '"') {
        quote = ch;
        have = true;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        if (have || !cur.empty()) args.push_back(cur);
        cur.clear();
        have = false;
      } else {
        cur += ch;
      }
    }
    if (have || !cur.empty()) args.push_back(cur);
    if (args.empty()) continue;
    std::ostringstream line_out;
    int code = run_command(args, line_out, err);
    std::string s = line_out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (s.empty()) s = json{{"error", "no output"}, {"exit", code}}.dump();
    out << s << "\n";
  }
  return kExitOk;
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact orbit classification under the integer affine group"};
  app.require_subcommand(1);

  CommonOpts inv_o, eqv_o, ver_o, can_o, cnt_o, spc_o, bfs_o, cdef_o;
  std::string inv_point, eqv_x, eqv_y, ver_file, ver_x, ver_y;
  std::size_t can_e = 0;
  std::string can_d = "1", can_c = "1", cnt_d = "1";
  std::vector<std::string> spc_eqs, cdef_eqs;
  std::string bfs_point, bfs_bound = "3", n1_rat, cdef_cap = "10",
              cdef_bound = "2";
  int bfs_depth = 6;
  std::size_t bfs_cap = 1000000;

  CLI::App* inv = app.add_subcommand("invariants",
                                     "complete invariant of a point");
  add_common(inv, inv_o);
  inv->add_option("point", inv_point, "point expression")->required();

  CLI::App* eqv = app.add_subcommand("equiv", "decide orbit equivalence");
  add_common(eqv, eqv_o);
  eqv->add_option("x", eqv_x, "first point")->required();
  eqv->add_option("y", eqv_y, "second point")->required();

  CLI::App* ver = app.add_subcommand("verify", "check a witness file");
  add_common(ver, ver_o);
  ver->add_option("--witness", ver_file, "witness JSON file")->required();
  ver->add_option("x", ver_x, "first point")->required();
  ver->add_option("y", ver_y, "second point")->required();

  CLI::App* can = app.add_subcommand("canon", "canonical space of a triple");
  add_common(can, can_o);
  can->add_option("--e", can_e, "space dimension")->required();
  can->add_option("--d", can_d, "minimal denominator d")->required();
  can->add_option("--c", can_c, "invariant c")->required();

  CLI::App* cnt = app.add_subcommand("count",
                                     "orbits sharing a rank-n group of "
                                     "rational denominator d");
  add_common(cnt, cnt_o);
  cnt->add_option("--d", cnt_d, "rational denominator d")->required();

  CLI::App* spc = app.add_subcommand("space", "classify a rational affine space");
  add_common(spc, spc_o);
  spc->add_option("equations", spc_eqs, "equations like \"5*y2 = 3\"")
      ->required();

  CLI::App* orc = app.add_subcommand("oracle", "desk-scale ground-truth tools");
  orc->require_subcommand(1);
  CLI::App* bfs = orc->add_subcommand("bfs", "bounded orbit search");
  add_common(bfs, bfs_o);
  bfs->add_option("point", bfs_point, "rational point")->required();
  bfs->add_option("--budget-depth", bfs_depth, "maximum word length");
  bfs->add_option("--budget-bound", bfs_bound, "coordinate magnitude cap");
  bfs->add_option("--node-cap", bfs_cap, "node cap");
  CLI::App* n1 = orc->add_subcommand("n1", "closed-form line classifier");
  n1->add_option("value", n1_rat, "rational number")->required();
  CLI::App* cdef = orc->add_subcommand("cdef",
                                       "literal minimum-denominator search");
  add_common(cdef, cdef_o);
  cdef->add_option("equations", cdef_eqs, "hyperplane equations")->required();
  cdef->add_option("--cap", cdef_cap, "denominator cap");
  cdef->add_option("--coord-bound", cdef_bound, "coordinate magnitude cap");

  CLI::App* bat = app.add_subcommand("batch",
                                     "read one query per line from stdin");

  std::vector<const char*> argv;
  argv.push_back("glnz");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(inv_o, inv_point, out, err);
    if (eqv->parsed()) return cmd_equiv(eqv_o, eqv_x, eqv_y, out, err);
    if (ver->parsed())
      return cmd_verify(ver_o, ver_file, ver_x, ver_y, out, err);
    if (can->parsed()) return cmd_canon(can_o, can_e, can_d, can_c, out, err);
    if (cnt->parsed()) return cmd_count(cnt_o, cnt_d, out, err);
    if (spc->parsed()) return cmd_space(spc_o, spc_eqs, out, err);
    if (orc->parsed()) {
      if (bfs->parsed())
        return cmd_oracle_bfs(bfs_o, bfs_point, bfs_depth, bfs_bound, bfs_cap,
                              out, err);
      if (n1->parsed()) return cmd_oracle_n1(n1_rat, out);
      if (cdef->parsed())
        return cmd_oracle_cdef(cdef_o, cdef_eqs, cdef_cap, cdef_bound, out);
    }
    if (bat->parsed()) return cmd_batch(std::cin, out, err);
  } catch (const glnz::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitParseError;
  } catch (const glnz::Error& e) {
    err << "error: " << e.what() << "\n";
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitSemanticError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitSemanticError;
  }
  return kExitParseError;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}
