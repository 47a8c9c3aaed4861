#include "knotlike/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "knotlike/alexander.hpp"
#include "knotlike/complex_io.hpp"
#include "knotlike/error.hpp"
#include "knotlike/homology.hpp"
#include "knotlike/localequiv.hpp"
#include "knotlike/recipe.hpp"
#include "knotlike/standard.hpp"

namespace knotlike {

namespace {

std::string bracketed(const Params& p) { return "[" + format_params(p) + "]"; }

std::string format_phi(const std::map<int, int>& phi) {
  std::string out = "{";
  for (const auto& [j, v] : phi) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(j) + ": " + std::to_string(v);
  }
  return out + "}";
}

Complex load(const std::string& path) { return parse_complex_file(read_text_file(path)); }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

// Representative of a file (reduced and normalized first) or a recipe.
RepResult representative(const std::string& file, const std::string& expr) {
  if (!expr.empty()) return eval_recipe(expr);
  return standard_rep(normalize(load(file)));
}

nlohmann::ordered_json invariants_json(const Params& p) {
  nlohmann::ordered_json j;
  j["rep"] = p;
  nlohmann::ordered_json phi_obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : phi(p)) phi_obj[std::to_string(k)] = v;
  j["phi"] = phi_obj;
  j["tau"] = tau_of(p);
  j["P"] = P_of(p);
  const int n = N_of(p);
  j["N"] = n;
  if (n % 2 == 0) {
    j["gc_lower"] = n / 2;
  } else {
    j["gc_lower"] = gc_lower(p);
  }
  j["uc_lower"] = uc_lower(p);
  j["symmetric"] = is_symmetric(p);
  return j;
}

std::string format_number(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local equivalence classes of knot-like complexes over F2[U,V]/(UV)", "knotlike"};
  app.require_subcommand(1);

  std::string file_a, file_b, output, params_text, expr, poly_text;
  int m = 0, p = 0, q = 0;
  bool json = false, u_only = false, v_only = false, trace = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a complex file");
  validate_cmd->add_option("file", file_a, "complex file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Cancel unit arrows");
  reduce_cmd->add_option("file", file_a, "complex file")->required();
  reduce_cmd->add_option("-o,--output", output, "output file");

  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two complexes");
  tensor_cmd->add_option("a", file_a, "first complex file")->required();
  tensor_cmd->add_option("b", file_b, "second complex file")->required();
  tensor_cmd->add_option("-o,--output", output, "output file");

  auto* dual_cmd = app.add_subcommand("dual", "Dual complex");
  dual_cmd->add_option("file", file_a, "complex file")->required();
  dual_cmd->add_option("-o,--output", output, "output file");

  auto* std_cmd = app.add_subcommand("std", "Write the standard complex C(PARAMS)");
  std_cmd->add_option("params", params_text, "comma-separated parameters")->required()->allow_extra_args(false);
  std_cmd->add_option("-o,--output", output, "output file");

  auto* rep_cmd = app.add_subcommand("rep", "Standard representative");
  rep_cmd->add_option("file", file_a, "complex file");
  rep_cmd->add_option("--expr", expr, "knot recipe");
  rep_cmd->add_flag("--trace", trace, "print the candidate tests per position");

  auto* inv_cmd = app.add_subcommand("inv", "Invariants of the standard representative");
  inv_cmd->add_option("file", file_a, "complex file");
  inv_cmd->add_option("--expr", expr, "knot recipe");
  inv_cmd->add_flag("--json", json, "JSON output");

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two complexes in the local order");
  cmp_cmd->add_option("a", file_a, "first complex file")->required();
  cmp_cmd->add_option("b", file_b, "second complex file")->required();

  auto* shift_cmd = app.add_subcommand("shift", "Apply Sh_m to standard parameters");
  shift_cmd->add_option("m", m, "shift index")->required();
  shift_cmd->add_option("params", params_text, "comma-separated parameters")->required();
  auto* u_flag = shift_cmd->add_flag("--u", u_only, "shift U-arrows only");
  shift_cmd->add_flag("--v", v_only, "shift V-arrows only")->excludes(u_flag);

  auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomials");
  alex_cmd->require_subcommand(1);
  auto* torus_cmd = alex_cmd->add_subcommand("torus", "Torus knot T(P,Q)");
  torus_cmd->add_option("p", p, "P")->required();
  torus_cmd->add_option("q", q, "Q")->required();
  auto* cable_cmd = alex_cmd->add_subcommand("cable", "(P,Q)-cable of a knot with polynomial POLY");
  cable_cmd->add_option("p", p, "P")->required();
  cable_cmd->add_option("q", q, "Q")->required();
  cable_cmd->add_option("poly", poly_text, "Alexander polynomial of the companion")->required();

  auto* lspace_cmd = app.add_subcommand("lspace", "Staircase of an L-space knot");
  lspace_cmd->add_option("poly", poly_text, "Alexander polynomial")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    for (auto* c : {rep_cmd, inv_cmd}) {
      if (c->parsed() && file_a.empty() == expr.empty()) {
        throw CLI::ValidationError(c->get_name(), "give exactly one of FILE or --expr");
      }
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      const Complex c = load(file_a);
      out << "valid: " << c.size() << " generators, " << c.num_entries() << " differential entries\n";
      out << "reduced: " << (c.is_reduced() ? "yes" : "no") << "\n";
      const Complex r = c.is_reduced() ? c : reduce(c);
      const KnotLikeReport report = check_knot_like(r, true);
      if (report.is_knot_like) {
        out << "knot-like: yes, shift (" << report.shift_u << ", " << report.shift_v << ")\n";
      } else {
        out << "knot-like: no";
        for (const auto& reason : report.reasons) out << "; " << reason;
        out << "\n";
      }
    } else if (reduce_cmd->parsed()) {
      emit(serialize_complex(reduce(load(file_a))), output, out);
    } else if (tensor_cmd->parsed()) {
      emit(serialize_complex(tensor(load(file_a), load(file_b))), output, out);
    } else if (dual_cmd->parsed()) {
      emit(serialize_complex(dual(load(file_a))), output, out);
    } else if (std_cmd->parsed()) {
      emit(serialize_complex(build_standard(parse_params(params_text))), output, out);
    } else if (rep_cmd->parsed()) {
      const RepResult r = representative(file_a, expr);
      out << bracketed(r.params) << "\n";
      if (trace) {
        for (const auto& pos : r.trace) {
          out << "a" << pos.position << ":";
          for (const auto& t : pos.tests) out << " " << t.candidate << (t.success ? "+" : "-");
          out << " -> " << pos.chosen << "\n";
        }
      }
    } else if (inv_cmd->parsed()) {
      const Params rep = representative(file_a, expr).params;
      if (json) {
        out << invariants_json(rep).dump() << "\n";
      } else {
        out << "rep: " << bracketed(rep) << "\n";
        out << "phi: " << format_phi(phi(rep)) << "\n";
        out << "tau: " << tau_of(rep) << "\n";
        out << "P: " << P_of(rep) << "\n";
        out << "N: " << N_of(rep) << "\n";
        out << "gc_lower: " << format_number(gc_lower(rep)) << "\n";
        out << "uc_lower: " << uc_lower(rep) << "\n";
        out << "symmetric: " << (is_symmetric(rep) ? "true" : "false") << "\n";
      }
    } else if (cmp_cmd->parsed()) {
      out << to_string(compare(normalize(load(file_a)), normalize(load(file_b)))) << "\n";
    } else if (shift_cmd->parsed()) {
      const ShiftMode mode = u_only ? ShiftMode::UOnly : v_only ? ShiftMode::VOnly : ShiftMode::Both;
      out << bracketed(shift(parse_params(params_text), m, mode)) << "\n";
    } else if (torus_cmd->parsed()) {
      out << format_poly(torus_delta(p, q)) << "\n";
    } else if (cable_cmd->parsed()) {
      out << format_poly(cable_delta(p, q, parse_poly(poly_text))) << "\n";
    } else if (lspace_cmd->parsed()) {
      const LaurentPoly delta = parse_poly(poly_text);
      out << "c: " << bracketed(staircase_data(delta).c) << "\n";
      out << "rep: " << bracketed(staircase_params(delta)) << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace knotlike
