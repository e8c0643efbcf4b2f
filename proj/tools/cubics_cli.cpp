// Command-line front end for the plane-cubics toolkit.
//
// Exit codes: 0 success, 1 usage, 2 expression parse error,
// 3 numeric/computation failure, 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>

#include "cubics/cubics.hpp"

using namespace cubics;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerify = 4;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_complex(CF z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string fmt_cpoint(const PPoint<CF>& p) {
  return "(" + fmt_complex(p[0]) + " : " + fmt_complex(p[1]) + " : " + fmt_complex(p[2]) + ")";
}

json json_cpoint(const PPoint<CF>& p) {
  json a = json::array();
  for (int i = 0; i < 3; ++i) a.push_back({{"re", p[i].real()}, {"im", p[i].imag()}});
  return a;
}

std::string matrix_text(const Mat3<Eis>& m) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    s += "  [ ";
    for (int j = 0; j < 3; ++j) s += to_string(m[i][j]) + (j < 2 ? ", " : "");
    s += " ]\n";
  }
  return s;
}

json json_matrix(const Mat3<Eis>& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(to_string(m[i][j]));
    rows.push_back(row);
  }
  return rows;
}

json json_cmatrix(const Mat3<CF>& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back({{"re", m[i][j].real()}, {"im", m[i][j].imag()}});
    rows.push_back(row);
  }
  return rows;
}

struct CheckList {
  bool as_json;
  json checks = json::array();
  bool all_ok = true;

  void add(const std::string& id, bool ok, const std::string& detail) {
    all_ok = all_ok && ok;
    if (as_json)
      checks.push_back({{"id", id}, {"ok", ok}, {"detail", detail}});
    else
      std::cout << (ok ? "[ok]   " : "[FAIL] ") << id << ": " << detail << "\n";
  }
};

TernaryForm<Eis> parse_or_exit(const std::string& text) {
  try {
    return parse_cubic(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kExitParse);
  }
}

int cmd_classify(const std::string& expr, bool as_json) {
  TernaryForm<Eis> f = parse_or_exit(expr);
  CubicType type = classify(f);
  SingularLocus loc = singular_points(f);
  int dim = sl3_orbit_dim(f);
  if (as_json) {
    json out{{"type", to_string(type)}, {"orbit_dim", dim}};
    json sing{{"infinite", loc.infinite}};
    if (loc.infinite) {
      const auto& w = *loc.witness_line;
      sing["witness_line"] = to_string(w[0]) + "*x0 + " + to_string(w[1]) + "*x1 + " +
                             to_string(w[2]) + "*x2";
    } else {
      json pts = json::array();
      for (const auto& p : loc.points) pts.push_back(point_text(p));
      sing["points"] = pts;
    }
    out["singular_locus"] = sing;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "type: " << to_string(type) << "\n";
    std::cout << "orbit-dim: " << dim << "\n";
    if (loc.infinite) {
      const auto& w = *loc.witness_line;
      std::cout << "singular-locus: a whole line, " << to_string(w[0]) << "*x0 + "
                << to_string(w[1]) << "*x1 + " << to_string(w[2]) << "*x2 = 0\n";
    } else {
      std::cout << "singular-locus: " << loc.points.size() << " point(s)\n";
      for (const auto& p : loc.points) std::cout << "  " << point_text(p) << "\n";
    }
  }
  return 0;
}

int cmd_hessian(const std::string& expr, bool as_json) {
  TernaryForm<Eis> h = hessian(parse_or_exit(expr));
  if (as_json) {
    json slots = json::array();
    for (const auto& [e, s] : cubic_slots(h))
      slots.push_back({{"exponents", {e[0], e[1], e[2]}}, {"coefficient", s}});
    std::cout << json{{"hessian", cubic_text(h)}, {"slots", slots}}.dump(2) << "\n";
  } else {
    std::cout << cubic_text(h) << "\n";
  }
  return 0;
}

int cmd_orbit_dim(const std::string& expr, bool as_json) {
  int d = sl3_orbit_dim(parse_or_exit(expr));
  if (as_json)
    std::cout << json{{"orbit_dim", d}}.dump(2) << "\n";
  else
    std::cout << d << "\n";
  return 0;
}

int cmd_flexes(const std::string& expr, std::uint64_t seed, double tol, bool as_json) {
  TernaryForm<Eis> f = parse_or_exit(expr);
  FlexResult fr = flexes_numeric(embed(f), seed, tol);
  if (as_json) {
    json out{{"dim", fr.dim}, {"multiplicity_warning", fr.multiplicity_warning}};
    json pts = json::array();
    for (const auto& p : fr.points)
      pts.push_back({{"point", json_cpoint(p.point)},
                     {"residual_f", p.residual_f},
                     {"residual_hessian", p.residual_h},
                     {"singular", p.singular},
                     {"converged", p.converged}});
    out["points"] = pts;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (fr.dim == 1) {
    std::cout << "flex locus is one-dimensional (reducible cubic)\n";
    return 0;
  }
  std::cout << fr.points.size() << " points";
  if (fr.multiplicity_warning) std::cout << " (multiplicity warning: nearly coincident candidates)";
  std::cout << "\n";
  for (const auto& p : fr.points) {
    std::cout << "  " << fmt_cpoint(p.point) << "  |f|=" << fmt_double(p.residual_f)
              << " |H|=" << fmt_double(p.residual_h) << (p.singular ? "  [singular]" : "") << "\n";
  }
  return 0;
}

int cmd_normalize(const std::string& expr, std::uint64_t seed, double tol, bool as_json) {
  TernaryForm<Eis> f = parse_or_exit(expr);
  NormalFormResult r = to_hesse_normal_form(embed(f), seed, tol);
  std::string lambda = r.fit.infinity ? "inf" : fmt_complex(r.fit.lambda);
  if (as_json) {
    std::cout << json{{"lambda", lambda},
                      {"residual", r.fit.residual},
                      {"transform", json_cmatrix(r.transform.m)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "lambda = " << lambda << "\n";
    std::cout << "residual = " << fmt_double(r.fit.residual) << "\n";
    std::cout << "transform:\n";
    for (int i = 0; i < 3; ++i) {
      std::cout << "  [ ";
      for (int j = 0; j < 3; ++j) std::cout << fmt_complex(r.transform.m[i][j]) << (j < 2 ? ", " : "");
      std::cout << " ]\n";
    }
  }
  return 0;
}

int cmd_hesse_verify(bool dump_incidence, bool as_json) {
  CheckList checks{as_json};
  const HesseConfig& cfg = incidence_report();

  int total = 0;
  for (int l = 0; l < 12; ++l)
    for (int p = 0; p < 9; ++p) total += cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
  checks.add("config:lines", true, "12 lines from the four singular members");
  checks.add("config:incidence-count", total == 36, "total incidence " + std::to_string(total) + " (want 36)");

  bool per_line = true, per_flex = true;
  for (int l = 0; l < 12; ++l) {
    int c = 0;
    for (int p = 0; p < 9; ++p) c += cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
    per_line = per_line && c == 3;
  }
  for (int p = 0; p < 9; ++p) {
    int c = 0;
    for (int l = 0; l < 12; ++l) c += cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
    per_flex = per_flex && c == 4;
  }
  checks.add("config:three-per-line", per_line, "every line carries exactly 3 flexes");
  checks.add("config:four-per-flex", per_flex, "every flex lies on exactly 4 lines");

  int agree = 0, collinear_both = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c) {
        bool proj = collinear(cfg.flexes[static_cast<std::size_t>(a)], cfg.flexes[static_cast<std::size_t>(b)],
                              cfg.flexes[static_cast<std::size_t>(c)]);
        bool aff = collinear_f3(point_at(a), point_at(b), point_at(c));
        agree += proj == aff;
        collinear_both += proj && aff;
      }
  checks.add("config:collinearity-agreement", agree == 84 && collinear_both == 12,
             std::to_string(agree) + "/84 triples agree, " + std::to_string(collinear_both) +
                 " collinear (want 12)");

  checks.add("pencil:evaluation-rank", flex_evaluation_rank() == 8, "flex evaluation matrix has rank 8");
  auto basis = cubics_through_flexes();
  bool kernel_ok = basis.size() == 2;
  if (kernel_ok) {
    for (const auto& b : basis) kernel_ok = kernel_ok && in_pencil(b).has_value();
  }
  checks.add("pencil:kernel", kernel_ok, "cubics through the nine flexes = the pencil (dimension 2)");

  int o = HesseConfig::index(0, 0);
  bool law = true;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      PointF3 pa = point_at(a), pb = point_at(b);
      law = law && flex_add(a, b, o) == point_index({pa[0] + pb[0], pa[1] + pb[1]});
    }
  for (int a = 0; a < 9; ++a) law = law && flex_add(flex_add(a, a, o), a, o) == o;
  checks.add("flexes:group-law", law, "incidence addition matches F3^2 and has 3-torsion");

  Eis w = Eis::omega();
  bool smoothness = classify(pencil_member(PencilParam::inf())) == CubicType::Triangle;
  for (const Eis& bad : {Eis(-3), Eis(-3) * w, Eis(-3) * w * w})
    smoothness = smoothness && classify(pencil_member(PencilParam::finite(bad))) == CubicType::Triangle;
  smoothness = smoothness && classify(pencil_member(PencilParam::finite(Eis(1)))) == CubicType::Elliptic;
  checks.add("pencil:singular-members", smoothness,
             "exactly the four known parameters give triangles");

  if (dump_incidence) {
    if (as_json) {
      json m = json::array();
      for (int l = 0; l < 12; ++l) {
        json row = json::array();
        for (int p = 0; p < 9; ++p)
          row.push_back(static_cast<int>(cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)]));
        m.push_back(row);
      }
      checks.checks.push_back({{"id", "config:incidence-table"}, {"table", m}});
    } else {
      std::cout << "incidence table (rows: lines, columns: flexes t_00..t_22):\n";
      for (int l = 0; l < 12; ++l) {
        std::cout << "  ";
        for (int p = 0; p < 9; ++p)
          std::cout << cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] << " ";
        std::cout << "\n";
      }
    }
  }
  if (as_json) std::cout << json{{"checks", checks.checks}, {"ok", checks.all_ok}}.dump(2) << "\n";
  return checks.all_ok ? 0 : kExitVerify;
}

int cmd_group_order(bool as_json) {
  int n = HesGroupTable::get().order();
  if (as_json)
    std::cout << json{{"order", n}}.dump(2) << "\n";
  else
    std::cout << n << "\n";
  return 0;
}

int cmd_group_stabilizer(int i, int j, bool as_json) {
  if (i < 0 || i > 2 || j < 0 || j > 2) {
    std::cerr << "flex indices must lie in {0,1,2}\n";
    return kExitUsage;
  }
  const HesGroupTable& t = HesGroupTable::get();
  auto stab = t.stabilizer(i, j);
  std::vector<AffMap3> affs;
  for (int idx : stab) affs.push_back(t.at(idx).theta);
  bool is_sl2 = sl2f3_recognize(affs);
  if (as_json) {
    json elems = json::array();
    for (int idx : stab)
      elems.push_back({{"matrix", json_matrix(t.at(idx).transform.m)}, {"theta", to_string(t.at(idx).theta)}});
    std::cout << json{{"order", stab.size()}, {"binary_tetrahedral", is_sl2}, {"elements", elems}}.dump(2)
              << "\n";
  } else {
    std::cout << "stabilizer of t_" << i << j << ": order " << stab.size()
              << (is_sl2 ? " (binary tetrahedral, SL2(F3))" : "") << "\n";
    for (int idx : stab) std::cout << matrix_text(t.at(idx).transform.m) << "  theta: " << to_string(t.at(idx).theta) << "\n";
  }
  return 0;
}

int cmd_group_theta(bool all, bool as_json) {
  const HesGroupTable& t = HesGroupTable::get();
  json rows = json::array();
  if (all) {
    for (const auto& e : t.elements()) {
      if (as_json)
        rows.push_back({{"matrix", json_matrix(e.transform.m)}, {"theta", to_string(e.theta)}});
      else
        std::cout << matrix_text(e.transform.m) << "  theta: " << to_string(e.theta) << "\n";
    }
  } else {
    auto gens = hes_generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& e = t.at(*t.find(gens[k]));
      if (as_json)
        rows.push_back({{"generator", "g" + std::to_string(k + 1)},
                        {"matrix", json_matrix(e.transform.m)},
                        {"theta", to_string(e.theta)}});
      else
        std::cout << "g" << k + 1 << ":\n"
                  << matrix_text(e.transform.m) << "  theta: " << to_string(e.theta) << "\n\n";
    }
  }
  if (as_json) std::cout << json{{"theta", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_group_realize(const std::string& text, bool as_json) {
  AffMap3 sigma;
  try {
    sigma = parse_affmap(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (sigma.det() == F3(0)) {
    std::cerr << "the linear part is singular\n";
    return kExitUsage;
  }
  auto g = realize_collineation(sigma);
  if (as_json) {
    json out{{"collineation", to_string(sigma)}, {"realizable", g.has_value()}};
    if (g) out["matrix"] = json_matrix(g->m);
    std::cout << out.dump(2) << "\n";
  } else if (g) {
    std::cout << "realizable:\n" << matrix_text(g->m);
  } else {
    std::cout << "not realizable (determinant " << sigma.det().r << " collineation)\n";
  }
  return 0;
}

int cmd_group_h12(const std::string& lambda_text, int samples, std::uint64_t seed, bool as_json) {
  Eis lambda;
  try {
    lambda = parse_scalar(lambda_text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  PencilParam p = PencilParam::finite(lambda);
  if (classify(pencil_member(p)) != CubicType::Elliptic) {
    std::cerr << "lambda = " << to_string(lambda) << " is a singular member; pick an elliptic one\n";
    return kExitUsage;
  }
  const HesGroupTable& t = HesGroupTable::get();
  int disagreements = 0;
  for (const auto& e : t.elements()) {
    H12Check c = h12_check(e.transform, p);
    disagreements += c.g_in_hes != c.image_in_pencil;
  }
  std::mt19937_64 rng(seed);
  int outside = 0;
  while (outside < samples) {
    PTransform<Eis> g(random_unimodular_int(rng));
    if (t.find(g)) continue;
    H12Check c = h12_check(g, p);
    disagreements += c.g_in_hes != c.image_in_pencil;
    ++outside;
  }
  bool ok = disagreements == 0;
  if (as_json)
    std::cout << json{{"lambda", to_string(lambda)},
                      {"group_elements", t.order()},
                      {"non_members", samples},
                      {"disagreements", disagreements},
                      {"ok", ok}}
                     .dump(2)
              << "\n";
  else
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << "group membership and pencil preservation agree on "
              << t.order() << " group elements and " << samples << " non-members\n";
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric toolkit for plane cubic curves"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string expr;
  std::uint64_t seed = 0;
  double tol = 1e-6;

  auto* c_classify = app.add_subcommand("classify", "Classify a cubic and report its singular locus");
  c_classify->add_option("cubic", expr, "Cubic expression")->required();

  auto* c_hessian = app.add_subcommand("hessian", "Hessian covariant of a cubic");
  c_hessian->add_option("cubic", expr, "Cubic expression")->required();

  auto* c_orbit = app.add_subcommand("orbit-dim", "Dimension of the SL3 orbit");
  c_orbit->add_option("cubic", expr, "Cubic expression")->required();

  auto* c_flexes = app.add_subcommand("flexes", "Numeric flex locus");
  c_flexes->add_option("cubic", expr, "Cubic expression")->required();
  c_flexes->add_option("--seed", seed, "Random seed for the coordinate change");
  c_flexes->add_option("--tol", tol, "Deduplication tolerance");

  auto* c_normalize = app.add_subcommand("normalize", "Transform a smooth cubic into the Hesse pencil");
  c_normalize->add_option("cubic", expr, "Cubic expression")->required();
  c_normalize->add_option("--seed", seed, "Random seed");
  c_normalize->add_option("--tol", tol, "Pencil membership tolerance");

  auto* c_hesse = app.add_subcommand("hesse", "Hesse configuration queries");
  bool dump_incidence = false;
  auto* c_verify = c_hesse->add_subcommand("verify", "Verify the flex/line configuration");
  c_verify->add_flag("--dump-incidence", dump_incidence, "Emit the 12x9 incidence table");
  c_hesse->require_subcommand(1);

  auto* c_group = app.add_subcommand("group", "Hessian group queries");
  c_group->require_subcommand(1);
  c_group->add_subcommand("order", "Order of the group");
  int si = 0, sj = 0;
  auto* c_stab = c_group->add_subcommand("stabilizer", "Stabilizer of a flex");
  c_stab->add_option("i", si, "First flex index")->required();
  c_stab->add_option("j", sj, "Second flex index")->required();
  bool theta_all = false;
  auto* c_theta = c_group->add_subcommand("theta", "Group elements and their affine images");
  c_theta->add_flag("--all", theta_all, "List all 216 elements");
  std::string affmap_text;
  auto* c_realize = c_group->add_subcommand("realize", "Realize an AG(2,3) collineation projectively");
  c_realize->add_option("affmap", affmap_text, "Affine map like \"[[1,0],[0,1]] + (2,1)\"")->required();
  std::string lambda_text = "1";
  int samples = 50;
  auto* c_h12 = c_group->add_subcommand("h12", "Group membership vs pencil preservation");
  c_h12->add_option("--lambda", lambda_text, "Pencil parameter (elliptic member)");
  c_h12->add_option("--samples", samples, "Number of random non-members");
  c_h12->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  bool as_json = format == "json";
  try {
    if (*c_classify) return cmd_classify(expr, as_json);
    if (*c_hessian) return cmd_hessian(expr, as_json);
    if (*c_orbit) return cmd_orbit_dim(expr, as_json);
    if (*c_flexes) return cmd_flexes(expr, seed, tol, as_json);
    if (*c_normalize) return cmd_normalize(expr, seed, tol, as_json);
    if (*c_verify) return cmd_hesse_verify(dump_incidence, as_json);
    if (*c_group) {
      if (c_group->get_subcommand("order")->parsed()) return cmd_group_order(as_json);
      if (c_stab->parsed()) return cmd_group_stabilizer(si, sj, as_json);
      if (c_theta->parsed()) return cmd_group_theta(theta_all, as_json);
      if (c_realize->parsed()) return cmd_group_realize(affmap_text, as_json);
      if (c_h12->parsed()) return cmd_group_h12(lambda_text, samples, seed, as_json);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnsupportedExtension& e) {
    std::cerr << "exact computation failed: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
