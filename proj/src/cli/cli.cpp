#include "cayley/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <bit>
#include <map>
#include <random>

#include "cayley/curves/cone.hpp"
#include "cayley/curves/degree.hpp"
#include "cayley/curves/deform.hpp"
#include "cayley/curves/minimal.hpp"
#include "cayley/examples/spec_io.hpp"
#include "cayley/spin7/algebra.hpp"
#include "cayley/spin7/comass.hpp"
#include "cayley/symbolic/suite.hpp"

namespace cayley::cli {

namespace {

using nlohmann::json;
using exterior::Rational;
constexpr const char* kVersion = "0.1.0";

struct Options {
  double tol = -1;
  double h = 1e-4;
  int samples = -1;
  std::uint64_t seed = 0;
  std::string json_path;
  bool exact = true;
  std::string spec_path;
  std::string identity;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void check(const CheckStats& s, bool asserted = true) {
    json j = s.to_json();
    if (!asserted) j["verdict"] = "info";
    checks_.push_back(j);
    if (asserted && !s.pass) pass_ = false;
    std::printf("  %-34s sup %-11.3e mean %-11.3e n %-5d", s.name.c_str(), s.sup, s.mean, s.samples);
    if (s.excluded) std::printf(" excl %-4d", s.excluded);
    std::printf(" %s\n", asserted ? (s.pass ? "PASS" : "FAIL") : "info");
    if (!s.anchor.empty()) std::printf("      %s\n", s.anchor.c_str());
    if (!s.note.empty()) std::printf("      note: %s\n", s.note.c_str());
  }

  void boolean(const std::string& name, const std::string& anchor, bool ok, const std::string& detail = {},
               bool echo = true) {
    json j = {{"name", name}, {"anchor", anchor}, {"verdict", ok ? "pass" : "fail"}};
    if (!detail.empty()) j["detail"] = detail;
    checks_.push_back(j);
    if (!ok) pass_ = false;
    if (!echo) return;
    std::printf("  %-34s %s%s%s\n", name.c_str(), ok ? "PASS" : "FAIL", detail.empty() ? "" : "  ", detail.c_str());
    if (!anchor.empty()) std::printf("      %s\n", anchor.c_str());
  }

  void info(const std::string& name, const json& value, const std::string& text) {
    checks_.push_back({{"name", name}, {"value", value}, {"verdict", "info"}});
    std::printf("  %-34s %s\n", name.c_str(), text.c_str());
  }

  void refuse(const std::string& why) {
    checks_.push_back({{"name", "refused"}, {"verdict", "fail"}, {"detail", why}});
    pass_ = false;
    std::printf("  refused: %s\n", why.c_str());
  }

  bool pass() const { return pass_; }

  json to_json(const Options& o, const json& spec, double seconds) const {
    return {{"schema", 1},   {"version", kVersion}, {"command", command_},         {"spec", spec},
            {"seed", o.seed}, {"exact", o.exact},  {"checks", checks_},           {"verdict", pass_ ? "pass" : "fail"},
            {"timings", {{"total_s", seconds}}}};
  }

 private:
  std::string command_;
  std::vector<json> checks_;
  bool pass_ = true;
};

double pick(double v, double fallback) { return v > 0 ? v : fallback; }
int pick(int v, int fallback) { return v > 0 ? v : fallback; }

examples::ExampleSpec need_spec(const Options& o) {
  if (o.spec_path.empty()) throw UsageError("this command needs --spec PATH");
  return examples::load_spec(o.spec_path);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// ---------------------------------------------------------------- forms

void verify_forms(const Options& o, Report& r) {
  using exterior::Vec;
  const auto t = spin7::build_tables();
  std::array<Vec<Rational>, 4> e{};
  for (int k = 0; k < 4; ++k) {
    e[k].fill(Rational(0));
    e[k][k] = 1;
  }
  bool coord = exterior::evaluate(t.phi, std::span<const Vec<Rational>>(e)) == 1;
  for (const auto& p : t.psi) coord = coord && exterior::evaluate(p, std::span<const Vec<Rational>>(e)) == 0;
  r.boolean("coordinate_cayley_plane", "Phi(e1,e2,e3,e4) = 1 and every psi_m vanishes there (exact)", coord);

  const int n = pick(o.samples, 1000);
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> normal;
  const auto& ft = spin7::float_tables();
  std::vector<double> dev;
  for (int s = 0; s < n; ++s) {
    Eigen::Matrix<double, 8, 4> a;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = normal(rng);
    const Eigen::Matrix<double, 8, 4> q = Eigen::HouseholderQR<Eigen::Matrix<double, 8, 4>>(a).householderQ() *
                                          Eigen::Matrix<double, 8, 4>::Identity();
    double acc = std::pow(spin7::evaluate4(ft.phi, q.col(0), q.col(1), q.col(2), q.col(3)), 2);
    for (const auto& p : ft.psi) acc += std::pow(spin7::evaluate4(p, q.col(0), q.col(1), q.col(2), q.col(3)), 2);
    dev.push_back(std::abs(acc - 1));
  }
  CheckStats id;
  id.name = "phi_psi_norm_identity";
  id.anchor = "Phi^2 + sum_m psi_m^2 = 1 on unit simple 4-vectors";
  id.accumulate(dev, pick(o.tol, 1e-10));
  r.check(id);

  const auto raw = spin7::transcribed_tables();
  const auto rep = spin7::invariance_report(raw, spin7::spin7_basis());
  r.info("transcribed_psi1_audit", rep.first_equivariance_failure,
         rep.psi_equivariant ? "verbatim psi_1 listing is equivariant"
                             : "verbatim psi_1 listing (5137) breaks equivariance: " + rep.first_equivariance_failure);
}

// ---------------------------------------------------------------- algebra

void verify_algebra(const Options& o, Report& r) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& b = spin7::spin7_basis();
  const auto cl = spin7::bracket_closure(b);
  r.boolean("spin7_dimension", "solution space of the Phi-preserving relations", cl.spin7_dim == 21,
            std::to_string(cl.spin7_dim));
  r.boolean("complement_dimension", "pairing complement m", cl.complement_dim == 7, std::to_string(cl.complement_dim));
  r.boolean("bracket_closure", "[spin7, spin7] in spin7 (exact)", cl.closed, cl.first_failure);
  const auto t = spin7::build_tables();
  if (o.exact) {
    const auto rep = spin7::invariance_report(t, b);
    r.boolean("phi_invariant", "lie_action(A, Phi) = 0 for all 21 generators (exact)", rep.phi_invariant,
              rep.first_violation);
    r.boolean("psi_equivariant", "lie_action(A, psi_m) in span{psi} for all 21 x 7 pairs (exact)",
              rep.psi_equivariant, rep.first_equivariance_failure);
    r.boolean("psi_representation_skew", "induced 7 x 7 matrices are skew", rep.reps_skew);
    r.boolean("complement_moves_phi", "m . Phi spans a 7-dimensional space", rep.complement_moves_phi &&
              rep.complement_image_rank == 7, std::to_string(rep.complement_image_rank));
  } else {
    const double tol = pick(o.tol, 1e-10);
    const auto ft = spin7::float_tables();
    const auto& fb = spin7::spin7_float_basis();
    Eigen::Matrix<double, 70, 7> P;
    auto coords = [](const exterior::AlternatingForm<double>& f) {
      Eigen::Matrix<double, 70, 1> v = Eigen::Matrix<double, 70, 1>::Zero();
      int k = 0;
      for (unsigned m = 0; m < 256; ++m) {
        if (std::popcount(m) != 4) continue;
        const auto it = f.terms().find(static_cast<exterior::IndexMask>(m));
        v[k++] = it == f.terms().end() ? 0.0 : it->second;
      }
      return v;
    };
    for (int m = 0; m < 7; ++m) P.col(m) = coords(ft.psi[m]);
    std::vector<double> phi_dev, psi_dev;
    for (const auto& A : fb) {
      std::array<std::array<double, 8>, 8> a{};
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) a[i][j] = A(i, j);
      phi_dev.push_back(exterior::lie_action(a, ft.phi).max_abs());
      for (int m = 0; m < 7; ++m) {
        const Eigen::Matrix<double, 70, 1> v = coords(exterior::lie_action(a, ft.psi[m]));
        const Eigen::Matrix<double, 7, 1> c = P.colPivHouseholderQr().solve(v);
        psi_dev.push_back((P * c - v).cwiseAbs().maxCoeff());
      }
    }
    CheckStats a, c;
    a.name = "phi_invariant_float";
    a.anchor = "lie_action(A, Phi) = 0 for all 21 generators";
    a.accumulate(phi_dev, tol);
    c.name = "psi_equivariant_float";
    c.anchor = "lie_action(A, psi_m) in span{psi}";
    c.accumulate(psi_dev, tol);
    r.check(a);
    r.check(c);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.info("algebra_seconds", secs, fmt("%.3f s", secs));
}

// ---------------------------------------------------------------- symbolic

void verify_symbolic(const Options& o, Report& r) {
  const auto suite = symbolic::canned_suite();
  bool found = o.identity.empty();
  std::printf("  %-30s %-8s %-9s %s\n", "identity", "holds", "expected", "residual terms");
  for (const auto& id : suite) {
    if (!o.identity.empty() && id.name != o.identity) continue;
    found = true;
    const std::size_t terms = id.residual.terms().size();
    std::printf("  %-30s %-8s %-9s %zu  %s\n", id.name.c_str(), id.holds ? "yes" : "no", id.expected ? "yes" : "no",
                terms, id.ok() ? "ok" : "MISMATCH");
    if (!id.residual.is_zero()) std::printf("      residual: %s\n", id.residual.str().c_str());
    r.boolean(id.name, id.anchor, id.ok(), id.residual.is_zero() ? "" : "residual " + id.residual.str(), false);
  }
  if (!found) throw UsageError("unknown identity '" + o.identity + "'");
}

// ---------------------------------------------------------------- curves

curves::SampleOptions sample_opts(const Options& o, int fallback = 8) {
  const int n = pick(o.samples, fallback);
  return curves::SampleOptions{n, n, o.h, {}};
}

void check_curve(const Options& o, Report& r, const examples::ExampleSpec& spec) {
  const auto chart = examples::make_chart(spec.curve);
  const bool fiber = std::holds_alternative<examples::FiberPolynomial>(spec.curve);
  const auto so = sample_opts(o);
  const double tol = pick(o.tol, 1e-7);
  const CheckStats ph = curves::pseudoholo_residual(chart, so, tol);
  r.check(ph);
  if (!ph.pass) return;
  const auto ff = curves::fund_forms(chart, so, tol);
  CheckStats i1, i2;
  i1.name = "first_fundamental_form_I1";
  i1.anchor = "|theta_1,3,5| / |theta|; I1 = 0 iff tangent to V2";
  i2.name = "first_fundamental_form_I2";
  i2.anchor = "|theta_2,4,6| / |theta|; I2 = 0 iff tangent to V1";
  std::vector<double> a, b;
  for (const auto& s : ff.samples) {
    a.push_back(s.I1);
    b.push_back(s.I2);
  }
  i1.accumulate(a, 1e-9);
  i2.accumulate(b, 1e-9);
  r.check(i1, fiber);
  r.check(i2, false);
  r.boolean("immersion_R1_R2_disjoint", "R1 and R2 never meet on the samples", ff.R1_and_R2 == 0);
  const CheckStats tw = curves::twistor_diameter(chart, so);
  r.check(tw, fiber);
  curves::MinimalityOptions mo;
  mo.nu = mo.nv = std::min(so.nu, 6);
  const auto mr = curves::minimality_residual(chart, mo);
  if (mr.constant_map)
    r.info("twistor_image_minimal", "constant map", "constant map (the curve lies in a twistor fiber)");
  else
    r.check(mr.mean_curvature);
}

void check_cone(const Options& o, Report& r, const examples::ExampleSpec& spec) {
  const auto chart = examples::make_chart(spec.curve);
  curves::ConeOptions co;
  co.nu = co.nv = pick(o.samples, 6);
  co.h = o.h;
  const double tol = pick(o.tol, 1e-7);
  std::optional<curves::SectionField> section;
  if (spec.section) section = examples::make_section(*spec.section, chart);
  r.check(curves::cayley_residual(curves::build_cone(chart, section, spec.lambda), co, tol));
  if (section) return;
  const auto red = curves::reduction_check(chart, co, {}, tol);
  r.check(red.direct, false);
  r.check(red.reduced, false);
  r.boolean("reduction_consistent", "direct and Maurer-Cartan certifications agree", red.consistent);
  r.info("reduction_constant", red.fitted_constant, fmt("fitted K = %.6f (direct = K reduced)", red.fitted_constant));
  r.info("reduction_discrepancy", red.discrepancy, fmt("sup |direct - reduced/2| = %.3e", red.discrepancy));
}

void degree_cmd(const Options& o, Report& r, const examples::ExampleSpec& spec) {
  curves::DegreeOptions d;
  d.n_r = pick(o.samples, 1024);
  d.h = o.h;
  curves::DegreeResult res;
  if (auto atlas = examples::make_atlas(spec.curve)) {
    res = curves::degree(*atlas, d);
  } else {
    const auto chart = examples::make_chart(spec.curve);
    if (!chart.domain().closed())
      throw SpecError("/curve", "degree needs a closed curve: a fiber polynomial or a doubly periodic grid");
    res = curves::degree(chart, d);
  }
  const double tol = pick(o.tol, 1e-6);
  std::printf("  degree = %+ld (integrality defect %.1e, value %.9f)\n", res.nearest, res.defect, res.value);
  CheckStats s;
  s.name = "degree_integrality";
  s.anchor = "(1/4 pi) integral of omega1 - omega2";
  s.accumulate({res.defect}, tol);
  s.note = "degree " + std::to_string(res.nearest) + ", value " + fmt("%.12f", res.value);
  r.check(s);
}

void deform_cmd(const Options& o, Report& r, const examples::ExampleSpec& spec) {
  const auto chart = examples::make_chart(spec.curve);
  curves::AlphaOptions ao;
  ao.sample = sample_opts(o, 6);
  const double tol = pick(o.tol, 1e-6);
  try {
    if (spec.section) {
      const auto s = examples::make_section(*spec.section, chart);
      const auto lr = curves::lemma91_check(chart, {s}, ao);
      const auto& row = lr.rows.front();
      std::printf("  alpha (0,1) residual %.3e, deformed cone Cayley residual %.3e: %s\n", row.alpha, row.cayley,
                  curves::verdict_name(row.verdict));
      r.info("alpha_residual", row.alpha, fmt("%.3e", row.alpha));
      r.info("deformed_cone_cayley", row.cayley, fmt("%.3e", row.cayley));
      r.boolean("deformation_verdict", "deformed cone Cayley iff alpha of type (1,0)",
                row.verdict == curves::Verdict::HolomorphicAndCayley ||
                    row.verdict == curves::Verdict::NeitherHolomorphicNorCayley,
                curves::verdict_name(row.verdict));
    } else {
      curves::I1LineOptions io;
      io.h = o.h;
      io.tol = pick(o.tol, 1e-5);
      const auto res = curves::i1_line_and_sections(chart, io);
      r.info("adapted_theta35", res.theta35, fmt("sup |theta3|,|theta5| / |theta| = %.3e", res.theta35));
      r.info("dbar_solve_residual", res.solve_residual, fmt("%.3e", res.solve_residual));
      r.check(res.alpha);
      r.check(res.cayley);
    }
  } catch (const Refused& e) {
    r.refuse(e.what());
  }
  (void)tol;
}

void comass_cmd(const Options& o, Report& r) {
  spin7::ComassOptions co;
  co.starts = pick(o.samples, 512);
  co.seed = o.seed;
  const auto res = spin7::comass_estimate(spin7::float_tables().phi, co);
  std::printf("  comass(Phi) ~ %.15f over %d starts\n", res.value, co.starts);
  r.boolean("comass_phi", "comass of Phi in [1 - 1e-6, 1 + 1e-9]", res.value >= 1 - 1e-6 && res.value <= 1 + 1e-9,
            fmt("%.15f", res.value));
  using exterior::Vec;
  std::array<Vec<Rational>, 4> e{};
  for (int k = 0; k < 4; ++k) {
    e[k].fill(Rational(0));
    e[k][k] = 1;
  }
  const Rational at = exterior::evaluate(spin7::build_tables().phi, std::span<const Vec<Rational>>(e));
  r.boolean("comass_attained", "Phi(e1,e2,e3,e4) = 1 exactly", at == 1, at.get_str());
}

void search_cmd(const Options& o, Report& r, const std::optional<examples::ExampleSpec>& spec) {
  examples::OrbitSearchConfig cfg;
  if (spec && spec->search) cfg = *spec->search;
  if (o.samples > 0) cfg.n_starts = o.samples;
  if (o.seed) cfg.seed = o.seed;
  if (o.tol > 0) cfg.tol = o.tol;
  const auto res = examples::search_orbit(cfg);
  bool monotone = true;
  for (const auto& s : res.starts)
    for (std::size_t k = 1; k < s.history.size(); ++k) monotone = monotone && s.history[k] <= s.history[k - 1];
  r.boolean("history_monotone", "residual history non-increasing per start", monotone);
  const auto& best = res.starts[res.best];
  r.info("best_residual", best.residual, fmt("best residual %.3e", best.residual));
  json params = json::array();
  for (int k = 0; k < 27; ++k) params.push_back(best.params[k]);
  r.info("best_params", params, "start " + std::to_string(res.best));
  r.boolean("orbit_search_success", "pseudoholomorphic residual below tol", res.success, fmt("tol %.1e", cfg.tol));
  auto coords = [](const geometry::Mat8& X) {
    const auto x = spin7::project_spin7(X);
    return std::vector<double>(x.data(), x.data() + 21);
  };
  r.info("orbit_spec", {{"kind", "orbit"}, {"A", coords(res.spec.A)}, {"B", coords(res.spec.B)}},
         "curve spec of the best orbit written to the JSON report");
  if (!res.success) return;
  const auto chart = examples::orbit_chart(res.spec);
  curves::SampleOptions so{6, 6, o.h, {}};
  const CheckStats ph = curves::pseudoholo_residual(chart, so, 1e-7);
  r.check(ph);
  if (!ph.pass) return;
  const auto ff = curves::fund_forms(chart, so);
  r.info("I1_fraction", ff.sup_I1, fmt("sup |I1|/|theta| = %.4f", ff.sup_I1));
  r.info("I2_fraction", ff.sup_I2, fmt("sup |I2|/|theta| = %.4f", ff.sup_I2));
  const auto mr = curves::minimality_residual(chart);
  if (mr.constant_map)
    r.info("twistor_image_minimal", "constant map", "constant map");
  else
    r.check(mr.mean_curvature);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Spin(7) calibration, pseudoholomorphic curve and Cayley cone checks", "cayley"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1, 1);
  Options o;
  auto add_common = [&](CLI::App* sc, bool spec) {
    sc->add_option("--tol", o.tol, "tolerance (per-check default when omitted)");
    sc->add_option("--h", o.h, "finite-difference step")->check(CLI::PositiveNumber);
    sc->add_option("--samples", o.samples, "sample count per direction / starts")->check(CLI::PositiveNumber);
    sc->add_option("--seed", o.seed, "random seed");
    sc->add_option("--json", o.json_path, "write the machine-readable report here");
    sc->add_flag("--exact,!--no-exact", o.exact, "exact rational arithmetic (default on)");
    if (spec) sc->add_option("--spec", o.spec_path, "curve/section spec (JSON, schema 1)");
  };
  struct Cmd {
    const char* name;
    const char* help;
    bool spec;
  };
  const Cmd cmds[] = {
      {"verify-forms", "calibration tables", false},
      {"verify-algebra", "spin(7) from the Phi-preserving relations", false},
      {"verify-symbolic", "Maurer-Cartan structure equations", false},
      {"check-curve", "pseudoholomorphicity, fundamental forms, twistor image", true},
      {"check-cone", "Cayley residual of the cone and its Maurer-Cartan reduction", true},
      {"degree", "degree of a closed curve", true},
      {"deform", "deformations by sections of H", true},
      {"comass", "comass of Phi", false},
      {"search-orbit", "search for pseudoholomorphic torus orbits", true},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    auto* sc = app.add_subcommand(c.name, c.help);
    add_common(sc, c.spec);
    if (std::string(c.name) == "verify-symbolic") sc->add_option("--identity", o.identity, "run one identity");
    subs[c.name] = sc;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  std::string command;
  for (const auto& [name, sc] : subs)
    if (sc->parsed()) command = name;

  const auto t0 = std::chrono::steady_clock::now();
  Report report(command);
  json spec_echo = nullptr;
  try {
    std::printf("%s\n", command.c_str());
    std::optional<examples::ExampleSpec> spec;
    if (!o.spec_path.empty()) {
      spec = examples::load_spec(o.spec_path);
      spec_echo = spec->raw;
    }
    if (command == "verify-forms") verify_forms(o, report);
    else if (command == "verify-algebra") verify_algebra(o, report);
    else if (command == "verify-symbolic") verify_symbolic(o, report);
    else if (command == "check-curve") check_curve(o, report, spec ? *spec : need_spec(o));
    else if (command == "check-cone") check_cone(o, report, spec ? *spec : need_spec(o));
    else if (command == "degree") degree_cmd(o, report, spec ? *spec : need_spec(o));
    else if (command == "deform") deform_cmd(o, report, spec ? *spec : need_spec(o));
    else if (command == "comass") comass_cmd(o, report);
    else if (command == "search-orbit") search_cmd(o, report, spec);
  } catch (const SpecError& e) {
    std::fprintf(stderr, "spec error at %s: %s\n", e.pointer.empty() ? "/" : e.pointer.c_str(), e.what());
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const Refused& e) {
    report.refuse(e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s (%.2f s)\n", report.pass() ? "all checks pass" : "CHECK FAILED", secs);
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) {
      std::fprintf(stderr, "cannot write %s\n", o.json_path.c_str());
      return 2;
    }
    out << report.to_json(o, spec_echo, secs).dump(2) << "\n";
  }
  return report.pass() ? 0 : 1;
}

}  // namespace cayley::cli
