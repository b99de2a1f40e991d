#include "cayley/examples/spec_io.hpp"

#include <fstream>
#include <set>

#include "cayley/curves/deform.hpp"
#include "cayley/spin7/algebra.hpp"

namespace cayley::examples {

namespace {

// Walks a JSON document keeping the pointer of the current node.
struct Node {
  const json& j;
  std::string ptr;

  [[noreturn]] void fail(const std::string& what) const { throw SpecError(ptr.empty() ? "/" : ptr, what); }

  Node at(const std::string& key) const {
    if (!j.contains(key)) Node{j, ptr + "/" + key}.fail("missing field");
    return {j.at(key), ptr + "/" + key};
  }
  Node at(std::size_t i) const { return {j.at(i), ptr + "/" + std::to_string(i)}; }
  bool has(const std::string& key) const { return j.contains(key); }

  void object(std::initializer_list<const char*> allowed) const {
    if (!j.is_object()) fail("expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items())
      if (!ok.count(k)) Node{v, ptr + "/" + k}.fail("unknown field '" + k + "'");
  }
  std::size_t array(std::size_t min = 0, std::size_t exact = 0) const {
    if (!j.is_array()) fail("expected an array");
    if (exact && j.size() != exact) fail("expected " + std::to_string(exact) + " entries, got " + std::to_string(j.size()));
    if (j.size() < min) fail("expected at least " + std::to_string(min) + " entries");
    return j.size();
  }
  double number() const {
    if (!j.is_number()) fail("expected a number");
    return j.get<double>();
  }
  int integer() const {
    if (!j.is_number_integer()) fail("expected an integer");
    return j.get<int>();
  }
  bool boolean() const {
    if (!j.is_boolean()) fail("expected a boolean");
    return j.get<bool>();
  }
  std::string string() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  cd complex() const {
    array(0, 2);
    return {at(0).number(), at(1).number()};
  }
  Vec8 vec8() const {
    array(0, 8);
    Vec8 v;
    for (int k = 0; k < 8; ++k) v[k] = at(k).number();
    return v;
  }
};

curves::Domain parse_domain(const Node& n) {
  n.array(0, 4);
  curves::Domain d{n.at(0).number(), n.at(1).number(), n.at(2).number(), n.at(3).number()};
  if (!(d.u1 > d.u0) || !(d.v1 > d.v0)) n.fail("domain must be [u0, u1, v0, v1] with u0 < u1 and v0 < v1");
  return d;
}

Mat8 parse_spin7(const Node& n) {
  n.array(0, 21);
  Eigen::Matrix<double, 21, 1> x;
  for (int k = 0; k < 21; ++k) x[k] = n.at(k).number();
  return spin7::spin7_matrix(x);
}

FiberPolynomial parse_fiber(const Node& n) {
  n.object({"kind", "coeffs", "frame"});
  FiberPolynomial p;
  const Node c = n.at("coeffs");
  c.array(0, 4);
  for (int a = 0; a < 4; ++a) {
    const Node ca = c.at(a);
    const std::size_t m = ca.array();
    for (std::size_t k = 0; k < m; ++k) p.coeffs[a].push_back(ca.at(k).complex());
  }
  if (n.has("frame")) {
    const Node f = n.at("frame");
    if (f.j.is_string()) {
      if (f.string() != "identity") f.fail("frame must be \"identity\" or an 8x8 matrix");
    } else {
      f.array(0, 8);
      for (int r = 0; r < 8; ++r) p.frame.row(r) = f.at(r).vec8().transpose();
      if ((p.frame.transpose() * p.frame - Mat8::Identity()).cwiseAbs().maxCoeff() > 1e-10 ||
          spin7::spin7_defect(p.frame) > 1e-10)
        f.fail("frame is not in Spin(7)");
    }
  }
  try {
    validate(p);
  } catch (const std::invalid_argument& e) {
    c.fail(e.what());
  }
  return p;
}

OrbitSpec parse_orbit(const Node& n) {
  n.object({"kind", "A", "B", "base_plane", "domain"});
  OrbitSpec s;
  s.A = parse_spin7(n.at("A"));
  s.B = parse_spin7(n.at("B"));
  if (n.has("base_plane")) {
    const Node b = n.at("base_plane");
    b.array(0, 2);
    try {
      s.base = OrientedPlane::from_span(b.at(0).vec8(), b.at(1).vec8());
    } catch (const std::invalid_argument& e) {
      b.fail(e.what());
    }
  }
  if (n.has("domain")) s.domain = parse_domain(n.at("domain"));
  return s;
}

GridCurve parse_grid(const Node& n) {
  n.object({"kind", "domain", "periodic", "samples"});
  GridCurve g;
  g.domain = parse_domain(n.at("domain"));
  if (n.has("periodic")) {
    const Node p = n.at("periodic");
    p.array(0, 2);
    g.domain.periodic_u = p.at(0).boolean();
    g.domain.periodic_v = p.at(1).boolean();
  }
  const Node s = n.at("samples");
  const std::size_t nu = s.array(4);
  std::size_t nv = 0;
  for (std::size_t i = 0; i < nu; ++i) {
    const Node row = s.at(i);
    const std::size_t m = row.array(4);
    if (i == 0) nv = m;
    if (m != nv) row.fail("ragged sample grid");
    std::vector<std::pair<Vec8, Vec8>> r;
    for (std::size_t k = 0; k < m; ++k) {
      const Node pr = row.at(k);
      pr.array(0, 2);
      const Vec8 a = pr.at(0).vec8(), b = pr.at(1).vec8();
      try {
        OrientedPlane::from_span(a, b);
      } catch (const std::invalid_argument& e) {
        pr.fail(e.what());
      }
      r.emplace_back(a, b);
    }
    g.planes.push_back(std::move(r));
  }
  return g;
}

SectionSpec parse_section(const Node& n) {
  n.object({"kind", "data"});
  const std::string kind = n.at("kind").string();
  const Node d = n.at("data");
  if (kind == "polynomial") {
    PolynomialSection s;
    const std::size_t m = d.array();
    for (std::size_t t = 0; t < m; ++t) {
      const Node term = d.at(t);
      term.object({"p", "q", "vec"});
      PolynomialSection::Term tm;
      tm.p = term.at("p").integer();
      tm.q = term.at("q").integer();
      if (tm.p < 0 || tm.q < 0) term.fail("exponents must be nonnegative");
      const Node v = term.at("vec");
      v.array(0, 4);
      for (int a = 0; a < 4; ++a) tm.vec[a] = v.at(a).complex();
      s.terms.push_back(tm);
    }
    return s;
  }
  if (kind == "grid") {
    GridSection s;
    const std::size_t nu = d.array(4);
    for (std::size_t i = 0; i < nu; ++i) {
      const Node row = d.at(i);
      const std::size_t m = row.array(4);
      if (i > 0 && m != s.values[0].size()) row.fail("ragged section grid");
      std::vector<Vec8> r;
      for (std::size_t k = 0; k < m; ++k) r.push_back(row.at(k).vec8());
      s.values.push_back(std::move(r));
    }
    return s;
  }
  n.at("kind").fail("unknown section kind '" + kind + "'");
}

OrbitSearchConfig parse_search(const Node& n) {
  n.object({"n_starts", "max_iters", "tol", "seed", "start"});
  OrbitSearchConfig c;
  if (n.has("n_starts")) c.n_starts = n.at("n_starts").integer();
  if (n.has("max_iters")) c.max_iters = n.at("max_iters").integer();
  if (n.has("tol")) c.tol = n.at("tol").number();
  if (n.has("seed")) c.seed = static_cast<std::uint64_t>(n.at("seed").integer());
  if (n.has("start")) {
    const Node s = n.at("start");
    s.array(0, 27);
    OrbitParams p;
    for (int k = 0; k < 27; ++k) p[k] = s.at(k).number();
    c.start = p;
  }
  if (c.n_starts < 1) n.at("n_starts").fail("need at least one start");
  return c;
}

}  // namespace

ExampleSpec parse_spec(const json& doc) {
  const Node root{doc, ""};
  root.object({"schema", "curve", "section", "lambda", "search"});
  if (root.at("schema").integer() != 1) root.at("schema").fail("unsupported schema version");
  ExampleSpec s;
  s.raw = doc;
  const Node c = root.at("curve");
  if (!c.j.is_object()) c.fail("expected an object");
  const std::string kind = c.at("kind").string();
  if (kind == "fiber_polynomial")
    s.curve = parse_fiber(c);
  else if (kind == "orbit")
    s.curve = parse_orbit(c);
  else if (kind == "grid")
    s.curve = parse_grid(c);
  else
    c.at("kind").fail("unknown curve kind '" + kind + "'");
  if (root.has("section")) s.section = parse_section(root.at("section"));
  if (root.has("lambda")) s.lambda = root.at("lambda").number();
  if (root.has("search")) s.search = parse_search(root.at("search"));
  return s;
}

ExampleSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("", "cannot open spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(doc);
}

CurveChart make_chart(const CurveSpec& c) {
  return std::visit(
      [](const auto& x) -> CurveChart {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiberPolynomial>)
          return fiber_chart(x);
        else if constexpr (std::is_same_v<T, OrbitSpec>)
          return orbit_chart(x);
        else
          return curves::grid_chart(x.planes, x.domain);
      },
      c);
}

std::optional<SphereAtlas> make_atlas(const CurveSpec& c) {
  if (const auto* f = std::get_if<FiberPolynomial>(&c)) return fiber_atlas(*f);
  return std::nullopt;
}

Vec8 polynomial_section_value(const PolynomialSection& s, double u, double v) {
  const cd w(u, v);
  std::array<cd, 4> Z{};
  for (const auto& t : s.terms) {
    const cd m = std::pow(w, t.p) * std::pow(std::conj(w), t.q);
    for (int a = 0; a < 4; ++a) Z[a] += t.vec[a] * m;
  }
  return fiber_point(Z);
}

curves::SectionField make_section(const SectionSpec& s, const CurveChart& chart) {
  curves::SectionField raw;
  if (const auto* p = std::get_if<PolynomialSection>(&s))
    raw = [p = *p](double u, double v) { return polynomial_section_value(p, u, v); };
  else
    raw = curves::grid_field(std::get<GridSection>(s).values, chart.domain());
  return curves::project_to_h(chart, raw);
}

}  // namespace cayley::examples
