#include "cayley/curves/chart.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace cayley::curves {

CurveChart::CurveChart(PlaneField field, Domain domain, std::string label)
    : field_(std::move(field)), domain_(domain), label_(std::move(label)) {
  if (!field_) throw std::invalid_argument("CurveChart: empty plane field");
  if (!(domain_.u1 > domain_.u0) || !(domain_.v1 > domain_.v0))
    throw std::invalid_argument("CurveChart: empty coordinate domain");
}

CurveChart CurveChart::transformed(const Mat8& g) const {
  PlaneField f = [field = field_, g](double u, double v) {
    OrientedPlane p = field(u, v);
    return OrientedPlane{g * p.e1, g * p.e2};
  };
  return CurveChart(f, domain_, label_);
}

std::vector<std::pair<double, double>> CurveChart::sample_points(int nu, int nv) const {
  if (nu < 1 || nv < 1) throw std::invalid_argument("sample_points: need at least one sample per direction");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(nu) * nv);
  const double du = (domain_.u1 - domain_.u0) / nu;
  const double dv = (domain_.v1 - domain_.v0) / nv;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) pts.emplace_back(domain_.u0 + (i + 0.5) * du, domain_.v0 + (j + 0.5) * dv);
  return pts;
}

FrameField CurveChart::frame_field(const FrameGauge& gauge, double u, double v) const {
  const geometry::FrameChoice choice =
      geometry::complete_frame(plane(u, v), gauge, std::nullopt, geometry::Validation::Orthonormality).choice;
  return [field = field_, gauge, choice](double uu, double vv) {
    return geometry::complete_frame(field(uu, vv), gauge, choice, geometry::Validation::Orthonormality).g;
  };
}

CoframeSample CurveChart::coframe(double u, double v, const FrameGauge& gauge, double h) const {
  return geometry::mc_pullback(frame_field(gauge, u, v), u, v, h);
}

namespace {

double catmull_rom(double p0, double p1, double p2, double p3, double t) {
  return 0.5 * ((2 * p1) + (-p0 + p2) * t + (2 * p0 - 5 * p1 + 4 * p2 - p3) * t * t +
                (-p0 + 3 * p1 - 3 * p2 + p3) * t * t * t);
}

struct GridData {
  std::vector<std::vector<Vec8>> values;
  Domain domain;
  int nu, nv;

  int wrap(int i, int n, bool periodic) const {
    if (periodic) return ((i % n) + n) % n;
    return std::clamp(i, 0, n - 1);
  }

  Vec8 eval(double u, double v) const {
    const double su = domain.periodic_u ? nu : nu - 1;
    const double sv = domain.periodic_v ? nv : nv - 1;
    const double x = (u - domain.u0) / (domain.u1 - domain.u0) * su;
    const double y = (v - domain.v0) / (domain.v1 - domain.v0) * sv;
    const int i = static_cast<int>(std::floor(x));
    const int j = static_cast<int>(std::floor(y));
    const double tx = x - i;
    const double ty = y - j;
    Vec8 rows[4];
    for (int di = -1; di <= 2; ++di) {
      const int ii = wrap(i + di, nu, domain.periodic_u);
      Vec8 col[4];
      for (int dj = -1; dj <= 2; ++dj) col[dj + 1] = values[ii][wrap(j + dj, nv, domain.periodic_v)];
      for (int k = 0; k < 8; ++k) rows[di + 1][k] = catmull_rom(col[0][k], col[1][k], col[2][k], col[3][k], ty);
    }
    Vec8 out;
    for (int k = 0; k < 8; ++k) out[k] = catmull_rom(rows[0][k], rows[1][k], rows[2][k], rows[3][k], tx);
    return out;
  }
};

}  // namespace

std::function<Vec8(double, double)> grid_field(const std::vector<std::vector<Vec8>>& values, const Domain& domain) {
  if (values.size() < 4 || values[0].size() < 4) throw std::invalid_argument("grid: need at least 4x4 nodes");
  for (const auto& row : values)
    if (row.size() != values[0].size()) throw std::invalid_argument("grid: ragged node grid");
  auto data = std::make_shared<GridData>();
  data->values = values;
  data->domain = domain;
  data->nu = static_cast<int>(values.size());
  data->nv = static_cast<int>(values[0].size());
  return [data](double u, double v) { return data->eval(u, v); };
}

CurveChart grid_chart(const std::vector<std::vector<std::pair<Vec8, Vec8>>>& planes, const Domain& domain,
                      std::string label) {
  std::vector<std::vector<Vec8>> a(planes.size()), b(planes.size());
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (const auto& pr : planes[i]) {
      const OrientedPlane p = OrientedPlane::from_span(pr.first, pr.second);
      a[i].push_back(p.e1);
      b[i].push_back(p.e2);
    }
  auto fa = grid_field(a, domain), fb = grid_field(b, domain);
  return CurveChart([fa, fb](double u, double v) { return OrientedPlane::from_span(fa(u, v), fb(u, v)); }, domain,
                    std::move(label));
}

}  // namespace cayley::curves
