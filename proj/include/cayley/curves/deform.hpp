#pragma once

#include <functional>
#include <vector>

#include "cayley/curves/cone.hpp"
#include "cayley/curves/pseudoholo.hpp"

namespace cayley::curves {

using geometry::Vec3c;

// Frame fields used to read off section components: factory(u, v) returns a
// smooth frame field valid near (u, v).
using FrameFactory = std::function<FrameField(double, double)>;

// a = (s3 + i s4, s6 - i s7, s5 - i s8) in the frame g, so s = Re(a_k f_k).
Vec3c section_components(const Mat8& g, const Vec8& s);
Vec8 section_from_components(const Mat8& g, const Vec3c& a);

// Projection of an arbitrary field onto the H part of the chart.
SectionField project_to_h(const CurveChart& c, SectionField raw);

struct AlphaOptions {
  SampleOptions sample;
  FrameFactory frames;  // default: the chart's gauge frames
  double pseudoholo_tol = 1e-7;
};

struct AlphaSample {
  double u = 0, v = 0;
  Vec3c a;
  Vec3c alpha_u, alpha_v;  // alpha_i(d_u), alpha_i(d_v)
  Eigen::Vector3d zero_one = Eigen::Vector3d::Zero();  // |pi^(0,1) alpha_i|
};

struct AlphaReport {
  std::vector<AlphaSample> samples;
  double a_scale = 0;  // sup |a| over the samples
  CheckStats residual;  // |pi^(0,1) alpha| / a_scale
};

// alpha_i = da_i + kappa_ij a_j + (i/2)[conj theta_od]_ij conj a_j with
// [v] = ((0, v3, -v2), (-v3, 0, v1), (v2, -v1, 0)). Refuses off
// pseudoholomorphic charts.
AlphaReport alpha_forms(const CurveChart& c, const SectionField& s, const AlphaOptions& opt = {},
                        double tol = 1e-6);

enum class Verdict { HolomorphicAndCayley, NeitherHolomorphicNorCayley, Inconsistent, Inconclusive };
const char* verdict_name(Verdict v);

struct Lemma91Row {
  double alpha = 0;   // normalized (0,1) residual of alpha
  double cayley = 0;  // deformed cone Cayley residual
  Verdict verdict = Verdict::Inconclusive;
};

struct Lemma91Report {
  std::vector<Lemma91Row> rows;
  int consistent = 0, inconsistent = 0, inconclusive = 0;
  // Smallest non-(1,0) residual over the largest (1,0) residual, per measure.
  double alpha_separation = 0, cayley_separation = 0;
};

// Both sides of "deformed cone Cayley <=> alpha of type (1,0)" for each section.
Lemma91Report lemma91_check(const CurveChart& c, const std::vector<SectionField>& sections,
                            const AlphaOptions& opt = {}, const ConeOptions& cone = {}, double small = 1e-6,
                            double large = 1e-3);

struct I1LineOptions {
  int degree = 8;        // total degree of the polynomial ansatz for a1
  int collocation = 13;  // collocation grid per direction
  double h = 1e-4;       // Maurer-Cartan step
  double inner_h = 1e-5; // step for reading I1 off the base frame
  double tol = 1e-5;
  FrameGauge gauge;
};

struct I1LineResult {
  FrameFactory frames;          // adapted: L = C f1
  std::function<cd(double, double)> a1;
  SectionField section;         // Re(a1 f1)
  double theta35 = 0;           // sup |theta3|, |theta5| relative to |theta| in the adapted frame
  double solve_residual = 0;    // collocation least-squares residual
  CheckStats alpha;             // (0,1) residual of the solved section
  CheckStats cayley;            // deformed cone
};

// Adapts the frame so the I1 image is C f1, then solves
// dbar a1 + pi^(0,1)(kappa_11) a1 = 0, a1(centre) = 1, by polynomial least
// squares on the chart. Refuses where I1 vanishes.
I1LineResult i1_line_and_sections(const CurveChart& c, const I1LineOptions& opt = {});

using LineField = std::function<Vec8c(double, double)>;

struct IILSample {
  double u = 0, v = 0;
  // II_L(d_u) l, II_L(d_v) l in the basis f0..f3 of the chart frame.
  Eigen::Vector4cd coeff_u, coeff_v;
  double zero_one = 0;
};

struct IILReport {
  std::vector<IILSample> samples;
  CheckStats residual;  // (0,1) part of II_L, per unit |l|
};

// II_L = projection off L of the derivative of l inside span{f0, f1, f2, f3}.
IILReport second_fund_IIL(const CurveChart& c, const LineField& line, const SampleOptions& opt = {},
                          double tol = 1e-6);

}  // namespace cayley::curves
