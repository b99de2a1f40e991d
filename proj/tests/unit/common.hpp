#pragma once

#include <string>

#include "cayley/examples/fiber.hpp"
#include "cayley/examples/orbit.hpp"
#include "cayley/examples/spec_io.hpp"

namespace testing {

inline cayley::curves::CurveChart line_chart() {
  return cayley::examples::fiber_chart(cayley::examples::rational_curve(1), "line");
}

// Pseudoholomorphic torus orbit stored with the tests (found by search-orbit --seed 1).
inline cayley::curves::CurveChart torus_chart() {
  static const auto spec = cayley::examples::load_spec(std::string(CAYLEY_TEST_DATA) + "/orbit_torus.json");
  return cayley::examples::make_chart(spec.curve);
}

// Orbit of a random commuting-free pair: not pseudoholomorphic.
inline cayley::curves::CurveChart generic_chart() {
  static const auto spec = cayley::examples::load_spec(std::string(CAYLEY_TEST_DATA) + "/orbit_generic.json");
  return cayley::examples::make_chart(spec.curve);
}

}  // namespace testing

#include <random>

#include "cayley/curves/deform.hpp"

namespace testing {

// Random H-valued sections on a fibre chart: the projection of
// Re(sum_a Z_a f_a), Z a random polynomial in w, plus a random conj(w) term
// when `antiholomorphic` is set.
inline cayley::curves::SectionField random_section(const cayley::curves::CurveChart& c, std::mt19937_64& rng,
                                                   bool antiholomorphic) {
  using cayley::examples::PolynomialSection;
  std::normal_distribution<double> N;
  PolynomialSection ps;
  for (int k = 0; k < 3; ++k) {
    PolynomialSection::Term t;
    t.p = k;
    for (auto& z : t.vec) z = {N(rng), N(rng)};
    ps.terms.push_back(t);
  }
  if (antiholomorphic) {
    PolynomialSection::Term t;
    t.p = static_cast<int>(rng() % 3);
    t.q = 1 + static_cast<int>(rng() % 2);
    for (auto& z : t.vec) z = {N(rng), N(rng)};
    ps.terms.push_back(t);
  }
  return cayley::curves::project_to_h(
      c, [ps](double u, double v) { return cayley::examples::polynomial_section_value(ps, u, v); });
}

}  // namespace testing
