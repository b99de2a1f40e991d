#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

#include "cayley/curves/cone.hpp"
#include "cayley/examples/fiber.hpp"
#include "cayley/examples/orbit.hpp"

namespace cayley::examples {

using nlohmann::json;

struct GridCurve {
  std::vector<std::vector<std::pair<Vec8, Vec8>>> planes;
  curves::Domain domain;
};

using CurveSpec = std::variant<FiberPolynomial, OrbitSpec, GridCurve>;

// s = projection to H of Re(sum_a Z_a f_a), Z = sum_terms vec w^p conj(w)^q,
// with f_a of the identity frame.
struct PolynomialSection {
  struct Term {
    int p = 0, q = 0;
    std::array<cd, 4> vec{};
  };
  std::vector<Term> terms;
};

// Ambient vectors on the curve's node grid, interpolated like grid curves.
struct GridSection {
  std::vector<std::vector<Vec8>> values;
};

using SectionSpec = std::variant<PolynomialSection, GridSection>;

struct ExampleSpec {
  json raw;
  CurveSpec curve;
  std::optional<SectionSpec> section;
  double lambda = 1.0;
  std::optional<OrbitSearchConfig> search;
};

// Schema 1. Unknown or malformed fields throw SpecError with a JSON pointer.
ExampleSpec parse_spec(const json& doc);
ExampleSpec load_spec(const std::string& path);

CurveChart make_chart(const CurveSpec& c);
// Only fiber curves come with a sphere atlas.
std::optional<SphereAtlas> make_atlas(const CurveSpec& c);
curves::SectionField make_section(const SectionSpec& s, const CurveChart& chart);

// Raw (not yet projected) ambient field of a polynomial section.
Vec8 polynomial_section_value(const PolynomialSection& s, double u, double v);

}  // namespace cayley::examples
