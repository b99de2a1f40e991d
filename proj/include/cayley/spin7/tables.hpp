#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include <array>
#include <string>
#include <vector>

#include "cayley/exterior/alternating_form.hpp"

namespace cayley::spin7 {

using exterior::AlternatingForm;
using exterior::Rational;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

// A table entry as printed: a digit string such as "5128" with a sign,
// meaning sign * dx^5 ^ dx^1 ^ dx^2 ^ dx^8.
struct TableEntry {
  std::string digits;
  int sign;
};

struct CalibrationTables {
  AlternatingForm<Rational> phi;
  std::array<AlternatingForm<Rational>, 7> psi;  // psi[m-1] is psi_m
};

// Raw listings. `corrected` applies the single fix to psi_1 (first entry
// 5137 -> 5134); the uncorrected listing is kept for audit.
const std::vector<TableEntry>& phi_listing();
const std::vector<TableEntry>& psi_listing(int m, bool corrected = true);

CalibrationTables build_tables();
CalibrationTables transcribed_tables();

AlternatingForm<Rational> form_from_listing(const std::vector<TableEntry>& entries);

// Float copies of the tables, built once.
struct FloatTables {
  AlternatingForm<double> phi;
  std::array<AlternatingForm<double>, 7> psi;
};
const FloatTables& float_tables();

double evaluate4(const AlternatingForm<double>& f, const Vec8& a, const Vec8& b, const Vec8& c, const Vec8& d);

// Components 1..7 are psi_1..psi_7, component 8 is Phi.
Vec8 quad_cross(const Vec8& x, const Vec8& y, const Vec8& z, const Vec8& w);

// <T(x,y,z), w> = Phi(x,y,z,w).
Vec8 triple_cross(const Vec8& x, const Vec8& y, const Vec8& z);

// List of {indices, coeff}, indices 1-based increasing.
nlohmann::json form_to_json(const AlternatingForm<Rational>& f);
nlohmann::json tables_to_json(const CalibrationTables& t);

}  // namespace cayley::spin7
