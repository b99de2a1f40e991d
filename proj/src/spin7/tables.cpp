#include "cayley/spin7/tables.hpp"

#include <stdexcept>

namespace cayley::spin7 {

namespace {

std::vector<TableEntry> positive(std::initializer_list<const char*> digits) {
  std::vector<TableEntry> out;
  for (const char* d : digits) out.push_back({d, 1});
  return out;
}

const std::array<std::vector<TableEntry>, 7>& raw_psi() {
  static const std::array<std::vector<TableEntry>, 7> t = {
      positive({"5137", "5864", "7123", "6421", "1675", "7538", "2786", "4283"}),
      positive({"3612", "2354", "4578", "7214", "5863", "3418", "5762", "1876"}),
      positive({"7314", "4821", "8476", "6342", "3756", "1253", "1578", "8256"}),
      positive({"1364", "6574", "4521", "3812", "2587", "6518", "7234", "6783"}),
      positive({"7352", "2847", "6814", "8632", "3817", "1653", "4571", "4265"}),
      positive({"5346", "6521", "5328", "4387", "1647", "7128", "2763", "4158"}),
      positive({"8463", "8531", "6274", "6137", "2485", "3574", "7521", "1628"}),
  };
  return t;
}

double det3(const Vec8& x, const Vec8& y, const Vec8& z, int a, int b, int c) {
  return x[a] * (y[b] * z[c] - y[c] * z[b]) - x[b] * (y[a] * z[c] - y[c] * z[a]) +
         x[c] * (y[a] * z[b] - y[b] * z[a]);
}

}  // namespace

const std::vector<TableEntry>& phi_listing() {
  static const std::vector<TableEntry> t = {
      {"5678", 1},  {"5128", -1}, {"5348", -1}, {"6138", -1}, {"6428", -1}, {"7148", -1}, {"7238", -1},
      {"1234", 1},  {"3467", -1}, {"1267", -1}, {"2457", -1}, {"1357", 1},  {"2356", -1}, {"1456", -1},
  };
  return t;
}

const std::vector<TableEntry>& psi_listing(int m, bool corrected) {
  if (m < 1 || m > 7) throw std::out_of_range("psi_listing: m must be in 1..7");
  if (corrected && m == 1) {
    static const std::vector<TableEntry> fixed = [] {
      auto t = raw_psi()[0];
      t[0].digits = "5134";  // printed as 5137; only 5134 puts psi_1 in the span of m . Phi
      return t;
    }();
    return fixed;
  }
  return raw_psi()[m - 1];
}

AlternatingForm<Rational> form_from_listing(const std::vector<TableEntry>& entries) {
  AlternatingForm<Rational> f(8, 4);
  for (const auto& e : entries) {
    if (e.digits.size() != 4) throw std::invalid_argument("table entry '" + e.digits + "' is not a 4-index monomial");
    std::array<int, 4> idx{};
    for (int i = 0; i < 4; ++i) idx[i] = e.digits[i] - '0';
    f.add_signed(idx, Rational(e.sign));
  }
  return f;
}

CalibrationTables build_tables() {
  CalibrationTables t{form_from_listing(phi_listing()), {}};
  for (int m = 1; m <= 7; ++m) t.psi[m - 1] = form_from_listing(psi_listing(m, true));
  return t;
}

CalibrationTables transcribed_tables() {
  CalibrationTables t{form_from_listing(phi_listing()), {}};
  for (int m = 1; m <= 7; ++m) t.psi[m - 1] = form_from_listing(psi_listing(m, false));
  return t;
}

const FloatTables& float_tables() {
  static const FloatTables ft = [] {
    CalibrationTables t = build_tables();
    FloatTables out;
    out.phi = exterior::to_float(t.phi);
    for (int m = 0; m < 7; ++m) out.psi[m] = exterior::to_float(t.psi[m]);
    return out;
  }();
  return ft;
}

double evaluate4(const AlternatingForm<double>& f, const Vec8& a, const Vec8& b, const Vec8& c, const Vec8& d) {
  double total = 0;
  for (const auto& [mask, coeff] : f.terms()) {
    int idx[4];
    int k = 0;
    for (int i = 0; i < 8; ++i)
      if (mask & (1u << i)) idx[k++] = i;
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r) m.row(r) << a[idx[r]], b[idx[r]], c[idx[r]], d[idx[r]];
    total += coeff * m.determinant();
  }
  return total;
}

Vec8 quad_cross(const Vec8& x, const Vec8& y, const Vec8& z, const Vec8& w) {
  const FloatTables& ft = float_tables();
  Vec8 out;
  for (int m = 0; m < 7; ++m) out[m] = evaluate4(ft.psi[m], x, y, z, w);
  out[7] = evaluate4(ft.phi, x, y, z, w);
  return out;
}

Vec8 triple_cross(const Vec8& x, const Vec8& y, const Vec8& z) {
  Vec8 out = Vec8::Zero();
  for (const auto& [mask, coeff] : float_tables().phi.terms()) {
    int idx[4];
    int k = 0;
    for (int i = 0; i < 8; ++i)
      if (mask & (1u << i)) idx[k++] = i;
    // Expand det[x y z e_w] along the last column.
    for (int p = 0; p < 4; ++p) {
      int rest[3];
      int r = 0;
      for (int q = 0; q < 4; ++q)
        if (q != p) rest[r++] = idx[q];
      const double sign = ((p + 3) % 2 == 0) ? 1.0 : -1.0;
      out[idx[p]] += coeff * sign * det3(x, y, z, rest[0], rest[1], rest[2]);
    }
  }
  return out;
}

nlohmann::json form_to_json(const AlternatingForm<Rational>& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [mask, c] : f.terms()) {
    nlohmann::json coeff;
    if (c.get_den() == 1)
      coeff = c.get_num().get_si();
    else
      coeff = c.get_str();
    out.push_back({{"indices", exterior::mask_indices(mask)}, {"coeff", coeff}});
  }
  return out;
}

nlohmann::json tables_to_json(const CalibrationTables& t) {
  nlohmann::json out;
  out["Phi"] = form_to_json(t.phi);
  for (int m = 0; m < 7; ++m) out["psi" + std::to_string(m + 1)] = form_to_json(t.psi[m]);
  return out;
}

}  // namespace cayley::spin7
