#include "table1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace majorana::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Vector coeffs(std::initializer_list<Complex> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

MajoranaPoint finite(Complex z, int m = 1) { return {ProjectiveRoot(z), m}; }
MajoranaPoint infinite(int m = 1) { return {ProjectiveRoot::infinity(), m}; }

// sqrt(z/2) (|0> + z|1>), the spinor written for points on the equator.
Spinor equatorial(Complex z) {
  const Complex scale = std::sqrt(z / 2.0);
  return Spinor(scale, scale * z);
}

Vector dense(int n, const std::vector<std::pair<std::string, Complex>>& terms) {
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  for (const auto& [bits, amp] : terms) v(static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))) += amp;
  return v;
}

bool match_roots(const Constellation& c, const std::vector<MajoranaPoint>& expected, double tol) {
  if (c.points().size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& p : c.points()) {
    bool found = false;
    for (std::size_t i = 0; i < expected.size() && !found; ++i) {
      if (!used[i] && expected[i].multiplicity == p.multiplicity &&
          chordal_distance(expected[i].root, p.root) <= tol) {
        used[i] = found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool match_spinors(std::vector<Spinor> computed, const std::vector<Spinor>& expected, double tol) {
  if (computed.size() != expected.size()) return false;
  for (const auto& e : expected) {
    const auto it = std::find_if(computed.begin(), computed.end(), [&](const Spinor& s) { return s.equivalent(e, tol); });
    if (it == computed.end()) return false;
    computed.erase(it);
  }
  return true;
}

}  // namespace

std::vector<Table1Row> table1_rows() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  std::vector<Table1Row> rows;

  rows.push_back({"(|1,1> + |1,-1>)/sqrt2",
                  2,
                  coeffs({1.0, 0.0, 1.0}),
                  {1.0, 0.0, 1.0},
                  {finite(kI), finite(-kI)},
                  {Spinor(std::polar(1.0, -kPi / 4) / r2, kI * std::polar(1.0, -kPi / 4) / r2),
                   Spinor(std::polar(1.0, kPi / 4) / r2, -kI * std::polar(1.0, kPi / 4) / r2)},
                  {{"00", 1.0 / r2}, {"11", 1.0 / r2}}});

  rows.push_back({"(|1,1> - |1,-1>)/sqrt2",
                  2,
                  coeffs({1.0, 0.0, -1.0}),
                  {-1.0, 0.0, 1.0},
                  {finite(1.0), finite(-1.0)},
                  {Spinor(1.0 / r2, 1.0 / r2), Spinor(1.0 / r2, -1.0 / r2)},
                  {{"00", 1.0 / r2}, {"11", -1.0 / r2}}});

  rows.push_back({"|1,0>",
                  2,
                  coeffs({0.0, 1.0, 0.0}),
                  {0.0, 1.0, 0.0},
                  {finite(0.0), infinite()},
                  {Spinor(1.0, 0.0), Spinor(0.0, 1.0)},
                  {{"01", 1.0 / r2}, {"10", 1.0 / r2}}});

  std::vector<MajoranaPoint> cube_roots;
  std::vector<Spinor> cube_spinors;
  for (int r = 0; r < 3; ++r) {
    const Complex z = std::polar(1.0, 2.0 * kPi * r / 3.0);
    cube_roots.push_back(finite(z));
    cube_spinors.push_back(equatorial(z));
  }
  rows.push_back({"(|3/2,3/2> + |3/2,-3/2>)/sqrt2",
                  3,
                  coeffs({1.0, 0.0, 0.0, 1.0}),
                  {1.0, 0.0, 0.0, -1.0},
                  cube_roots,
                  cube_spinors,
                  {{"000", 1.0 / r2}, {"111", 1.0 / r2}}});

  std::vector<MajoranaPoint> shifted_roots;
  std::vector<Spinor> shifted_spinors;
  for (int r = 0; r < 3; ++r) {
    const Complex z = std::polar(1.0, 2.0 * kPi * (r - 0.5) / 3.0);
    shifted_roots.push_back(finite(z));
    shifted_spinors.push_back(equatorial(z));
  }
  rows.push_back({"(|3/2,3/2> - |3/2,-3/2>)/sqrt2",
                  3,
                  coeffs({1.0, 0.0, 0.0, -1.0}),
                  {1.0, 0.0, 0.0, 1.0},
                  shifted_roots,
                  shifted_spinors,
                  {{"000", 1.0 / r2}, {"111", -1.0 / r2}}});

  for (const double sign : {1.0, -1.0}) {
    rows.push_back({sign > 0 ? "(|3/2,1/2> + |3/2,-1/2>)/sqrt2" : "(|3/2,1/2> - |3/2,-1/2>)/sqrt2",
                    3,
                    coeffs({0.0, 1.0, sign, 0.0}),
                    {0.0, -sign, 1.0, 0.0},
                    {finite(sign), finite(0.0), infinite()},
                    {Spinor(1.0 / r2, sign / r2), Spinor(1.0, 0.0), Spinor(0.0, 1.0)},
                    {{"001", 1.0 / r6},
                     {"010", 1.0 / r6},
                     {"100", 1.0 / r6},
                     {"011", sign / r6},
                     {"101", sign / r6},
                     {"110", sign / r6}}});
  }

  rows.push_back({"|3/2,-1/2>",
                  3,
                  coeffs({0.0, 0.0, 1.0, 0.0}),
                  {0.0, 1.0, 0.0, 0.0},
                  {finite(0.0), infinite(2)},
                  {Spinor(1.0, 0.0), Spinor(0.0, 1.0), Spinor(0.0, 1.0)},
                  {{"011", 1.0 / r3}, {"101", 1.0 / r3}, {"110", 1.0 / r3}}});
  return rows;
}

std::vector<Table1Check> check_table1(double tol) {
  std::vector<Table1Check> out;
  for (const auto& row : table1_rows()) {
    const SymmetricState s = SymmetricState::from_coefficients(row.coefficients);

    const auto poly = majorana_polynomial(s);
    Vector computed(static_cast<Eigen::Index>(poly.size()));
    Vector expected(static_cast<Eigen::Index>(row.polynomial.size()));
    for (std::size_t i = 0; i < poly.size(); ++i) computed(static_cast<Eigen::Index>(i)) = poly[i];
    for (std::size_t i = 0; i < row.polynomial.size(); ++i) {
      expected(static_cast<Eigen::Index>(i)) = row.polynomial[i];
    }
    const bool poly_ok =
        computed.size() == expected.size() && phase_distance(canonicalize(computed), canonicalize(expected)) <= tol;

    const Constellation c = majorana_points(s);
    const bool roots_ok = match_roots(c, row.roots, tol);
    const bool spinors_ok = match_spinors(c.spinors(), row.spinors, tol);

    const Vector target = canonicalize(dense(row.n, row.expansion));
    const FullState from_points = expand_to_full(state_from_constellation(c));
    const FullState from_spinors = expand_to_full(symmetrize(row.spinors));
    const bool expansion_ok = phase_distance(from_points.amplitudes(), target) <= tol &&
                              phase_distance(from_spinors.amplitudes(), target) <= tol &&
                              phase_distance(expand_to_full(s).amplitudes(), target) <= tol;

    out.push_back({row.label, poly_ok, roots_ok, spinors_ok, expansion_ok});
  }
  return out;
}

bool report_table1(std::ostream& out, double tol) {
  bool all = true;
  const auto mark = [](bool ok) { return ok ? "ok" : "MISMATCH"; };
  for (const auto& check : check_table1(tol)) {
    all = all && check.passed();
    out << (check.passed() ? "PASS " : "FAIL ") << check.label << "  polynomial=" << mark(check.polynomial)
        << " roots=" << mark(check.roots) << " spinors=" << mark(check.spinors)
        << " expansion=" << mark(check.expansion) << '\n';
  }
  out << (all ? "table1: all rows match\n" : "table1: mismatch\n");
  return all;
}

}  // namespace majorana::cli
