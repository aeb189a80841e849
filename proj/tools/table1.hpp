#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <majorana/constellation.hpp>

namespace majorana::cli {

/// One example state of the two- and three-qubit Majorana table.
struct Table1Row {
  std::string label;
  int n;
  /// Dicke coefficients c_l (l = number of |1> qubits), not necessarily normalized.
  Vector coefficients;
  /// Expected Majorana polynomial in ascending powers, up to an overall factor.
  std::vector<Complex> polynomial;
  /// Expected roots with multiplicities.
  std::vector<MajoranaPoint> roots;
  /// Expected constituent spinors, each up to phase.
  std::vector<Spinor> spinors;
  /// Expected symmetrized state in the qubit basis as (bitstring, amplitude).
  std::vector<std::pair<std::string, Complex>> expansion;
};

std::vector<Table1Row> table1_rows();

struct Table1Check {
  std::string label;
  bool polynomial;
  bool roots;
  bool spinors;
  bool expansion;
  bool passed() const { return polynomial && roots && spinors && expansion; }
};

/// Recomputes every row and compares against the expected entries within tol.
std::vector<Table1Check> check_table1(double tol = 1e-9);

/// Writes one line per row; returns true when every row matches.
bool report_table1(std::ostream& out, double tol = 1e-9);

}  // namespace majorana::cli
