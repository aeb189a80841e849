#include "majorana/json_io.hpp"

#include <string>

namespace majorana {

using nlohmann::json;

namespace {

json parts(const Vector& v, bool imag) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(imag ? v(i).imag() : v(i).real());
  return out;
}

const json& field(const json& doc, const char* name) {
  require(doc.is_object(), "expected a JSON object");
  const auto it = doc.find(name);
  require(it != doc.end(), std::string("missing field \"") + name + "\"");
  return *it;
}

double number(const json& v, const char* what) {
  require(v.is_number(), std::string(what) + " must be numeric");
  return v.get<double>();
}

int integer(const json& v, const char* what) {
  require(v.is_number_integer(), std::string(what) + " must be an integer");
  return v.get<int>();
}

Vector read_vector(const json& doc) {
  const json& re = field(doc, "re");
  const json& im = field(doc, "im");
  require(re.is_array() && im.is_array() && re.size() == im.size(), "\"re\" and \"im\" must be arrays of equal length");
  Vector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = Complex(number(re[i], "re entry"), number(im[i], "im entry"));
  }
  return v;
}

}  // namespace

json to_json(const SymmetricState& s) {
  return {{"n", s.qubits()}, {"basis", "dicke"}, {"re", parts(s.coefficients(), false)},
          {"im", parts(s.coefficients(), true)}};
}

json to_json(const FullState& f) {
  return {{"n", f.qubits()}, {"basis", "computational"}, {"re", parts(f.amplitudes(), false)},
          {"im", parts(f.amplitudes(), true)}};
}

json to_json(const Constellation& c) {
  json points = json::array();
  for (const auto& p : c.points()) {
    points.push_back({{"alpha", p.root.alpha()}, {"beta", p.root.beta()}, {"mult", p.multiplicity}});
  }
  return {{"n", c.total()}, {"points", points}};
}

json to_json(const DensityMatrix& rho) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    const Vector row = rho.entries().row(r).transpose();
    re.push_back(parts(row, false));
    im.push_back(parts(row, true));
  }
  return {{"dim", rho.dim()},
          {"basis", rho.basis() == BasisKind::Symmetric ? "symmetric" : "computational"},
          {"k", rho.kept()},
          {"re", re},
          {"im", im}};
}

json to_json(const DegeneracyConfiguration& d) {
  return {{"label", d.label()}, {"multiplicities", d.multiplicities()}, {"diversity", d.diversity()}};
}

json to_json(const CoherentPoint& p) { return {{"alpha", p.alpha()}, {"beta", p.beta()}}; }

json to_json(const EntanglementReport& r) {
  json cpps = json::array();
  for (const auto& p : r.cpps) cpps.push_back(to_json(p));
  json out = {{"eg", r.eg}, {"log_eg", r.log_eg}, {"cpps", cpps}, {"ring", r.ring}};
  if (r.landscape) {
    json rows = json::array();
    for (const auto& s : *r.landscape) rows.push_back({s.alpha, s.beta, s.value});
    out["landscape"] = rows;
  }
  return out;
}

Constellation constellation_from_json(const json& doc) {
  const int n = integer(field(doc, "n"), "n");
  const json& pts = field(doc, "points");
  require(pts.is_array() && !pts.empty(), "\"points\" must be a non-empty array");
  std::vector<MajoranaPoint> points;
  for (const auto& p : pts) {
    const int mult = integer(field(p, "mult"), "mult");
    require(mult >= 1, "multiplicities must be positive");
    points.push_back({ProjectiveRoot::from_angles(number(field(p, "alpha"), "alpha"), number(field(p, "beta"), "beta")),
                      mult});
  }
  Constellation c(std::move(points));
  require(c.total() == n, "multiplicities must sum to n");
  return c;
}

AnyState state_from_json(const json& doc) {
  require(doc.is_object(), "expected a JSON object");
  if (doc.contains("points")) return state_from_constellation(constellation_from_json(doc));
  const int n = integer(field(doc, "n"), "n");
  require(n >= 1, "n must be positive");
  const json& basis = field(doc, "basis");
  require(basis.is_string(), "\"basis\" must be a string");
  const Vector v = read_vector(doc);
  if (basis == "dicke") {
    require(v.size() == n + 1, "a Dicke-basis state needs n+1 coefficients");
    return SymmetricState::from_coefficients(v);
  }
  require(basis == "computational", "\"basis\" must be \"dicke\" or \"computational\"");
  require(n <= kMaxDenseQubits, "too many qubits for a computational-basis state");
  require(v.size() == (Eigen::Index{1} << n), "a computational-basis state needs 2^n amplitudes");
  return FullState::from_amplitudes(v);
}

SymmetricState symmetric_from_json(const json& doc, double tol) {
  const AnyState any = state_from_json(doc);
  if (const auto* s = std::get_if<SymmetricState>(&any)) return *s;
  const auto projection = project_to_symmetric(std::get<FullState>(any));
  require(projection.residual <= tol, "state is not permutation symmetric");
  return projection.state;
}

FullState full_from_json(const json& doc) {
  const AnyState any = state_from_json(doc);
  if (const auto* f = std::get_if<FullState>(&any)) return *f;
  return expand_to_full(std::get<SymmetricState>(any));
}

DensityMatrix density_from_json(const json& doc, double tol) {
  const int dim = integer(field(doc, "dim"), "dim");
  const int k = integer(field(doc, "k"), "k");
  const json& basis = field(doc, "basis");
  require(basis == "symmetric" || basis == "computational", "\"basis\" must be \"symmetric\" or \"computational\"");
  const json& re = field(doc, "re");
  const json& im = field(doc, "im");
  require(dim >= 1 && re.is_array() && im.is_array() && static_cast<int>(re.size()) == dim &&
              static_cast<int>(im.size()) == dim,
          "\"re\" and \"im\" must be dim x dim arrays");
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    require(re[r].is_array() && im[r].is_array() && static_cast<int>(re[r].size()) == dim &&
                static_cast<int>(im[r].size()) == dim,
            "\"re\" and \"im\" must be dim x dim arrays");
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(number(re[r][c], "re entry"), number(im[r][c], "im entry"));
  }
  return DensityMatrix(std::move(m), basis == "symmetric" ? BasisKind::Symmetric : BasisKind::Computational, k, tol);
}

}  // namespace majorana
