#include "qschur/json_io.hpp"

#include <cstdint>

namespace qschur {

namespace {

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string("expected a number for ") + what);
  return j.get<double>();
}

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InputError("a quaternion is an array [w, x, y, z]");
  return {number_at(j[0], "w"), number_at(j[1], "x"), number_at(j[2], "y"), number_at(j[3], "z")};
}

json to_json(const QMatrix& m) {
  json entries = json::array();
  for (const Quaternion& q : m.entries()) entries.push_back(to_json(q));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

QMatrix qmatrix_from_json(const json& j) {
  if (!j.is_object()) throw InputError("a matrix is an object with rows/cols/entries");
  const auto rows = field(j, "rows").get<std::size_t>();
  const auto cols = field(j, "cols").get<std::size_t>();
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw InputError("matrix entries must hold rows*cols quaternions");
  std::vector<Quaternion> e;
  e.reserve(entries.size());
  for (const json& q : entries) e.push_back(quaternion_from_json(q));
  return QMatrix(rows, cols, std::move(e));
}

json to_json(const LSeries& f) {
  json coeffs = json::array();
  for (int n = 0; n <= f.degree(); ++n) coeffs.push_back(to_json(f.coeff(n)));
  return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

LSeries lseries_from_json(const json& j) {
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw InputError("series coeffs must be a nonempty array");
  std::vector<Quaternion> c;
  c.reserve(coeffs.size());
  for (const json& q : coeffs) c.push_back(quaternion_from_json(q));
  if (j.contains("degree") && field(j, "degree").get<std::size_t>() + 1 != c.size())
    throw InputError("series degree does not match the coefficient count");
  return LSeries(std::move(c));
}

json to_json(const MatSeries& f) {
  json coeffs = json::array();
  for (int n = 0; n <= f.degree(); ++n) coeffs.push_back(to_json(f.coeff(n)));
  return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

MatSeries matseries_from_json(const json& j) {
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) throw InputError("series coeffs must be a nonempty array");
  std::vector<QMatrix> c;
  c.reserve(coeffs.size());
  for (const json& q : coeffs) c.push_back(qmatrix_from_json(q));
  return MatSeries(std::move(c));
}

json to_json(const KernelSeries& k) {
  json grid = json::array();
  for (int m = 0; m <= k.degree(); ++m) {
    json row = json::array();
    for (int n = 0; n <= k.degree(); ++n) row.push_back(to_json(k.coeff(m, n)));
    grid.push_back(std::move(row));
  }
  return json{{"degree", k.degree()}, {"dim", k.dim()}, {"coeffs", std::move(grid)}};
}

KernelSeries kernel_from_json(const json& j) {
  const int degree = static_cast<int>(field(j, "degree").get<std::size_t>());
  const auto dim = field(j, "dim").get<std::size_t>();
  const json& grid = field(j, "coeffs");
  if (!grid.is_array() || grid.size() != static_cast<std::size_t>(degree) + 1)
    throw InputError("kernel coeffs must hold degree+1 rows");
  std::vector<QMatrix> cells;
  cells.reserve((degree + 1) * (degree + 1));
  for (const json& row : grid) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(degree) + 1)
      throw InputError("kernel coefficient rows must hold degree+1 matrices");
    for (const json& cell : row) cells.push_back(qmatrix_from_json(cell));
  }
  return KernelSeries::from_grid(degree, dim, std::move(cells));
}

ZeroSet zeroset_from_json(const json& j) {
  ZeroSet z;
  if (j.contains("points"))
    for (const json& p : field(j, "points")) {
      const Quaternion a = quaternion_from_json(field(p, "a"));
      const int mult = p.contains("mult") ? p["mult"].get<int>() : 1;
      if (a.norm() < 1e-14)
        z.origin_mult += mult;
      else
        z.points.push_back({a, mult});
    }
  if (j.contains("spheres"))
    for (const json& s : field(j, "spheres")) {
      const double re = number_at(field(s, "re"), "re");
      const double im = number_at(field(s, "im"), "im");
      const int mult = s.contains("mult") ? s["mult"].get<int>() : 1;
      if (!(im > 0)) throw InputError("sphere \"im\" must be strictly positive");
      z.spheres.push_back({TwoSphere(re, im), mult});
    }
  return z;
}

json to_json(const ZeroSet& z) {
  json points = json::array();
  for (const PointZero& p : z.points) points.push_back(json{{"a", to_json(p.a)}, {"mult", p.mult}});
  if (z.origin_mult > 0)
    points.push_back(json{{"a", to_json(Quaternion(0))}, {"mult", z.origin_mult}});
  json spheres = json::array();
  for (const SphereZero& s : z.spheres)
    spheres.push_back(json{{"re", s.sphere.re}, {"im", s.sphere.im_norm}, {"mult", s.mult}});
  return json{{"points", std::move(points)}, {"spheres", std::move(spheres)}};
}

InterpProblem interp_problem_from_json(const json& j) {
  InterpProblem p;
  if (j.contains("points"))
    for (const json& q : field(j, "points")) p.points.push_back(quaternion_from_json(q));
  if (j.contains("spheres"))
    for (const json& s : field(j, "spheres")) {
      const double re = number_at(field(s, "re"), "re");
      const double im = number_at(field(s, "im"), "im");
      if (!(im > 0)) throw InputError("sphere \"im\" must be strictly positive");
      p.spheres.push_back(TwoSphere(re, im));
    }
  return p;
}

json to_json(const InterpProblem& p) {
  json points = json::array();
  for (const Quaternion& q : p.points) points.push_back(to_json(q));
  json spheres = json::array();
  for (const TwoSphere& s : p.spheres) spheres.push_back(json{{"re", s.re}, {"im", s.im_norm}});
  return json{{"points", std::move(points)}, {"spheres", std::move(spheres)}};
}

json to_json(const InterpSolution& s) {
  json nodes = json::array();
  for (const Quaternion& q : s.nodes) nodes.push_back(to_json(q));
  return json{{"problem", to_json(s.problem)},
              {"nodes", std::move(nodes)},
              {"A", to_json(s.a)},
              {"c", to_json(s.c_row)},
              {"P", to_json(s.p)},
              {"b", to_json(s.b)},
              {"d", to_json(s.d)},
              {"B", to_json(s.multiplier)},
              {"diagnostics",
               json{{"stein_residual", s.diagnostics.stein_residual},
                    {"isometry_residual", s.diagnostics.isometry_residual},
                    {"unitary_residual", s.diagnostics.unitary_residual},
                    {"max_node_residual", s.diagnostics.max_node_residual},
                    {"node_tail_bound", s.diagnostics.node_tail_bound},
                    {"bschur_residual", s.diagnostics.bschur_residual}}}};
}

UnitaryColligation colligation_from_json(const json& j) {
  UnitaryColligation c;
  c.a = qmatrix_from_json(field(j, "A"));
  c.b = qmatrix_from_json(field(j, "B"));
  c.c = qmatrix_from_json(field(j, "C"));
  c.d = qmatrix_from_json(field(j, "D"));
  c.h = j.contains("H") ? qmatrix_from_json(j["H"]) : QMatrix::identity(c.a.rows());
  c.j1 = j.contains("J1") ? qmatrix_from_json(j["J1"]) : QMatrix::identity(c.b.cols());
  c.j2 = j.contains("J2") ? qmatrix_from_json(j["J2"]) : QMatrix::identity(c.c.rows());
  return c;
}

json to_json(const UnitaryColligation& c) {
  return json{{"A", to_json(c.a)}, {"B", to_json(c.b)},   {"C", to_json(c.c)},
              {"D", to_json(c.d)}, {"H", to_json(c.h)},   {"J1", to_json(c.j1)},
              {"J2", to_json(c.j2)}};
}

CaraColligation cara_colligation_from_json(const json& j) {
  CaraColligation c;
  c.v = qmatrix_from_json(field(j, "V"));
  c.c = qmatrix_from_json(field(j, "C"));
  c.j = j.contains("J") ? qmatrix_from_json(j["J"]) : QMatrix::identity(c.c.rows());
  c.phi0 = j.contains("phi0") ? qmatrix_from_json(j["phi0"])
                              : QMatrix(0.5 * (c.c * c.c.adjoint() * c.j));
  return c;
}

json to_json(const CaraColligation& c) {
  return json{{"V", to_json(c.v)}, {"C", to_json(c.c)}, {"J", to_json(c.j)},
              {"phi0", to_json(c.phi0)}};
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace qschur
