#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qschur/blaschke.hpp"
#include "qschur/interp.hpp"
#include "qschur/kernels.hpp"
#include "qschur/realize.hpp"

namespace qschur {

using json = nlohmann::json;

// Quaternion <-> [w, x, y, z]; doubles round-trip bit-exactly.
json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

// QMatrix <-> {"rows": n, "cols": m, "entries": [[w,x,y,z], ...]} row-major.
json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

// Series <-> {"degree": N, "coeffs": [coeff, ...]}; scalar coefficients are
// quaternion arrays, matrix coefficients are QMatrix objects.
json to_json(const LSeries& f);
LSeries lseries_from_json(const json& j);
json to_json(const MatSeries& f);
MatSeries matseries_from_json(const json& j);

// KernelSeries <-> {"degree": N, "dim": d, "coeffs": [[matrix, ...], ...]}.
json to_json(const KernelSeries& k);
KernelSeries kernel_from_json(const json& j);

struct ZeroSet {
  std::vector<PointZero> points;
  std::vector<SphereZero> spheres;
  int origin_mult = 0;
};

// {"points": [{"a": [w,x,y,z], "mult": m}, ...],
//  "spheres": [{"re": r, "im": s, "mult": m}, ...]}
// A point with a = 0 is folded into origin_mult.
ZeroSet zeroset_from_json(const json& j);
json to_json(const ZeroSet& z);

// {"points": [[w,x,y,z], ...], "spheres": [{"re": r, "im": s}, ...]}
InterpProblem interp_problem_from_json(const json& j);
json to_json(const InterpProblem& p);
json to_json(const InterpSolution& s);

// {"A":..., "B":..., "C":..., "D":..., "H":..., "J1":..., "J2":...}
UnitaryColligation colligation_from_json(const json& j);
json to_json(const UnitaryColligation& c);

// {"V":..., "C":..., "J":..., "phi0":...}
CaraColligation cara_colligation_from_json(const json& j);
json to_json(const CaraColligation& c);

// FNV-1a 64 of the raw bytes, as 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace qschur
