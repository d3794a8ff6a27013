#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semideg/oneplace.hpp"
#include "semideg/surface.hpp"

namespace semideg::io {

using json = nlohmann::ordered_json;

// "a/b" in lowest terms with b > 0; bare integers are accepted on input.
Rat parse_rat(const json& j, const std::string& where);
std::string rat_json(const Rat& q);

// coefficient: {"rat":"a/b"} or {"cyc":{"n":n,"terms":[["a/b",k],...]}}
FieldElem parse_coeff(const json& j, const std::string& where);
json coeff_json(const FieldElem& c);

// Dwps: [{"c":coeff,"e":"q/p"},...] with strictly descending exponents.
Dwps parse_dwps(const json& j, const std::string& where);
json dwps_json(const Dwps& s);

// LaurentPoly2: [{"c":coeff,"ex":[a,b]},...], canonical order (b,a) ascending.
LaurentPoly2 parse_poly(const json& j, const std::string& where);
json poly_json(const LaurentPoly2& f);

struct SurfaceFile {
  long version = 1;
  int field_order = 1; // cyclotomic order of the declared coefficient field
  std::vector<std::pair<Dwps, Rat>> semidegrees;
  std::optional<Dwps> branch;
  std::vector<UserCurvette> family; // i already 0-based
};

SurfaceFile parse_surface_file(const std::string& text);
json surface_file_json(const SurfaceFile& sf);
std::string serialize_surface_file(const SurfaceFile& sf);

// Parsed file plus the constructed model (and one-place data for branches).
struct LoadedSurface {
  SurfaceFile file;
  std::vector<Semidegree> ds;
  SurfaceModel model;
  std::optional<OnePlaceData> oneplace;
};

LoadedSurface load_surface(const std::string& text);

// Tiny infix grammar over x, y: rational coefficients, caret powers
// (negative ones on x only), juxtaposition as multiplication.
LaurentPoly2 parse_poly_expr(const std::string& text);

// "6,6" -> vector of exact integers.
std::vector<Int> parse_int_vector(const std::string& text);

} // namespace semideg::io
