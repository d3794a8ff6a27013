#pragma once

#include <map>
#include <set>
#include <vector>

#include "semideg/keyforms.hpp"
#include "semideg/semidegree.hpp"

namespace semideg {

// Per-semidegree data of a surface model.
struct DeltaData {
  Semidegree delta;
  FormalData fd;
  std::vector<Rat> radii;      // characteristic exponents of phi, then r
  std::vector<LaurentPoly2> f; // curvettes f_{i,0..l_i}
  FieldElem c_self;            // c_ii
};

struct SurfaceGen {
  LaurentPoly2 poly;
  std::vector<Int> dvec; // delta_i(poly) for every i
  long deg_y = 0;
  bool is_x = false;
};

struct SurfaceModel {
  std::vector<DeltaData> dd;
  std::vector<std::set<size_t>> nbhd;            // N_i, includes i
  std::vector<std::map<size_t, FieldElem>> cpow; // c_pow(i, i') over N_i
  std::vector<std::vector<Int>> omega;           // Omega matrix
  std::vector<SurfaceGen> gens;                  // x then deduped curvettes
  std::vector<std::vector<size_t>> fam;          // fam[i][j] -> index in gens
  std::vector<std::vector<long>> lc_deg;         // [i][gen] deg_xi lc_i(gen)
  std::vector<std::vector<long>> lc_ord;         // [i][gen] ord at c_ii

  size_t n() const { return dd.size(); }
};

// One user-supplied curvette; i indexes the semidegree, 0 <= j <= l_i.
struct UserCurvette {
  size_t i = 0;
  size_t j = 0;
  LaurentPoly2 poly;
};

// Builds the full model; throws NotInSpol when some curvette fails to be
// polynomial.
SurfaceModel build_surface(const std::vector<Semidegree>& ds);

// Same, but with a complete user family replacing the generated curvettes.
// Every entry is validated (irreducible with one place at infinity, matching
// truncation) via dwps_roots; failures throw InvalidFamily.
SurfaceModel build_surface(const std::vector<Semidegree>& ds,
                           const std::vector<UserCurvette>& family);

} // namespace semideg
