#pragma once

#include <vector>

#include "semideg/laurent.hpp"
#include "semideg/semidegree.hpp"

namespace semideg {

// Key forms of a semidegree, starting with x, y. The last entry is the final
// key form; it is polynomial exactly when the semidegree lies in S_pol.
std::vector<LaurentPoly2> key_forms(const Semidegree& d);

// A conjugacy class of roots at infinity of f, expanded down to `depth`.
// `mult` is the number of roots of f (with multiplicity) sharing the
// representative; `size` is the number of distinct conjugates of it.
struct RootClass {
  Dwps rep;
  long mult = 1;
  long size = 1;
  bool exact = true;
};

std::vector<RootClass> dwps_roots(const LaurentPoly2& f, const Rat& depth);

struct SurfaceClass {
  bool in_s_pol = false;
  bool in_s_num = false;
  bool in_s_pol_plus = false;
};

// Classification of the compactification defined by a tuple of semidegrees.
SurfaceClass classify(const std::vector<Semidegree>& ds);

} // namespace semideg
