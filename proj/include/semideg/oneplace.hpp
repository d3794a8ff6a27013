#pragma once

#include <optional>
#include <vector>

#include "semideg/surface.hpp"

namespace semideg {

enum class VertexKind { gamma0, free_v, satellite, charv, tail };

struct OnePlaceVertex {
  Semidegree delta;
  VertexKind kind = VertexKind::gamma0;
  long stage = 0; // 1..s for walk vertices, s+1 for tail, 0 for gamma0
  bool in_b = false;
};

// Dual graph data of the compactification attached to a one-place branch.
struct OnePlaceData {
  Dwps branch;
  LaurentPoly2 mp; // minimal polynomial of the branch
  PuiseuxData pairs;
  std::vector<OnePlaceVertex> verts; // generation order, gamma0 first
  SurfaceModel surface;              // same vertex order
  std::vector<LaurentPoly2> g;       // g_0 = x, ..., g_{s+1} = mp
  std::vector<size_t> g_gens;        // positions of the g_j in surface.gens
  std::vector<long> gdeg;            // total degrees of the g_j
  std::vector<size_t> char_idx;      // j_q per stage q = 1..s
  std::vector<size_t> bottom_idx;    // i_q per stage
  std::vector<std::vector<size_t>> verticals; // per stage, downward order
  Rat rho_stop;

  long s() const { return static_cast<long>(char_idx.size()); }
};

// Requires deg(phi) <= 1 and a polynomial minimal polynomial.
OnePlaceData from_one_place_branch(const Dwps& phi);

// Per-vertex (mu, nu) of the monomial prod g_j^{alpha_j}; alpha has one entry
// per g_j. Cross-checked against the combinatorial case formulas.
std::pair<std::vector<Int>, std::vector<Int>> mu_nu(
    const OnePlaceData& od, const std::vector<long>& alpha);

} // namespace semideg
