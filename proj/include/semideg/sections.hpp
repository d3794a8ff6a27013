#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "semideg/surface.hpp"

namespace semideg {

// A monomial x^{t_0} * prod_k g_k^{t_k} in the section ring, written through
// the generator list of the surface model.
struct SectionItem {
  std::vector<long> t;   // exponent per generator, same order as gens
  std::vector<Int> dvec; // its multidegree
  long a = 0;            // leading monomial x^a y^b
  long b = 0;
};

struct SectionEnum {
  Int dim = 0;
  std::vector<SectionItem> basis;         // one per (a,b), sorted by (b,a)
  std::vector<std::optional<Int>> maxdeg; // M_{d,j}; disengaged iff E_d empty
};

struct EnriquesResult {
  bool member = false;
  std::vector<std::vector<long>> witness; // per-coordinate tuples when member
};

// Walks every exponent tuple t >= 0 with sum_k t_k dvec_k <= d componentwise.
// Throws UnboundedSections when the degree filtration is not finite.
void for_each_section(
    const SurfaceModel& sm, const std::vector<Int>& d,
    const std::function<void(const std::vector<long>&, const std::vector<Int>&)>&
        visit);

SectionEnum enumerate_sections(const SurfaceModel& sm,
                               const std::vector<Int>& d);

EnriquesResult enriques_member(const SurfaceModel& sm,
                               const std::vector<Int>& d);

// Smallest subset of {u : 0 <= u <= box} containing 0 and the box-restricted
// generators and closed under + and coordinatewise max (inside the box).
std::set<std::vector<Int>> tropical_closure(
    const std::vector<std::vector<Int>>& gens, const std::vector<Int>& box);

bool tropical_member(const std::vector<std::vector<Int>>& gens,
                     const std::vector<Int>& box, const std::vector<Int>& d);

} // namespace semideg
