#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semideg/oneplace.hpp"
#include "semideg/sections.hpp"

namespace semideg {

struct ZariskiData {
  std::vector<Int> a;
  std::vector<Int> d;    // d(a) = Omega a
  std::vector<Int> m;    // m_i(a)
  std::vector<Int> mcii; // m_{i,c_ii}(a)
};

ZariskiData zariski_data(const SurfaceModel& sm, const std::vector<Int>& a);

struct BpfReport {
  bool bpf = false;
  std::string violated; // d-max / max-xi / min-xi / max-order-xi / no-a
  std::optional<std::vector<Int>> a;
};

BpfReport is_bpf_at_infinity(const SurfaceModel& sm,
                             const std::vector<Int>& d);

// Same decision through the mu/nu formulas of the one-place construction;
// must agree with is_bpf_at_infinity on od.surface.
BpfReport one_place_bpf(const OnePlaceData& od, const std::vector<Int>& d);

struct MemberResult {
  std::string verdict;                 // true / false-within-bound / unknown
  std::vector<std::vector<Int>> parts; // certificate when verdict == "true"
};

MemberResult semigroup_member_bounded(const SurfaceModel& sm,
                                      const std::vector<Int>& d, long bound);

struct EquisingularReport {
  bool structural_match = false;
  std::vector<std::string> mismatches;
  long spot_checks = 0;
  bool spot_match = false;
};

// Index-preserving comparison of two one-place surfaces with the same
// Puiseux pairs: a structural certificate (degree data, Omega, neighborhoods,
// leading-coefficient tables) plus pipeline spot checks inside the box.
EquisingularReport equisingular_compare(const OnePlaceData& A,
                                        const OnePlaceData& B,
                                        const std::vector<Int>& box);

} // namespace semideg
