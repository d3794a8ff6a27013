#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semideg/dwps.hpp"
#include "semideg/laurent.hpp"
#include "semideg/rat.hpp"
#include "semideg/xipoly.hpp"

namespace semideg {

// Semidegree at infinity determined by a center phi and a radius r with
// r strictly below every exponent of phi.
struct Semidegree {
  Dwps phi;
  Rat r;
};

// Validates the exponent condition.
Semidegree make_semidegree(const Dwps& phi, const Rat& r);
// ([phi]_{> r}, r), always valid.
Semidegree truncated_semidegree(const Dwps& phi, const Rat& r);

bool operator==(const Semidegree& a, const Semidegree& b);

struct FormalData {
  long p = 1;                             // polydromy of phi
  std::vector<std::pair<Int, Int>> pairs; // genuine pairs then the formal pair
  long l = 0;                             // number of genuine pairs
  long p_last = 1;                        // pairs.back().second
  long p_tilde = 1;                       // p * p_last
};

FormalData formal_data(const Semidegree& d);

// f(x, phi + xi x^r) collected by x-exponent.
using XiSeries = std::map<Rat, XiPoly>;
XiSeries substitute(const Semidegree& d, const LaurentPoly2& f);

struct EvalResult {
  std::optional<Int> value; // p_tilde * deg_x of the substitution; nullopt = -inf
  Rat norm;                 // deg_x itself (meaningful only when value is set)
  XiPoly lc;                // leading xi-coefficient (zero polynomial for f = 0)
};

EvalResult eval_full(const Semidegree& d, const LaurentPoly2& f);
std::optional<Int> eval(const Semidegree& d, const LaurentPoly2& f);
XiPoly lc(const Semidegree& d, const LaurentPoly2& f);

std::string semidegree_str(const Semidegree& d);

} // namespace semideg
