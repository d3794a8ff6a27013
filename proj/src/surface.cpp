#include "semideg/surface.hpp"

#include <string>

#include "semideg/errors.hpp"

namespace semideg {

namespace {

// Checks a user curvette against its defining conditions: a polynomial with
// constant leading y-coefficient whose roots form a single conjugacy class of
// multiplicity one agreeing with the semidegree series above radii[j].
void validate_curvette(const DeltaData& dd, size_t i, size_t j,
                       const LaurentPoly2& P) {
  auto fail = [&](const std::string& why) {
    throw InvalidFamily("family entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j) + "): " + why);
  };
  if (P.is_zero() || !P.is_polynomial()) fail("not a nonzero polynomial");
  auto top = P.coeff_y(P.deg_y());
  if (top.size() != 1 || top.begin()->first != 0)
    fail("leading y-coefficient is not a constant");
  const Rat& rj = dd.radii[j];
  Dwps target = dd.delta.phi.truncate_above(rj);
  if (P.deg_y() != target.polydromy()) fail("wrong y-degree");
  auto classes = dwps_roots(P, rj - 1);
  if (classes.size() != 1 || classes[0].mult != 1)
    fail("roots do not form a single conjugacy class of multiplicity one");
  bool agrees = false;
  for (const Dwps& psi : conjugates(classes[0].rep))
    if (psi.truncate_above(rj) == target) {
      agrees = true;
      break;
    }
  if (!agrees) fail("root disagrees with the semidegree series");
}

SurfaceModel build_impl(const std::vector<Semidegree>& ds,
                        const std::vector<std::vector<LaurentPoly2>>* user) {
  if (ds.empty()) throw InputError("at least one semidegree is required");
  SurfaceModel sm;
  size_t N = ds.size();
  for (size_t i = 0; i < N; ++i) {
    DeltaData dd;
    dd.delta = make_semidegree(ds[i].phi, ds[i].r);
    dd.fd = formal_data(dd.delta);
    PuiseuxData pd = analyze(dd.delta.phi);
    dd.radii = pd.char_exps;
    dd.radii.push_back(dd.delta.r);
    if (user) {
      if ((*user)[i].size() != dd.radii.size())
        throw InvalidFamily("family for semidegree " + std::to_string(i + 1) +
                            " must have " + std::to_string(dd.radii.size()) +
                            " entries");
      for (size_t j = 0; j < dd.radii.size(); ++j) {
        validate_curvette(dd, i, j, (*user)[i][j]);
        dd.f.push_back((*user)[i][j]);
      }
    } else {
      for (size_t j = 0; j < dd.radii.size(); ++j) {
        Semidegree dij = truncated_semidegree(dd.delta.phi, dd.radii[j]);
        LaurentPoly2 last = key_forms(dij).back();
        if (!last.is_polynomial())
          throw NotInSpol("curvette (" + std::to_string(i + 1) + "," +
                          std::to_string(j) + ") is not a polynomial");
        dd.f.push_back(last);
      }
    }
    sm.dd.push_back(std::move(dd));
  }

  // neighborhoods
  sm.nbhd.assign(N, {});
  for (size_t i = 0; i < N; ++i) {
    for (size_t i2 = 0; i2 < N; ++i2) {
      if (!(sm.dd[i2].delta.r <= sm.dd[i].delta.r)) continue;
      bool near = false;
      for (const Dwps& psi : conjugates(sm.dd[i2].delta.phi)) {
        Dwps diff = psi - sm.dd[i].delta.phi;
        if (deg_le(diff.deg(), sm.dd[i].delta.r)) {
          near = true;
          break;
        }
      }
      if (near) sm.nbhd[i].insert(i2);
    }
  }

  // Omega
  sm.omega.assign(N, std::vector<Int>(N, Int(0)));
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < N; ++j) {
      const LaurentPoly2& fj = sm.dd[j].f.back();
      long pl = sm.dd[j].fd.p_last;
      if (sm.nbhd[j].count(i) == 0) {
        std::optional<Int> v = eval(sm.dd[i].delta, fj);
        if (!v) throw InternalInvariant("curvette evaluates to -inf");
        sm.omega[i][j] = Int(pl) * *v;
      } else {
        std::optional<Int> v = eval(sm.dd[j].delta, fj);
        if (!v) throw InternalInvariant("curvette evaluates to -inf");
        Rat val = Rat(pl) * Rat(sm.dd[i].fd.p_tilde) * Rat(*v) /
                  Rat(sm.dd[j].fd.p_tilde);
        if (val.get_den() != 1)
          throw InternalInvariant("omega entry is not an integer");
        sm.omega[i][j] = Int(val.get_num());
      }
    }
  }

  // c_pow and c_self
  sm.cpow.assign(N, {});
  for (size_t i = 0; i < N; ++i) {
    long m = sm.dd[i].fd.p_last;
    for (size_t i2 : sm.nbhd[i]) {
      XiPoly L = lc(sm.dd[i].delta, sm.dd[i2].f.back());
      auto sh = xi_shape(L, m);
      if (!sh)
        throw InternalInvariant("leading coefficient is not of power shape");
      sm.cpow[i][i2] = sh->c;
      if (i2 == i) sm.dd[i].c_self = (m == 1) ? sh->c : FieldElem(0L);
    }
  }

  // generators: x, then curvettes in (i, j) order, deduplicated
  sm.fam.assign(N, {});
  auto add_gen = [&](const LaurentPoly2& p, bool is_x) -> size_t {
    for (size_t g = 0; g < sm.gens.size(); ++g)
      if (sm.gens[g].poly == p) return g;
    SurfaceGen gen;
    gen.poly = p;
    gen.is_x = is_x;
    gen.deg_y = p.deg_y();
    for (size_t i = 0; i < N; ++i) {
      std::optional<Int> v = eval(sm.dd[i].delta, p);
      if (!v) throw InternalInvariant("generator evaluates to -inf");
      gen.dvec.push_back(*v);
    }
    sm.gens.push_back(std::move(gen));
    return sm.gens.size() - 1;
  };
  add_gen(LaurentPoly2::var_x(), true);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < sm.dd[i].f.size(); ++j)
      sm.fam[i].push_back(add_gen(sm.dd[i].f[j], false));

  // leading coefficient tables
  sm.lc_deg.assign(N, std::vector<long>(sm.gens.size(), 0));
  sm.lc_ord.assign(N, std::vector<long>(sm.gens.size(), 0));
  for (size_t i = 0; i < N; ++i) {
    for (size_t g = 0; g < sm.gens.size(); ++g) {
      XiPoly L = lc(sm.dd[i].delta, sm.gens[g].poly);
      sm.lc_deg[i][g] = L.is_const() ? 0 : L.deg();
      sm.lc_ord[i][g] = L.ord_at(sm.dd[i].c_self);
    }
  }
  return sm;
}

} // namespace

SurfaceModel build_surface(const std::vector<Semidegree>& ds) {
  return build_impl(ds, nullptr);
}

SurfaceModel build_surface(const std::vector<Semidegree>& ds,
                           const std::vector<UserCurvette>& family) {
  std::vector<std::vector<LaurentPoly2>> table(ds.size());
  std::vector<std::vector<bool>> seen(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    size_t li = analyze(ds[i].phi).char_exps.size();
    table[i].resize(li + 1);
    seen[i].assign(li + 1, false);
  }
  for (const auto& uc : family) {
    if (uc.i >= ds.size() || uc.j >= table[uc.i].size())
      throw InvalidFamily("family entry (" + std::to_string(uc.i + 1) + "," +
                          std::to_string(uc.j) + ") is out of range");
    if (seen[uc.i][uc.j])
      throw InvalidFamily("family entry (" + std::to_string(uc.i + 1) + "," +
                          std::to_string(uc.j) + ") given twice");
    seen[uc.i][uc.j] = true;
    table[uc.i][uc.j] = uc.poly;
  }
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = 0; j < seen[i].size(); ++j)
      if (!seen[i][j])
        throw InvalidFamily("family entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j) + ") is missing");
  return build_impl(ds, &table);
}

} // namespace semideg
