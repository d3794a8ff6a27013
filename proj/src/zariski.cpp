#include "semideg/zariski.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semideg/lp.hpp"

namespace semideg {

namespace {

// All nonnegative integer solutions of Omega a = d (one element when Omega is
// invertible, a bounded enumeration otherwise).
std::vector<std::vector<Int>> solve_omega(const SurfaceModel& sm,
                                          const std::vector<Int>& d) {
  size_t N = sm.n();
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N + 1));
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < N; ++j) M[i][j] = Rat(sm.omega[i][j]);
    M[i][N] = Rat(d[i]);
  }
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < N && rank < N; ++col) {
    size_t piv = rank;
    while (piv < N && M[piv][col] == 0) ++piv;
    if (piv == N) continue;
    std::swap(M[piv], M[rank]);
    Rat pv = M[rank][col];
    for (size_t j = col; j <= N; ++j) M[rank][j] /= pv;
    for (size_t i = 0; i < N; ++i) {
      if (i == rank || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (size_t j = col; j <= N; ++j) M[i][j] -= f * M[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < N; ++i)
    if (M[i][N] != 0) return {};
  if (rank == N) {
    std::vector<Int> a(N);
    for (size_t i = 0; i < N; ++i) {
      const Rat& v = M[i][N];
      if (!is_integer(v) || v < 0) return {};
      a[pivot_col[i]] = Int(v.get_num());
    }
    return {a};
  }
  // singular: scan a up to max(d) / smallest positive column sum
  Int mx(0);
  for (const auto& v : d) mx = std::max(mx, v);
  std::optional<Int> minpos;
  for (size_t j = 0; j < N; ++j) {
    Int cs(0);
    for (size_t i = 0; i < N; ++i)
      if (sm.omega[i][j] > 0) cs += sm.omega[i][j];
    if (cs > 0 && (!minpos || cs < *minpos)) minpos = cs;
  }
  if (!minpos || mx < 0) return {};
  long B = to_long(Int(mx / *minpos));
  std::vector<std::vector<Int>> sols;
  std::vector<Int> a(N, Int(0));
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == N) {
      for (size_t i = 0; i < N; ++i) {
        Int di(0);
        for (size_t j = 0; j < N; ++j) di += sm.omega[i][j] * a[j];
        if (di != d[i]) return;
      }
      sols.push_back(a);
      return;
    }
    for (long v = 0; v <= B; ++v) {
      a[k] = v;
      rec(k + 1);
    }
    a[k] = 0;
  };
  rec(0);
  return sols;
}

// Per-index maxima over E_d: the top delta_i value together with the extremes
// of deg_xi and ord_{xi - c_ii} of the leading coefficients over the
// delta_i-maximal tuples.
struct EAggregates {
  bool empty = true;
  std::vector<std::optional<Int>> M;
  std::vector<long> maxdeg, minord, maxord;
};

EAggregates e_aggregates(const SurfaceModel& sm, const std::vector<Int>& d) {
  size_t N = sm.n(), G = sm.gens.size();
  EAggregates ag;
  ag.M.assign(N, std::nullopt);
  ag.maxdeg.assign(N, 0);
  ag.minord.assign(N, 0);
  ag.maxord.assign(N, 0);
  for_each_section(
      sm, d, [&](const std::vector<long>& t, const std::vector<Int>& dv) {
        ag.empty = false;
        for (size_t i = 0; i < N; ++i) {
          long dg = 0, od = 0;
          for (size_t k = 0; k < G; ++k) {
            dg += t[k] * sm.lc_deg[i][k];
            od += t[k] * sm.lc_ord[i][k];
          }
          if (!ag.M[i] || dv[i] > *ag.M[i]) {
            ag.M[i] = dv[i];
            ag.maxdeg[i] = dg;
            ag.minord[i] = od;
            ag.maxord[i] = od;
          } else if (dv[i] == *ag.M[i]) {
            ag.maxdeg[i] = std::max(ag.maxdeg[i], dg);
            ag.minord[i] = std::min(ag.minord[i], od);
            ag.maxord[i] = std::max(ag.maxord[i], od);
          }
        }
      });
  return ag;
}

// First violated condition for candidate a; empty when all four hold.
std::string check_conditions(const SurfaceModel& sm, const std::vector<Int>& d,
                             const EAggregates& ag, const ZariskiData& z) {
  for (size_t i = 0; i < sm.n(); ++i) {
    if (ag.empty || !ag.M[i] || *ag.M[i] != d[i]) return "d-max";
    if (z.m[i] != Int(ag.maxdeg[i])) return "max-xi";
    if (z.mcii[i] != Int(ag.minord[i])) return "min-xi";
    if (z.a[i] * Int(sm.dd[i].fd.p_last) + z.mcii[i] != Int(ag.maxord[i]))
      return "max-order-xi";
  }
  return "";
}

} // namespace

ZariskiData zariski_data(const SurfaceModel& sm, const std::vector<Int>& a) {
  size_t N = sm.n();
  if (a.size() != N) throw InputError("a must have one entry per semidegree");
  for (const auto& v : a)
    if (v < 0) throw InputError("a must be nonnegative");
  ZariskiData z;
  z.a = a;
  z.d.assign(N, Int(0));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) z.d[i] += sm.omega[i][j] * a[j];
  for (size_t i = 0; i < N; ++i) {
    Rat mi(0), mc(0);
    for (size_t i2 : sm.nbhd[i]) {
      Rat term = Rat(sm.dd[i2].fd.p_tilde) * Rat(a[i2]) / Rat(sm.dd[i].fd.p);
      mi += term;
      if (i2 != i && sm.cpow[i].at(i2) == sm.cpow[i].at(i)) mc += term;
    }
    if (!is_integer(mi) || !is_integer(mc))
      throw InternalInvariant("m_i(a) is not an integer");
    z.m.push_back(Int(mi.get_num()));
    z.mcii.push_back(Int(mc.get_num()));
  }
  return z;
}

BpfReport is_bpf_at_infinity(const SurfaceModel& sm,
                             const std::vector<Int>& d) {
  if (d.size() != sm.n()) throw InputError("degree vector length mismatch");
  BpfReport rep;
  auto sols = solve_omega(sm, d);
  if (sols.empty()) {
    rep.violated = "no-a";
    return rep;
  }
  auto ag = e_aggregates(sm, d);
  for (const auto& a : sols) {
    ZariskiData z = zariski_data(sm, a);
    std::string v = check_conditions(sm, d, ag, z);
    if (v.empty()) {
      rep.bpf = true;
      rep.a = a;
      rep.violated.clear();
      return rep;
    }
    if (rep.violated.empty()) {
      rep.violated = v;
      rep.a = a;
    }
  }
  return rep;
}

BpfReport one_place_bpf(const OnePlaceData& od, const std::vector<Int>& d) {
  const SurfaceModel& sm = od.surface;
  if (d.size() != sm.n()) throw InputError("degree vector length mismatch");
  // alpha slot of each generator
  std::vector<size_t> slot(sm.gens.size(), sm.gens.size());
  for (size_t j = 0; j < od.g_gens.size(); ++j) slot[od.g_gens[j]] = j;
  for (size_t g = 0; g < sm.gens.size(); ++g)
    if (slot[g] == sm.gens.size())
      throw InternalInvariant("generator outside the approximate-root family");

  BpfReport rep;
  auto sols = solve_omega(sm, d);
  if (sols.empty()) {
    rep.violated = "no-a";
    return rep;
  }
  size_t N = sm.n();
  EAggregates ag;
  ag.M.assign(N, std::nullopt);
  ag.maxdeg.assign(N, 0);
  ag.minord.assign(N, 0);
  ag.maxord.assign(N, 0);
  std::vector<long> alpha(od.g.size(), 0);
  for_each_section(
      sm, d, [&](const std::vector<long>& t, const std::vector<Int>& dv) {
        ag.empty = false;
        for (size_t g = 0; g < t.size(); ++g) alpha[slot[g]] = t[g];
        auto [mu, nu] = mu_nu(od, alpha);
        for (size_t i = 0; i < N; ++i) {
          long dg = to_long(mu[i]), od2 = to_long(nu[i]);
          if (!ag.M[i] || dv[i] > *ag.M[i]) {
            ag.M[i] = dv[i];
            ag.maxdeg[i] = dg;
            ag.minord[i] = od2;
            ag.maxord[i] = od2;
          } else if (dv[i] == *ag.M[i]) {
            ag.maxdeg[i] = std::max(ag.maxdeg[i], dg);
            ag.minord[i] = std::min(ag.minord[i], od2);
            ag.maxord[i] = std::max(ag.maxord[i], od2);
          }
        }
      });
  for (const auto& a : sols) {
    ZariskiData z = zariski_data(sm, a);
    std::string v = check_conditions(sm, d, ag, z);
    if (v.empty()) {
      rep.bpf = true;
      rep.a = a;
      rep.violated.clear();
      return rep;
    }
    if (rep.violated.empty()) {
      rep.violated = v;
      rep.a = a;
    }
  }
  return rep;
}

MemberResult semigroup_member_bounded(const SurfaceModel& sm,
                                      const std::vector<Int>& d, long bound) {
  size_t N = sm.n();
  if (d.size() != N) throw InputError("degree vector length mismatch");
  if (bound < 0) throw InputError("bound must be nonnegative");
  MemberResult res;
  // u >= 0 with u^T Omega >= 1 bounds the a-scan
  std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
  for (size_t j = 0; j < N; ++j)
    for (size_t i = 0; i < N; ++i) A[j][i] = Rat(sm.omega[i][j]);
  auto u = lp_feasible(A, std::vector<Rat>(N, Rat(1)));
  if (!u) {
    res.verdict = "unknown";
    return res;
  }
  std::vector<Rat> cost(N);
  for (size_t j = 0; j < N; ++j) {
    Rat c(0);
    for (size_t i = 0; i < N; ++i) c += (*u)[i] * Rat(sm.omega[i][j]);
    cost[j] = c;
  }
  Rat budget(0);
  for (size_t i = 0; i < N; ++i) budget += (*u)[i] * Rat(bound);

  // every bpf class inside the box
  std::vector<std::vector<Int>> parts;
  std::set<std::vector<Int>> seen;
  std::vector<Int> a(N, Int(0));
  std::function<void(size_t, Rat)> scan = [&](size_t k, Rat left) {
    if (k == N) {
      std::vector<Int> da(N, Int(0));
      bool zero = true, inbox = true;
      for (size_t i = 0; i < N; ++i) {
        if (a[i] != 0) zero = false;
        for (size_t j = 0; j < N; ++j) da[i] += sm.omega[i][j] * a[j];
        if (da[i] < 0 || da[i] > bound) inbox = false;
      }
      if (zero || !inbox || !seen.insert(da).second) return;
      if (is_bpf_at_infinity(sm, da).bpf) parts.push_back(da);
      return;
    }
    scan(k + 1, left);
    Rat rem = left;
    long cnt = 0;
    while (rem - cost[k] >= 0) {
      rem -= cost[k];
      a[k] = ++cnt;
      scan(k + 1, rem);
    }
    a[k] = 0;
  };
  scan(0, budget);

  for (const auto& g : parts)
    for (const auto& v : g)
      if (v < 0) {
        res.verdict = "unknown"; // search over residuals cannot be exhausted
        return res;
      }

  std::set<std::vector<Int>> dead;
  std::vector<std::vector<Int>> cert;
  std::function<bool(const std::vector<Int>&)> dfs =
      [&](const std::vector<Int>& cur) -> bool {
    bool zero = true;
    for (const auto& v : cur)
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero) return true;
    if (dead.count(cur)) return false;
    for (const auto& g : parts) {
      std::vector<Int> nxt(N);
      bool ok = true;
      for (size_t i = 0; i < N; ++i) {
        nxt[i] = cur[i] - g[i];
        if (nxt[i] < 0) ok = false;
      }
      if (!ok) continue;
      cert.push_back(g);
      if (dfs(nxt)) return true;
      cert.pop_back();
    }
    dead.insert(cur);
    return false;
  };
  if (dfs(d)) {
    res.verdict = "true";
    res.parts = cert;
  } else {
    res.verdict = "false-within-bound";
  }
  return res;
}

EquisingularReport equisingular_compare(const OnePlaceData& A,
                                        const OnePlaceData& B,
                                        const std::vector<Int>& box) {
  if (A.pairs.pairs != B.pairs.pairs)
    throw NotEquisingular("branch Puiseux pairs differ");
  EquisingularReport rep;
  auto& mm = rep.mismatches;
  auto chk = [&](bool ok, const std::string& what) {
    if (!ok && std::find(mm.begin(), mm.end(), what) == mm.end())
      mm.push_back(what);
  };
  const SurfaceModel &sa = A.surface, &sb = B.surface;
  chk(sa.n() == sb.n(), "vertex count");
  if (sa.n() != sb.n()) return rep;
  size_t N = sa.n();
  if (box.size() != N) throw InputError("box length mismatch");
  for (size_t k = 0; k < N; ++k) {
    chk(A.verts[k].kind == B.verts[k].kind &&
            A.verts[k].stage == B.verts[k].stage &&
            A.verts[k].in_b == B.verts[k].in_b,
        "vertex kinds");
    chk(sa.dd[k].delta.r == sb.dd[k].delta.r, "vertex exponents");
    const FormalData &fa = sa.dd[k].fd, &fb = sb.dd[k].fd;
    chk(fa.p == fb.p && fa.pairs == fb.pairs && fa.l == fb.l &&
            fa.p_last == fb.p_last && fa.p_tilde == fb.p_tilde,
        "formal data");
  }
  chk(sa.gens.size() == sb.gens.size(), "generator count");
  if (sa.gens.size() == sb.gens.size())
    for (size_t g = 0; g < sa.gens.size(); ++g)
      chk(sa.gens[g].dvec == sb.gens[g].dvec &&
              sa.gens[g].deg_y == sb.gens[g].deg_y &&
              sa.gens[g].is_x == sb.gens[g].is_x,
          "generator degree data");
  chk(sa.omega == sb.omega, "omega matrix");
  chk(sa.nbhd == sb.nbhd, "neighborhoods");
  bool blocks = true;
  for (size_t i = 0; i < N; ++i) {
    for (size_t i1 : sa.nbhd[i]) {
      if (i1 == i) continue;
      bool ca = sa.cpow[i].at(i1) == sa.cpow[i].at(i);
      bool cb = sb.cpow[i].at(i1) == sb.cpow[i].at(i);
      if (ca != cb) blocks = false;
      for (size_t i2 : sa.nbhd[i]) {
        if (i2 == i) continue;
        bool ea = sa.cpow[i].at(i1) == sa.cpow[i].at(i2);
        bool eb = sb.cpow[i].at(i1) == sb.cpow[i].at(i2);
        if (ea != eb) blocks = false;
      }
    }
  }
  chk(blocks, "c-power blocks");
  chk(sa.lc_deg == sb.lc_deg && sa.lc_ord == sb.lc_ord,
      "leading-coefficient tables");
  chk(A.g_gens == B.g_gens && A.gdeg == B.gdeg, "approximate-root positions");
  rep.structural_match = mm.empty();

  // spot checks: run both pipelines on sampled degrees inside the box
  std::set<std::vector<Int>> spots;
  auto add = [&](const std::vector<Int>& d) {
    for (size_t i = 0; i < N; ++i)
      if (d[i] < 0 || d[i] > box[i]) return;
    spots.insert(d);
  };
  for (size_t k = 0; k < N; ++k) {
    std::vector<Int> col(N), col2(N);
    for (size_t i = 0; i < N; ++i) {
      col[i] = sa.omega[i][k];
      col2[i] = 2 * sa.omega[i][k];
    }
    add(col);
    add(col2);
  }
  Int mn = box[0];
  for (const auto& b : box) mn = std::min(mn, b);
  for (Int c(0); c <= mn; ++c) add(std::vector<Int>(N, c));
  for (const auto& g : sa.gens) add(g.dvec);
  for (size_t g1 = 0; g1 < sa.gens.size(); ++g1)
    for (size_t g2 = g1; g2 < sa.gens.size(); ++g2) {
      std::vector<Int> s(N);
      for (size_t i = 0; i < N; ++i)
        s[i] = sa.gens[g1].dvec[i] + sa.gens[g2].dvec[i];
      add(s);
    }
  rep.spot_match = true;
  for (const auto& d : spots) {
    auto ea = enumerate_sections(sa, d);
    auto eb = enumerate_sections(sb, d);
    auto na = enriques_member(sa, d);
    auto nb = enriques_member(sb, d);
    auto ba = is_bpf_at_infinity(sa, d);
    auto bb = is_bpf_at_infinity(sb, d);
    ++rep.spot_checks;
    if (ea.dim != eb.dim || ea.maxdeg != eb.maxdeg ||
        na.member != nb.member || ba.bpf != bb.bpf ||
        ba.violated != bb.violated) {
      rep.spot_match = false;
      mm.push_back("pipeline disagreement at a spot check");
      break;
    }
  }
  return rep;
}

} // namespace semideg
