#include "semideg/oneplace.hpp"

#include <algorithm>

#include "semideg/errors.hpp"
#include "semideg/keyforms.hpp"

namespace semideg {

OnePlaceData from_one_place_branch(const Dwps& phi) {
  if (phi.deg() && *phi.deg() > 1)
    throw InputError("branch degree exceeds 1");
  OnePlaceData od;
  od.branch = phi;
  od.mp = minpoly(phi);
  if (!od.mp.is_polynomial())
    throw InputError("the minimal polynomial of the branch is not a polynomial");
  od.pairs = analyze(phi);
  long s = static_cast<long>(od.pairs.pairs.size());
  long p = od.pairs.p;

  auto push = [&](const Rat& rho, const Rat& window, VertexKind k, long stage) {
    Rat cut = std::max(rho, window);
    OnePlaceVertex v;
    v.delta = Semidegree{phi.truncate_above(cut), rho};
    v.kind = k;
    v.stage = stage;
    od.verts.push_back(std::move(v));
  };

  push(Rat(1), Rat(1), VertexKind::gamma0, 0);

  Int D = 1;
  for (long q = 1; q <= s; ++q) {
    Int qq = od.pairs.pairs[static_cast<size_t>(q - 1)].first;
    Int pp = od.pairs.pairs[static_cast<size_t>(q - 1)].second;
    Rat ej = od.pairs.char_exps[static_cast<size_t>(q - 1)];
    Int lo_n = -1, lo_d = 0;
    Int hi_n = (q == 1) ? Int(1) : od.pairs.pairs[static_cast<size_t>(q - 2)].first;
    Int hi_d = 1;
    std::vector<size_t> lo_visits;
    for (int guard = 0; guard < 100000; ++guard) {
      Int mn = lo_n + hi_n, md = lo_d + hi_d;
      Rat rho = Rat(mn) / (Rat(md) * D);
      int c = cmp(mn * pp, qq * md);
      if (c == 0) {
        push(rho, ej, VertexKind::charv, q);
        od.char_idx.push_back(od.verts.size() - 1);
        break;
      }
      if (c > 0) {
        push(rho, ej, VertexKind::free_v, q);
        hi_n = mn;
        hi_d = md;
      } else {
        push(rho, ej, VertexKind::satellite, q);
        lo_visits.push_back(od.verts.size() - 1);
        lo_n = mn;
        lo_d = md;
      }
    }
    if (od.char_idx.size() != static_cast<size_t>(q))
      throw InternalInvariant("stage walk did not reach its target");
    if (lo_visits.empty())
      throw InternalInvariant("stage walk produced no satellite vertices");
    od.bottom_idx.push_back(lo_visits.front());
    std::reverse(lo_visits.begin(), lo_visits.end());
    od.verticals.push_back(std::move(lo_visits));
    D *= pp;
  }

  // expected stop depth
  Rat rho_star(0);
  for (const Dwps& c : conjugates(phi)) {
    Dwps diff = phi - c;
    if (diff.is_zero()) continue;
    rho_star -= *diff.deg();
  }

  Rat start = (s == 0) ? Rat(1) : od.pairs.char_exps.back();
  std::optional<Int> prev;
  bool stopped = false;
  for (long k = 1; !stopped; ++k) {
    Rat rho = start - Rat(k) / Rat(p);
    if (rho < rho_star - 2)
      throw InternalInvariant("tail descent ran past the expected stop");
    push(rho, rho, VertexKind::tail, s + 1);
    std::optional<Int> v = eval(od.verts.back().delta, od.mp);
    if (!v) throw InternalInvariant("minimal polynomial evaluated to -inf");
    if (prev && !(*v < *prev))
      throw InternalInvariant("tail values are not strictly decreasing");
    prev = v;
    if (*v == 0) {
      od.rho_stop = rho;
      stopped = true;
    } else if (*v < 0) {
      throw InternalInvariant("tail values skipped zero");
    }
  }
  if (od.rho_stop != rho_star)
    throw InternalInvariant("stop depth differs from the conjugate distance sum");

  // trunk membership, both characterizations
  for (auto& v : od.verts) {
    bool kind_b = v.kind != VertexKind::satellite;
    Dwps diff = phi - v.delta.phi;
    bool deg_b = deg_le(diff.deg(), v.delta.r);
    if (kind_b != deg_b)
      throw InternalInvariant("trunk characterizations disagree");
    v.in_b = kind_b;
  }

  // the approximate-root family g_0 = x, g_1, ..., g_{s+1} = mp
  od.g.push_back(LaurentPoly2::var_x());
  for (long j = 1; j <= s; ++j) {
    Rat ej = od.pairs.char_exps[static_cast<size_t>(j - 1)];
    od.g.push_back(key_forms(truncated_semidegree(phi, ej)).back());
  }
  od.g.push_back(od.mp);
  // the stop vertex's own key-form sequence must close at mp
  if (key_forms(od.verts.back().delta).back() != od.mp)
    throw InternalInvariant("stop vertex key forms do not close at the minimal polynomial");

  // the surface carries f_{k,j} := g_{j+1}
  std::vector<Semidegree> ds;
  std::vector<UserCurvette> fam;
  for (size_t k = 0; k < od.verts.size(); ++k) {
    ds.push_back(od.verts[k].delta);
    size_t lk = analyze(od.verts[k].delta.phi).char_exps.size();
    for (size_t j = 0; j <= lk; ++j)
      fam.push_back({k, j, od.g[j + 1]});
  }
  od.surface = build_surface(ds, fam);
  for (size_t i = 0; i < od.surface.n(); ++i)
    if (od.surface.omega[i][i] < 0)
      throw InternalInvariant("one-place surface has a negative self-value");
  for (const auto& gj : od.g) {
    size_t pos = od.surface.gens.size();
    for (size_t g = 0; g < od.surface.gens.size(); ++g)
      if (od.surface.gens[g].poly == gj) {
        pos = g;
        break;
      }
    if (pos == od.surface.gens.size())
      throw InternalInvariant("g_j is missing from the generator list");
    od.g_gens.push_back(pos);
    od.gdeg.push_back(gj.total_deg());
  }
  return od;
}

std::pair<std::vector<Int>, std::vector<Int>> mu_nu(
    const OnePlaceData& od, const std::vector<long>& alpha) {
  if (alpha.size() != od.g.size())
    throw InputError("alpha must have one entry per g_j");
  size_t N = od.surface.n();
  long s = od.s();
  std::vector<Int> mu(N, Int(0)), nu(N, Int(0));
  for (size_t k = 0; k < N; ++k) {
    for (size_t j = 0; j < alpha.size(); ++j) {
      mu[k] += Int(alpha[j]) * od.surface.lc_deg[k][od.g_gens[j]];
      nu[k] += Int(alpha[j]) * od.surface.lc_ord[k][od.g_gens[j]];
    }
  }
  // cross-check against the case formulas
  auto eratio = [&](long a, long b) {
    if (od.gdeg[static_cast<size_t>(b)] % od.gdeg[static_cast<size_t>(a)] != 0)
      throw InternalInvariant("degree ratio is not an integer");
    return Int(od.gdeg[static_cast<size_t>(b)] / od.gdeg[static_cast<size_t>(a)]);
  };
  for (size_t k = 0; k < N; ++k) {
    const OnePlaceVertex& v = od.verts[k];
    long lk = od.surface.dd[k].fd.l;
    Int m_exp(0), n_exp(0);
    if (!v.in_b) {
      m_exp = alpha[static_cast<size_t>(lk + 1)];
      n_exp = m_exp;
    } else if (v.kind == VertexKind::charv) {
      long q = v.stage;
      m_exp = alpha[static_cast<size_t>(q)];
      for (long i = q + 1; i <= s + 1; ++i)
        m_exp += Int(alpha[static_cast<size_t>(i)]) * eratio(q, i);
      n_exp = alpha[static_cast<size_t>(q)];
    } else {
      for (long i = lk + 1; i <= s + 1; ++i)
        m_exp += Int(alpha[static_cast<size_t>(i)]) * eratio(lk + 1, i);
      n_exp = m_exp;
    }
    if (mu[k] != m_exp || nu[k] != n_exp)
      throw InternalInvariant("mu/nu formulas disagree with the tables");
  }
  return {mu, nu};
}

} // namespace semideg
