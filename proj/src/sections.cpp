#include "semideg/sections.hpp"

#include <algorithm>
#include <map>

#include "semideg/lp.hpp"

namespace semideg {

namespace {

// Weight vector w >= 0 with w . dvec(g) >= 1 for every generator g. Its
// existence is exactly the recession-cone triviality of the degree filtration.
std::vector<Rat> section_weights(const SurfaceModel& sm) {
  std::vector<std::vector<Rat>> A;
  for (const auto& g : sm.gens) {
    std::vector<Rat> row;
    for (const auto& v : g.dvec) row.push_back(Rat(v));
    A.push_back(row);
  }
  std::vector<Rat> ones(A.size(), Rat(1));
  auto w = lp_feasible(A, ones);
  if (!w)
    throw UnboundedSections(
        "a nonnegative combination of generator degree vectors is <= 0; "
        "section spaces are infinite-dimensional");
  return *w;
}

} // namespace

void for_each_section(
    const SurfaceModel& sm, const std::vector<Int>& d,
    const std::function<void(const std::vector<long>&, const std::vector<Int>&)>&
        visit) {
  const size_t n = sm.n();
  if (d.size() != n) throw InputError("degree vector length mismatch");
  const auto w = section_weights(sm);
  const size_t G = sm.gens.size();

  std::vector<Rat> wv(G, Rat(0)); // w . dvec(g_k)
  for (size_t k = 0; k < G; ++k)
    for (size_t j = 0; j < n; ++j) wv[k] += w[j] * Rat(sm.gens[k].dvec[j]);

  std::vector<long> t(G, 0);
  std::vector<Int> rem(d); // d - sum t_k dvec_k
  Rat wrem(0);
  for (size_t j = 0; j < n; ++j) wrem += w[j] * Rat(d[j]);

  std::vector<Int> dv(n); // scratch for the visited dvec
  std::function<void(size_t)> walk = [&](size_t k) {
    if (wrem < 0) return;
    if (k == G) {
      for (size_t j = 0; j < n; ++j)
        if (rem[j] < 0) return;
      for (size_t j = 0; j < n; ++j) dv[j] = d[j] - rem[j];
      visit(t, dv);
      return;
    }
    // t_k = 0 branch first, then increments while the weight budget lasts.
    walk(k + 1);
    long cnt = 0;
    while (wrem - wv[k] >= 0) {
      wrem -= wv[k];
      for (size_t j = 0; j < n; ++j) rem[j] -= sm.gens[k].dvec[j];
      ++cnt;
      t[k] = cnt;
      walk(k + 1);
    }
    for (long i = 0; i < cnt; ++i) {
      wrem += wv[k];
      for (size_t j = 0; j < n; ++j) rem[j] += sm.gens[k].dvec[j];
    }
    t[k] = 0;
  };
  walk(0);
}

SectionEnum enumerate_sections(const SurfaceModel& sm,
                               const std::vector<Int>& d) {
  const size_t n = sm.n();
  const size_t G = sm.gens.size();
  SectionEnum out;
  out.maxdeg.assign(n, std::nullopt);

  // Keyed by the leading monomial as (b, a); value is the lex-min exponent
  // tuple together with its multidegree.
  std::map<std::pair<long, long>, std::pair<std::vector<long>, std::vector<Int>>>
      best;
  for_each_section(sm, d, [&](const std::vector<long>& t,
                              const std::vector<Int>& dv) {
    long a = 0, b = 0;
    for (size_t k = 0; k < G; ++k) {
      if (sm.gens[k].is_x)
        a = t[k];
      else
        b += t[k] * sm.gens[k].deg_y;
    }
    auto key = std::make_pair(b, a);
    auto it = best.find(key);
    if (it == best.end() || t < it->second.first) best[key] = {t, dv};
    for (size_t j = 0; j < n; ++j)
      if (!out.maxdeg[j] || dv[j] > *out.maxdeg[j]) out.maxdeg[j] = dv[j];
  });

  out.dim = Int(best.size());
  for (const auto& [key, td] : best) {
    SectionItem it;
    it.t = td.first;
    it.dvec = td.second;
    it.b = key.first;
    it.a = key.second;
    out.basis.push_back(it);
  }
  return out;
}

EnriquesResult enriques_member(const SurfaceModel& sm,
                               const std::vector<Int>& d) {
  const size_t n = sm.n();
  std::vector<std::optional<Int>> mx(n);
  std::vector<std::vector<long>> arg(n);
  for_each_section(sm, d, [&](const std::vector<long>& t,
                              const std::vector<Int>& dv) {
    for (size_t j = 0; j < n; ++j)
      if (!mx[j] || dv[j] > *mx[j]) {
        mx[j] = dv[j];
        arg[j] = t;
      }
  });
  EnriquesResult res;
  res.member = true;
  for (size_t j = 0; j < n; ++j)
    if (!mx[j] || *mx[j] != d[j]) res.member = false;
  if (res.member) res.witness = arg;
  return res;
}

std::set<std::vector<Int>> tropical_closure(
    const std::vector<std::vector<Int>>& gens, const std::vector<Int>& box) {
  const size_t n = box.size();
  auto inside = [&](const std::vector<Int>& u) {
    for (size_t j = 0; j < n; ++j)
      if (u[j] < 0 || u[j] > box[j]) return false;
    return true;
  };
  std::set<std::vector<Int>> S;
  std::vector<std::vector<Int>> work;
  auto add = [&](const std::vector<Int>& u) {
    if (inside(u) && S.insert(u).second) work.push_back(u);
  };
  add(std::vector<Int>(n, 0));
  for (const auto& g : gens) {
    if (g.size() != n) throw InputError("generator length mismatch");
    add(g);
  }
  while (!work.empty()) {
    auto u = work.back();
    work.pop_back();
    std::vector<std::vector<Int>> snap(S.begin(), S.end());
    for (const auto& v : snap) {
      std::vector<Int> s(n), m(n);
      for (size_t j = 0; j < n; ++j) {
        s[j] = u[j] + v[j];
        m[j] = std::max(u[j], v[j]);
      }
      add(s);
      add(m);
    }
  }
  return S;
}

bool tropical_member(const std::vector<std::vector<Int>>& gens,
                     const std::vector<Int>& box, const std::vector<Int>& d) {
  return tropical_closure(gens, box).count(d) > 0;
}

} // namespace semideg
