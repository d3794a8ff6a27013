#include "semideg/api.hpp"

#include "semideg/errors.hpp"
#include "semideg/keyforms.hpp"
#include "semideg/sections.hpp"
#include "semideg/zariski.hpp"

namespace semideg::api {

namespace {

json int_json(const Int& v) { return json(to_long(v)); }

json ivec_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json opt_ivec_json(const std::vector<std::optional<Int>>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x ? int_json(*x) : json(nullptr));
  return a;
}

void check_length(const std::vector<Int>& d, size_t n,
                  const std::string& what) {
  if (d.size() != n)
    throw InputError(what + " needs " + std::to_string(n) + " entries, got " +
                     std::to_string(d.size()));
}

// classify / keyforms / delta work outside S_pol, so no surface model here
std::vector<Semidegree> semidegrees_of(const io::SurfaceFile& sf) {
  std::vector<Semidegree> ds;
  if (sf.branch) {
    auto od = from_one_place_branch(*sf.branch);
    for (const auto& v : od.verts) ds.push_back(v.delta);
  } else {
    for (const auto& [phi, r] : sf.semidegrees)
      ds.push_back(make_semidegree(phi, r));
  }
  return ds;
}

} // namespace

json classify_op(const std::string& surface_text) {
  auto ds = semidegrees_of(io::parse_surface_file(surface_text));
  auto cls = classify(ds);
  json out;
  out["S_num"] = cls.in_s_num;
  out["S_pol"] = cls.in_s_pol;
  out["S_pol_plus"] = cls.in_s_pol_plus;
  json per = json::array();
  for (const auto& d : ds) {
    auto kf = key_forms(d);
    auto last = eval(d, kf.back());
    per.push_back(json{{"key_form_count", kf.size()},
                       {"last_polynomial", kf.back().is_polynomial()},
                       {"last_value", last ? int_json(*last) : json(nullptr)}});
  }
  out["semidegrees"] = per;
  return out;
}

json keyforms_op(const std::string& surface_text) {
  auto ds = semidegrees_of(io::parse_surface_file(surface_text));
  json per = json::array();
  for (const auto& d : ds) {
    json forms = json::array();
    for (const auto& f : key_forms(d)) {
      auto v = eval(d, f);
      forms.push_back(json{{"str", f.str()},
                           {"poly", io::poly_json(f)},
                           {"value", v ? int_json(*v) : json(nullptr)}});
    }
    per.push_back(json{{"forms", forms}});
  }
  return json{{"semidegrees", per}};
}

json delta_op(const std::string& surface_text, const LaurentPoly2& f) {
  auto ds = semidegrees_of(io::parse_surface_file(surface_text));
  json vals = json::array();
  for (const auto& d : ds) {
    auto v = eval(d, f);
    vals.push_back(v ? int_json(*v) : json(nullptr));
  }
  return json{{"values", vals}};
}

json dim_op(const std::string& surface_text, const std::vector<Int>& d) {
  auto ls = io::load_surface(surface_text);
  check_length(d, ls.model.n(), "degree vector");
  return json{{"dim", int_json(enumerate_sections(ls.model, d).dim)}};
}

json basis_op(const std::string& surface_text, const std::vector<Int>& d) {
  auto ls = io::load_surface(surface_text);
  check_length(d, ls.model.n(), "degree vector");
  auto se = enumerate_sections(ls.model, d);
  json basis = json::array();
  for (const auto& it : se.basis) {
    LaurentPoly2 g = LaurentPoly2::one();
    json t = json::array();
    for (size_t k = 0; k < it.t.size(); ++k) {
      t.push_back(it.t[k]);
      if (it.t[k] > 0) g = g * ls.model.gens[k].poly.pow(it.t[k]);
    }
    basis.push_back(json{{"t", t},
                         {"dvec", ivec_json(it.dvec)},
                         {"a", it.a},
                         {"b", it.b},
                         {"str", g.str()}});
  }
  return json{{"dim", int_json(se.dim)},
              {"maxdeg", opt_ivec_json(se.maxdeg)},
              {"basis", basis}};
}

json enriques_op(const std::string& surface_text, const std::vector<Int>& d) {
  auto ls = io::load_surface(surface_text);
  check_length(d, ls.model.n(), "degree vector");
  auto en = enriques_member(ls.model, d);
  json out;
  out["member"] = en.member;
  if (en.member) {
    json w = json::array();
    for (const auto& t : en.witness) {
      json tv = json::array();
      for (long v : t) tv.push_back(v);
      w.push_back(tv);
    }
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json bpf_op(const std::string& surface_text, const std::vector<Int>& d) {
  auto ls = io::load_surface(surface_text);
  check_length(d, ls.model.n(), "degree vector");
  auto rep = is_bpf_at_infinity(ls.model, d);
  json out;
  out["bpf"] = rep.bpf;
  out["violated"] = rep.bpf ? json(nullptr) : json(rep.violated);
  out["a"] = rep.a ? ivec_json(*rep.a) : json(nullptr);
  return out;
}

json member_op(const std::string& surface_text, const std::vector<Int>& d,
               long bound) {
  auto ls = io::load_surface(surface_text);
  check_length(d, ls.model.n(), "degree vector");
  auto res = semigroup_member_bounded(ls.model, d, bound);
  json parts = json::array();
  for (const auto& p : res.parts) parts.push_back(ivec_json(p));
  return json{{"verdict", res.verdict}, {"parts", parts}};
}

json tropical_op(const std::string& surface_text, const std::vector<Int>& box,
                 const std::vector<Int>* d) {
  auto ls = io::load_surface(surface_text);
  check_length(box, ls.model.n(), "box");
  std::vector<std::vector<Int>> gv;
  for (const auto& g : ls.model.gens) gv.push_back(g.dvec);
  if (d) {
    check_length(*d, ls.model.n(), "degree vector");
    return json{{"member", tropical_member(gv, box, *d)}};
  }
  auto cl = tropical_closure(gv, box);
  json els = json::array();
  for (const auto& u : cl) els.push_back(ivec_json(u));
  return json{{"size", cl.size()}, {"elements", els}};
}

json compare_op(const std::string& a_text, const std::string& b_text,
                const std::vector<Int>& box) {
  auto la = io::load_surface(a_text);
  auto lb = io::load_surface(b_text);
  if (!la.oneplace || !lb.oneplace)
    throw InputError("compare-equisingular requires branch files");
  check_length(box, la.model.n(), "box");
  auto rep = equisingular_compare(*la.oneplace, *lb.oneplace, box);
  json mm = json::array();
  for (const auto& m : rep.mismatches) mm.push_back(m);
  return json{{"structural_match", rep.structural_match},
              {"mismatches", mm},
              {"spot_checks", rep.spot_checks},
              {"spot_match", rep.spot_match}};
}

std::string from_branch_op(const std::string& branch_text) {
  auto sf = io::parse_surface_file(branch_text);
  if (!sf.branch) throw InputError("from-branch requires a branch file");
  auto od = from_one_place_branch(*sf.branch);
  io::SurfaceFile out;
  out.field_order = sf.field_order;
  for (const auto& v : od.verts)
    out.semidegrees.push_back({v.delta.phi, v.delta.r});
  for (size_t k = 0; k < od.verts.size(); ++k) {
    size_t lk = analyze(od.verts[k].delta.phi).char_exps.size();
    for (size_t j = 0; j <= lk; ++j)
      out.family.push_back({k, j, od.g[j + 1]});
  }
  return io::serialize_surface_file(out);
}

} // namespace semideg::api
