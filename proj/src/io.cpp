#include "semideg/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "semideg/config.hpp"
#include "semideg/errors.hpp"

namespace semideg::io {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void expect_keys(const json& j, const std::string& where,
                 const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      schema(where, "unknown field '" + it.key() + "'");
}

Int parse_int_string(const std::string& s, const std::string& where) {
  if (s.empty()) schema(where, "empty integer");
  size_t k = (s[0] == '-') ? 1 : 0;
  if (k == s.size()) schema(where, "malformed integer '" + s + "'");
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      schema(where, "malformed integer '" + s + "'");
  return Int(s);
}

long get_long(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<long>();
}

} // namespace

Rat parse_rat(const json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a fraction string");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    Int n = parse_int_string(s, where);
    return Rat(n);
  }
  Int num = parse_int_string(s.substr(0, slash), where);
  Int den = parse_int_string(s.substr(slash + 1), where);
  if (den <= 0) schema(where, "denominator must be positive in '" + s + "'");
  if (gcd_int(num < 0 ? Int(-num) : num, den) != 1)
    throw UnreducedFraction(where + ": '" + s + "' is not in lowest terms");
  return make_rat(num, den);
}

std::string rat_json(const Rat& q) { return rat_str(q); }

FieldElem parse_coeff(const json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "expected a coefficient object");
  expect_keys(j, where, {"rat", "cyc"});
  if (j.contains("rat") == j.contains("cyc"))
    schema(where, "exactly one of 'rat'/'cyc' required");
  if (j.contains("rat")) return FieldElem(parse_rat(j["rat"], where + ".rat"));
  const json& c = j["cyc"];
  if (!c.is_object()) schema(where + ".cyc", "expected an object");
  expect_keys(c, where + ".cyc", {"n", "terms"});
  if (!c.contains("n") || !c.contains("terms"))
    schema(where + ".cyc", "'n' and 'terms' required");
  long n = get_long(c["n"], where + ".cyc.n");
  if (n < 1) schema(where + ".cyc.n", "order must be >= 1");
  const json& terms = c["terms"];
  if (!terms.is_array()) schema(where + ".cyc.terms", "expected an array");
  FieldElem out;
  for (size_t t = 0; t < terms.size(); ++t) {
    std::string w = where + ".cyc.terms[" + std::to_string(t) + "]";
    const json& e = terms[t];
    if (!e.is_array() || e.size() != 2) schema(w, "expected [\"a/b\", k]");
    Rat a = parse_rat(e[0], w);
    long k = get_long(e[1], w);
    if (k < 0 || k >= n) schema(w, "power must satisfy 0 <= k < n");
    out += FieldElem(a) * FieldElem::zeta(static_cast<int>(n), k);
  }
  return out;
}

json coeff_json(const FieldElem& c) {
  FieldElem r = c.reduced();
  if (r.is_rat()) return json{{"rat", rat_json(r.as_rat())}};
  json terms = json::array();
  const auto& co = r.coeffs();
  for (size_t k = 0; k < co.size(); ++k)
    if (co[k] != 0) terms.push_back(json::array({rat_json(co[k]), k}));
  return json{{"cyc", json{{"n", r.order()}, {"terms", terms}}}};
}

Dwps parse_dwps(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of series terms");
  std::vector<DwpsTerm> terms;
  for (size_t t = 0; t < j.size(); ++t) {
    std::string w = where + "[" + std::to_string(t) + "]";
    const json& e = j[t];
    if (!e.is_object()) schema(w, "expected a term object");
    expect_keys(e, w, {"c", "e"});
    if (!e.contains("c") || !e.contains("e")) schema(w, "'c' and 'e' required");
    FieldElem c = parse_coeff(e["c"], w + ".c");
    if (c.is_zero()) schema(w, "zero coefficient");
    Rat ex = parse_rat(e["e"], w + ".e");
    if (!terms.empty() && !(ex < terms.back().e))
      schema(w, "exponents must be strictly descending");
    terms.push_back({ex, c});
  }
  return Dwps::from_terms(terms);
}

json dwps_json(const Dwps& s) {
  json out = json::array();
  for (const auto& t : s.terms())
    out.push_back(json{{"c", coeff_json(t.c)}, {"e", rat_json(t.e)}});
  return out;
}

LaurentPoly2 parse_poly(const json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of monomials");
  LaurentPoly2 f;
  std::set<std::pair<long, long>> seen;
  for (size_t t = 0; t < j.size(); ++t) {
    std::string w = where + "[" + std::to_string(t) + "]";
    const json& e = j[t];
    if (!e.is_object()) schema(w, "expected a monomial object");
    expect_keys(e, w, {"c", "ex"});
    if (!e.contains("c") || !e.contains("ex"))
      schema(w, "'c' and 'ex' required");
    FieldElem c = parse_coeff(e["c"], w + ".c");
    if (c.is_zero()) schema(w, "zero coefficient");
    const json& ex = e["ex"];
    if (!ex.is_array() || ex.size() != 2) schema(w + ".ex", "expected [a, b]");
    long a = get_long(ex[0], w + ".ex[0]");
    long b = get_long(ex[1], w + ".ex[1]");
    if (b < 0) schema(w + ".ex", "y exponent must be nonnegative");
    if (!seen.insert({a, b}).second) schema(w + ".ex", "duplicate exponent");
    f.add_term(a, b, c);
  }
  return f;
}

json poly_json(const LaurentPoly2& f) {
  std::vector<std::pair<long, long>> keys; // (b, a) ascending
  for (const auto& [k, c] : f.terms()) keys.push_back({k.second, k.first});
  std::sort(keys.begin(), keys.end());
  json out = json::array();
  for (const auto& [b, a] : keys)
    out.push_back(json{{"c", coeff_json(f.terms().at({a, b}))},
                       {"ex", json::array({a, b})}});
  return out;
}

SurfaceFile parse_surface_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) schema("$", "expected a JSON object");
  expect_keys(j, "$", {"version", "field", "semidegrees", "branch", "family"});
  if (!j.contains("version")) schema("$", "'version' required");
  if (get_long(j["version"], "$.version") != 1)
    schema("$.version", "unsupported version");

  SurfaceFile sf;
  if (j.contains("field")) {
    const json& f = j["field"];
    if (!f.is_object()) schema("$.field", "expected an object");
    expect_keys(f, "$.field", {"cyclotomic"});
    if (!f.contains("cyclotomic")) schema("$.field", "'cyclotomic' required");
    long n = get_long(f["cyclotomic"], "$.field.cyclotomic");
    if (n < 1 || n > config().max_cyclotomic)
      schema("$.field.cyclotomic", "order outside [1, cap]");
    sf.field_order = static_cast<int>(n);
  }

  bool has_sd = j.contains("semidegrees"), has_br = j.contains("branch");
  if (has_sd == has_br)
    throw ExclusiveFields("exactly one of 'semidegrees'/'branch' is required");

  if (has_sd) {
    const json& sd = j["semidegrees"];
    if (!sd.is_array() || sd.empty())
      schema("$.semidegrees", "expected a nonempty array");
    for (size_t i = 0; i < sd.size(); ++i) {
      std::string w = "$.semidegrees[" + std::to_string(i) + "]";
      const json& e = sd[i];
      if (!e.is_object()) schema(w, "expected an object");
      expect_keys(e, w, {"phi", "r"});
      if (!e.contains("phi") || !e.contains("r"))
        schema(w, "'phi' and 'r' required");
      sf.semidegrees.push_back(
          {parse_dwps(e["phi"], w + ".phi"), parse_rat(e["r"], w + ".r")});
    }
  } else {
    sf.branch = parse_dwps(j["branch"], "$.branch");
  }

  if (j.contains("family")) {
    if (has_br) schema("$.family", "a family requires 'semidegrees'");
    const json& fam = j["family"];
    if (!fam.is_array()) schema("$.family", "expected an array");
    for (size_t t = 0; t < fam.size(); ++t) {
      std::string w = "$.family[" + std::to_string(t) + "]";
      const json& e = fam[t];
      if (!e.is_object()) schema(w, "expected an object");
      expect_keys(e, w, {"i", "j", "poly"});
      if (!e.contains("i") || !e.contains("j") || !e.contains("poly"))
        schema(w, "'i', 'j' and 'poly' required");
      long i = get_long(e["i"], w + ".i"); // 1-based in files
      long jj = get_long(e["j"], w + ".j");
      if (i < 1) schema(w + ".i", "indices are 1-based");
      if (jj < 0) schema(w + ".j", "levels are 0-based and nonnegative");
      sf.family.push_back({static_cast<size_t>(i - 1),
                           static_cast<size_t>(jj),
                           parse_poly(e["poly"], w + ".poly")});
    }
  }

  // declared field must contain every coefficient
  int need = 1;
  auto fold = [&](const FieldElem& c) {
    need = checked_lcm_order(need, c.reduced().order());
  };
  for (const auto& [phi, r] : sf.semidegrees)
    for (const auto& t : phi.terms()) fold(t.c);
  if (sf.branch)
    for (const auto& t : sf.branch->terms()) fold(t.c);
  for (const auto& u : sf.family)
    for (const auto& [k, c] : u.poly.terms()) fold(c);
  if (sf.field_order % need != 0) {
    if (sf.field_order != 1)
      schema("$.field.cyclotomic",
             "declared order does not contain all coefficients");
    sf.field_order = need;
  }
  return sf;
}

json surface_file_json(const SurfaceFile& sf) {
  json j;
  j["version"] = sf.version;
  j["field"] = json{{"cyclotomic", sf.field_order}};
  if (sf.branch) {
    j["branch"] = dwps_json(*sf.branch);
  } else {
    json sd = json::array();
    for (const auto& [phi, r] : sf.semidegrees)
      sd.push_back(json{{"phi", dwps_json(phi)}, {"r", rat_json(r)}});
    j["semidegrees"] = sd;
  }
  if (!sf.family.empty()) {
    json fam = json::array();
    for (const auto& u : sf.family)
      fam.push_back(json{{"i", u.i + 1}, // 1-based in files
                         {"j", u.j},
                         {"poly", poly_json(u.poly)}});
    j["family"] = fam;
  }
  return j;
}

std::string serialize_surface_file(const SurfaceFile& sf) {
  return surface_file_json(sf).dump(2) + "\n";
}

LoadedSurface load_surface(const std::string& text) {
  LoadedSurface ls;
  ls.file = parse_surface_file(text);
  if (ls.file.branch) {
    ls.oneplace = from_one_place_branch(*ls.file.branch);
    for (const auto& v : ls.oneplace->verts) ls.ds.push_back(v.delta);
    ls.model = ls.oneplace->surface;
  } else {
    for (const auto& [phi, r] : ls.file.semidegrees)
      ls.ds.push_back(make_semidegree(phi, r));
    ls.model = ls.file.family.empty() ? build_surface(ls.ds)
                                      : build_surface(ls.ds, ls.file.family);
  }
  return ls;
}

namespace {

// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*'? factor)*
// factor := base ('^' ['-'] digits | '^(' ['-'] digits ')')?
// base := '(' expr ')' | 'x' | 'y' | digits ('/' digits)?
struct ExprParser {
  const std::string& s;
  size_t pos = 0;

  explicit ExprParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial syntax error at offset " +
                     std::to_string(pos) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool starts_base() {
    char c = peek();
    return c == '(' || c == 'x' || c == 'y' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  Int digits() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return Int(s.substr(start, pos - start));
  }

  long exponent() {
    bool paren = false, neg = false;
    if (peek() == '(') {
      paren = true;
      ++pos;
    }
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    Int e = digits();
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos;
    }
    long v = to_long(e);
    return neg ? -v : v;
  }

  LaurentPoly2 base() {
    char c = peek();
    if (c == '(') {
      ++pos;
      LaurentPoly2 e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    if (c == 'x') {
      ++pos;
      return LaurentPoly2::var_x();
    }
    if (c == 'y') {
      ++pos;
      return LaurentPoly2::var_y();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = digits();
      if (peek() == '/') {
        ++pos;
        Int den = digits();
        if (den == 0) fail("division by zero");
        return LaurentPoly2::monomial(FieldElem(make_rat(num, den)), 0, 0);
      }
      return LaurentPoly2::monomial(FieldElem(Rat(num)), 0, 0);
    }
    fail("expected '(', 'x', 'y' or a number");
  }

  LaurentPoly2 factor() {
    LaurentPoly2 b = base();
    if (peek() != '^') return b;
    ++pos;
    long e = exponent();
    if (e >= 0) return b.pow(e);
    if (b != LaurentPoly2::var_x())
      fail("negative powers are supported on x only");
    return LaurentPoly2::monomial(FieldElem(1), e, 0);
  }

  LaurentPoly2 term() {
    LaurentPoly2 f = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos;
        f = f * factor();
      } else if (starts_base()) {
        f = f * factor();
      } else {
        return f;
      }
    }
  }

  LaurentPoly2 expr() {
    LaurentPoly2 acc;
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = (c == '-');
      ++pos;
    }
    acc = neg ? -term() : term();
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos;
      LaurentPoly2 t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
  }
};

} // namespace

LaurentPoly2 parse_poly_expr(const std::string& text) {
  ExprParser p(text);
  if (p.peek() == '\0') throw InputError("empty polynomial expression");
  LaurentPoly2 f = p.expr();
  if (p.peek() != '\0') p.fail("trailing input");
  return f;
}

std::vector<Int> parse_int_vector(const std::string& text) {
  std::vector<Int> out;
  size_t start = 0;
  for (;;) {
    size_t comma = text.find(',', start);
    std::string tok = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw InputError("empty entry in integer vector '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    size_t k = (tok[0] == '-') ? 1 : 0;
    if (k == tok.size()) throw InputError("malformed integer '" + tok + "'");
    for (; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        throw InputError("malformed integer '" + tok + "'");
    out.push_back(Int(tok));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

} // namespace semideg::io
