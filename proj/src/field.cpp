#include "semideg/field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "semideg/config.hpp"
#include "semideg/errors.hpp"

namespace semideg {

namespace {

using Poly = std::vector<Rat>; // dense, little-endian

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// a mod m, m monic
void pmod(Poly& a, const Poly& m) {
  trim(a);
  while (a.size() >= m.size()) {
    Rat f = a.back();
    size_t off = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) a[off + j] -= f * m[j];
    trim(a);
  }
}

// exact division a / b (remainder must vanish)
Poly pdivexact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    trim(a);
  }
  if (!a.empty()) throw InternalInvariant("pdivexact: nonzero remainder");
  return q;
}

} // namespace

const std::vector<Rat>& cyclotomic_poly(int n) {
  static std::map<int, Poly> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed iteratively so the
  // recursion never re-enters the lock.
  for (int m = 1; m <= n; ++m) {
    if (n % m != 0 || memo.count(m)) continue;
    Poly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) num = pdivexact(num, memo.at(d));
    memo.emplace(m, std::move(num));
  }
  return memo.at(n);
}

int checked_lcm_order(int a, int b) {
  long l = std::lcm<long>(a, b);
  if (l > config().max_cyclotomic)
    throw CyclotomicOverflow("required cyclotomic order " + std::to_string(l) +
                             " exceeds cap " +
                             std::to_string(config().max_cyclotomic));
  return static_cast<int>(l);
}

void FieldElem::normalize() {
  if (n_ > 1) {
    pmod(c_, cyclotomic_poly(n_));
    if (c_.size() <= 1) n_ = 1;
  }
  trim(c_);
}

FieldElem raw_make(int n, std::vector<Rat> c) {
  FieldElem e;
  e.n_ = n;
  e.c_ = std::move(c);
  e.normalize();
  return e;
}

FieldElem FieldElem::zeta(int n, long k) {
  if (n < 1) throw InternalInvariant("zeta: order must be positive");
  if (n > config().max_cyclotomic)
    throw CyclotomicOverflow("zeta order " + std::to_string(n) +
                             " exceeds cap " +
                             std::to_string(config().max_cyclotomic));
  k %= n;
  if (k < 0) k += n;
  std::vector<Rat> c(static_cast<size_t>(k) + 1, Rat(0));
  c[static_cast<size_t>(k)] = 1;
  return raw_make(n, std::move(c));
}

Rat FieldElem::as_rat() const {
  if (n_ != 1) throw InternalInvariant("as_rat on a non-rational element");
  return c_.empty() ? Rat(0) : c_[0];
}

FieldElem FieldElem::to_order(int m) const {
  if (m % n_ != 0) throw InternalInvariant("to_order: not a multiple");
  if (m == n_) return *this;
  int step = m / n_;
  std::vector<Rat> c;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    size_t pos = j * static_cast<size_t>(step);
    if (c.size() <= pos) c.resize(pos + 1, Rat(0));
    c[pos] += c_[j];
  }
  FieldElem e;
  e.n_ = m;
  e.c_ = std::move(c);
  // keep the requested order even if the value is rational: callers coerce
  // for arithmetic and normalize afterwards
  pmod(e.c_, cyclotomic_poly(m));
  trim(e.c_);
  return e;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  int m = (n_ == o.n_) ? n_ : checked_lcm_order(n_, o.n_);
  FieldElem a = to_order(m), b = o.to_order(m);
  if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), Rat(0));
  for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.n_ = m;
  a.normalize();
  return *this = a;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (n_ == 1 && o.n_ == 1) { // rational fast path
    if (c_.empty() || o.c_.empty())
      c_.clear();
    else
      c_[0] *= o.c_[0];
    return *this;
  }
  int m = checked_lcm_order(n_, o.n_);
  FieldElem a = to_order(m), b = o.to_order(m);
  a.c_ = pmul(a.c_, b.c_);
  a.n_ = m;
  a.normalize();
  return *this = a;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw InternalInvariant("field inverse of zero");
  if (n_ == 1) return FieldElem(Rat(1) / c_[0]);
  // extended Euclid: find u with u * this == gcd (a constant) mod Phi_n
  Poly r0 = cyclotomic_poly(n_), r1 = c_;
  Poly t0, t1{Rat(1)};
  while (r1.size() > 1) {
    // divide r0 by r1
    Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
    Poly rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat f = rem.back() / r1.back();
      size_t off = rem.size() - r1.size();
      q[off] += f;
      for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= f * r1[j];
      trim(rem);
    }
    Poly t2 = t0; // t2 = t0 - q*t1
    Poly qt = pmul(q, t1);
    if (t2.size() < qt.size()) t2.resize(qt.size(), Rat(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    trim(t2);
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  if (r1.empty()) throw InternalInvariant("inv: element not a unit");
  Rat g = r1[0];
  for (auto& q : t1) q /= g;
  return raw_make(n_, std::move(t1));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inv(); }

FieldElem FieldElem::pow(long e) const {
  if (e == 0) return FieldElem(Rat(1));
  if (e < 0) return inv().pow(-e);
  FieldElem base = *this, acc(Rat(1));
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  FieldElem a = reduced(), b = o.reduced();
  return a.n_ == b.n_ && a.c_ == b.c_;
}

FieldElem FieldElem::reduced() const {
  if (n_ == 1) return *this;
  size_t D = cyclotomic_poly(n_).size() - 1; // deg Phi_n
  for (int m = 1; m < n_; ++m) {
    if (n_ % m != 0) continue;
    size_t dm = cyclotomic_poly(m).size() - 1;
    // basis of Q(zeta_m) inside Q(zeta_n): zeta_n^{j*(n/m)}, j < dm
    std::vector<Poly> basis;
    for (size_t j = 0; j < dm; ++j) {
      Poly b(j * static_cast<size_t>(n_ / m) + 1, Rat(0));
      b.back() = 1;
      pmod(b, cyclotomic_poly(n_));
      b.resize(D, Rat(0));
      basis.push_back(std::move(b));
    }
    // solve sum q_j basis_j = c_ by Gaussian elimination (D rows, dm cols)
    std::vector<std::vector<Rat>> A(D, std::vector<Rat>(dm + 1, Rat(0)));
    for (size_t row = 0; row < D; ++row) {
      for (size_t col = 0; col < dm; ++col) A[row][col] = basis[col][row];
      A[row][dm] = row < c_.size() ? c_[row] : Rat(0);
    }
    size_t lead = 0;
    std::vector<long> pivot_col_row(dm, -1);
    for (size_t col = 0; col < dm && lead < D; ++col) {
      size_t piv = lead;
      while (piv < D && A[piv][col] == 0) ++piv;
      if (piv == D) continue;
      std::swap(A[piv], A[lead]);
      Rat f = A[lead][col];
      for (auto& v : A[lead]) v /= f;
      for (size_t r2 = 0; r2 < D; ++r2) {
        if (r2 == lead || A[r2][col] == 0) continue;
        Rat g = A[r2][col];
        for (size_t c2 = col; c2 <= dm; ++c2) A[r2][c2] -= g * A[lead][c2];
      }
      pivot_col_row[col] = static_cast<long>(lead);
      ++lead;
    }
    std::vector<Rat> sol(dm, Rat(0));
    for (size_t col = 0; col < dm; ++col)
      if (pivot_col_row[col] >= 0)
        sol[col] = A[static_cast<size_t>(pivot_col_row[col])][dm];
    // verify the candidate against the original basis (covers inconsistency)
    Poly acc(D, Rat(0));
    for (size_t col = 0; col < dm; ++col)
      for (size_t row = 0; row < D; ++row) acc[row] += sol[col] * basis[col][row];
    Poly target = c_;
    target.resize(D, Rat(0));
    if (acc == target) {
      FieldElem e;
      e.n_ = m;
      e.c_ = std::move(sol);
      e.normalize();
      return e;
    }
  }
  return *this;
}

std::string FieldElem::str() const {
  FieldElem r = reduced();
  if (r.n_ == 1) return rat_str_short(r.as_rat());
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t j = 0; j < r.c_.size(); ++j) {
    if (r.c_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str_short(r.c_[j]);
    if (j >= 1) {
      os << "*z" << r.n_;
      if (j > 1) os << "^" << j;
    }
  }
  os << ")";
  return os.str();
}

namespace {

std::optional<Rat> rat_root(const Rat& w, long k) {
  if (w == 0) return Rat(0);
  if (k % 2 == 0 && w < 0) return std::nullopt;
  Int num = w.get_num(), den = w.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)))
    return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)))
    return std::nullopt;
  return make_rat(neg ? Int(-rn) : rn, rd);
}

} // namespace

std::optional<FieldElem> try_root(const FieldElem& val, long k) {
  if (k < 1) throw InternalInvariant("try_root: k must be positive");
  if (val.is_zero()) return FieldElem(Rat(0));
  if (k == 1) return val;
  long cap = config().max_cyclotomic;
  // a root of the shape rational * zeta lives in Q(zeta_{n k}) (n = order of
  // val), or Q(zeta_{2 n k}) when a sign must be absorbed
  for (long mult : {k, 2 * k}) {
    long next = val.order() * mult;
    if (next > cap) continue;
    int n_ext = static_cast<int>(next);
    FieldElem z = FieldElem::zeta(n_ext);
    FieldElem zk_inv = z.pow(-k);
    FieldElem w = val;
    for (long j = 0; j < n_ext; ++j) {
      if (j > 0) w *= zk_inv; // w = val * zeta^{-jk}
      if (!w.is_rat()) continue;
      auto t = rat_root(w.as_rat(), k);
      if (t) return FieldElem(*t) * z.pow(j);
    }
  }
  return std::nullopt;
}

} // namespace semideg
