#include "qtforge/qt.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "json.hpp"

namespace qtforge {

namespace {

Rat rat_pow(const Rat& x, long k) {
  if (k == 0) return 1;
  if (k < 0) {
    if (x == 0) throw std::domain_error("division by zero in rational power");
    return rat_pow(Rat(1) / x, -k);
  }
  Rat r = 1, b = x;
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

}  // namespace

QTLaurent QTLaurent::pow(long k) const {
  if (k < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial");
    auto& [e, c] = *terms.begin();
    return monomial(rat_pow(c, k), static_cast<int>(e.q2 * k), static_cast<int>(e.t2 * k));
  }
  QTLaurent r = one(), b = *this;
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

QTLaurent QTLaurent::shifted(int dq2, int dt2) const {
  QTLaurent r;
  for (auto& [e, c] : terms) r.terms[{e.q2 + dq2, e.t2 + dt2}] = c;
  return r;
}

namespace {

// (c q^{a2/2} t^{b2/2})^{e2/2} for a single-term base; e2 a doubled exponent
QTLaurent monomial_pow(const QTLaurent& m, int e2) {
  auto& [e, c] = *m.terms.begin();
  if (e2 % 2 == 0) {
    long k = e2 / 2;
    return QTLaurent::monomial(rat_pow(c, k), static_cast<int>(e.q2 * k),
                               static_cast<int>(e.t2 * k));
  }
  // half-integral power: only coefficient 1 and exponents with even product survive
  if (c != 1) throw std::domain_error("half-integral power of monomial with coefficient != 1");
  long q2 = static_cast<long>(e.q2) * e2, t2 = static_cast<long>(e.t2) * e2;
  if (q2 % 2 != 0 || t2 % 2 != 0)
    throw std::domain_error("substitution produces quarter-integral exponent");
  return QTLaurent::monomial(1, static_cast<int>(q2 / 2), static_cast<int>(t2 / 2));
}

}  // namespace

QTLaurent QTLaurent::subst(const QTLaurent& fq, const QTLaurent& ft) const {
  QTLaurent out;
  for (auto& [e, c] : terms) {
    QTLaurent part(c);
    for (auto [base, e2] : {std::pair{&fq, e.q2}, std::pair{&ft, e.t2}}) {
      if (e2 == 0) continue;
      if (base->is_monomial()) {
        part = part * monomial_pow(*base, e2);
      } else {
        if (e2 < 0 || e2 % 2 != 0)
          throw std::domain_error("substitution base must be a monomial for this exponent");
        part = part * base->pow(e2 / 2);
      }
    }
    out += part;
  }
  return out;
}

Rat QTLaurent::eval(const Rat& qv, const Rat& tv) const {
  Rat r = 0;
  for (auto& [e, c] : terms) {
    if (e.q2 % 2 != 0 || e.t2 % 2 != 0)
      throw std::domain_error("eval requires integer exponents");
    r += c * rat_pow(qv, e.q2 / 2) * rat_pow(tv, e.t2 / 2);
  }
  return r;
}

int QTLaurent::min_q2() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) m = first ? (first = false, e.q2) : std::min(m, e.q2);
  return m;
}
int QTLaurent::max_q2() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) m = first ? (first = false, e.q2) : std::max(m, e.q2);
  return m;
}
int QTLaurent::min_t2() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) m = first ? (first = false, e.t2) : std::min(m, e.t2);
  return m;
}
int QTLaurent::max_t2() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) m = first ? (first = false, e.t2) : std::max(m, e.t2);
  return m;
}
int QTLaurent::min_tdeg2() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms)
    m = first ? (first = false, e.q2 + e.t2) : std::min(m, e.q2 + e.t2);
  return m;
}
int QTLaurent::max_tdeg2() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms)
    m = first ? (first = false, e.q2 + e.t2) : std::max(m, e.q2 + e.t2);
  return m;
}

namespace {

std::string exp_str(int e2) {
  return e2 % 2 == 0 ? std::to_string(e2 / 2) : std::to_string(e2) + "/2";
}

}  // namespace

std::string QTLaurent::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_var = e.q2 != 0 || e.t2 != 0;
    if (a != 1 || !has_var) os << a.get_str();
    if (e.q2 != 0) os << (a != 1 ? "*" : "") << "q^" << exp_str(e.q2);
    if (e.t2 != 0) os << ((a != 1 || e.q2 != 0) ? "*" : "") << "t^" << exp_str(e.t2);
  }
  return os.str();
}

std::optional<QTLaurent> divide_exact(const QTLaurent& a, const QTLaurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return QTLaurent();
  int aq = a.min_q2(), at = a.min_t2(), bq = b.min_q2(), bt = b.min_t2();
  QTLaurent r = a.shifted(-aq, -at), d = b.shifted(-bq, -bt);
  int boxq = r.max_q2(), boxt = r.max_t2();
  auto lead_d = *d.terms.rbegin();  // lex-greatest term
  QTLaurent quo;
  while (!r.is_zero()) {
    auto lead_r = *r.terms.rbegin();
    int eq = lead_r.first.q2 - lead_d.first.q2, et = lead_r.first.t2 - lead_d.first.t2;
    if (eq < 0 || et < 0 || eq > boxq || et > boxt) return std::nullopt;
    QTLaurent term = QTLaurent::monomial(lead_r.second / lead_d.second, eq, et);
    quo += term;
    r -= term * d;
  }
  return quo.shifted(aq - bq, at - bt);
}

// ---------------------------------------------------------------------------
// bivariate gcd over Q, working on doubled exponents (so q^{1/2}, t^{1/2} are
// treated as the actual variables); inputs are first shifted to polynomials
// ---------------------------------------------------------------------------

namespace {

using Uni = std::vector<Rat>;  // dense in one variable, coefficient of degree i at [i]

void uni_trim(Uni& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
int uni_deg(const Uni& p) { return static_cast<int>(p.size()) - 1; }

Uni uni_mul(const Uni& a, const Uni& b) {
  if (a.empty() || b.empty()) return {};
  Uni r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

Uni uni_sub(Uni a, const Uni& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  uni_trim(a);
  return a;
}

Uni uni_scale(Uni a, const Rat& c) {
  for (auto& x : a) x *= c;
  if (c == 0) a.clear();
  return a;
}

// remainder of a mod b (b nonzero), over Q
Uni uni_rem(Uni a, const Uni& b) {
  while (uni_deg(a) >= uni_deg(b)) {
    Rat c = a.back() / b.back();
    int sh = uni_deg(a) - uni_deg(b);
    Uni s(sh + 1, Rat(0));
    s[sh] = c;
    a = uni_sub(a, uni_mul(s, b));
  }
  return a;
}

// exact quotient a / b (assumed divisible)
Uni uni_div(Uni a, const Uni& b) {
  Uni q(a.empty() ? 0 : std::max<size_t>(1, a.size() - b.size() + 1), Rat(0));
  while (uni_deg(a) >= uni_deg(b)) {
    Rat c = a.back() / b.back();
    int sh = uni_deg(a) - uni_deg(b);
    q[sh] = c;
    Uni s(sh + 1, Rat(0));
    s[sh] = c;
    a = uni_sub(a, uni_mul(s, b));
  }
  uni_trim(q);
  return q;
}

Uni uni_gcd(Uni a, Uni b) {
  while (!b.empty()) {
    Uni r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = uni_scale(a, Rat(1) / a.back());  // monic
  return a;
}

using Bi = std::vector<Uni>;  // coefficient of Q-degree i (a poly in T) at [i]

void bi_trim(Bi& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Bi laurent_to_bi(const QTLaurent& f) {
  Bi r;
  for (auto& [e, c] : f.terms) {
    if (static_cast<size_t>(e.q2) >= r.size()) r.resize(e.q2 + 1);
    auto& u = r[e.q2];
    if (static_cast<size_t>(e.t2) >= u.size()) u.resize(e.t2 + 1, Rat(0));
    u[e.t2] = c;
  }
  return r;
}

QTLaurent bi_to_laurent(const Bi& p) {
  QTLaurent r;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] != 0) r.terms[{static_cast<int>(i), static_cast<int>(j)}] = p[i][j];
  return r;
}

Uni bi_content(const Bi& p) {
  Uni g;
  for (auto& u : p)
    if (!u.empty()) g = uni_gcd(g, u);
  return g;
}

Bi bi_div_content(const Bi& p, const Uni& g) {
  Bi r(p.size());
  for (size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) r[i] = uni_div(p[i], g);
  return r;
}

// pseudo-remainder of a by b in (Q[T])[Q]
Bi bi_prem(Bi a, const Bi& b) {
  bi_trim(a);
  const Uni& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    Uni la = a.back();
    int sh = static_cast<int>(a.size()) - 1 - db;
    Bi next(a.size() - 1);
    for (int i = 0; i < static_cast<int>(a.size()) - 1; ++i) {
      Uni v = uni_mul(a[i], lb);
      if (i - sh >= 0) v = uni_sub(v, uni_mul(b[i - sh], la));
      next[i] = std::move(v);
    }
    a = std::move(next);
    bi_trim(a);
  }
  return a;
}

Bi bi_primitive(Bi p) {
  bi_trim(p);
  if (p.empty()) return p;
  Uni c = bi_content(p);
  return bi_div_content(p, c);
}

}  // namespace

QTLaurent qt_gcd(const QTLaurent& a, const QTLaurent& b) {
  if (a.is_zero() || b.is_zero()) {
    const QTLaurent& f = a.is_zero() ? b : a;
    if (f.is_zero()) return QTLaurent();
    QTLaurent g = f.shifted(-f.min_q2(), -f.min_t2());
    return Rat(1) / g.terms.rbegin()->second * g;
  }
  Bi A = bi_primitive(laurent_to_bi(a.shifted(-a.min_q2(), -a.min_t2())));
  Bi B = bi_primitive(laurent_to_bi(b.shifted(-b.min_q2(), -b.min_t2())));
  Uni cg = uni_gcd(bi_content(laurent_to_bi(a.shifted(-a.min_q2(), -a.min_t2()))),
                   bi_content(laurent_to_bi(b.shifted(-b.min_q2(), -b.min_t2()))));
  while (!B.empty()) {
    Bi R = bi_prem(A, B);
    A = std::move(B);
    B = bi_primitive(std::move(R));
  }
  // gcd = cg(T) * primitive A(Q,T); cg may carry a power of T: restore & normalise
  Bi G(A.size());
  for (size_t i = 0; i < A.size(); ++i)
    if (!A[i].empty()) G[i] = uni_mul(A[i], cg);
  QTLaurent g = bi_to_laurent(G);
  if (g.is_zero()) return g;
  g = g.shifted(-g.min_q2(), -g.min_t2());
  return Rat(1) / g.terms.rbegin()->second * g;
}

// ---------------------------------------------------------------------------
// QTRational
// ---------------------------------------------------------------------------

QTRational::QTRational(QTLaurent n, QTLaurent d, bool do_reduce)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (do_reduce) reduce();
}

void QTRational::reduce() {
  if (num.is_zero()) {
    den = QTLaurent::one();
    return;
  }
  int nq = num.min_q2(), nt = num.min_t2(), dq = den.min_q2(), dt = den.min_t2();
  num = num.shifted(-nq, -nt);
  den = den.shifted(-dq, -dt);
  if (!den.is_constant()) {
    QTLaurent g = qt_gcd(num, den);
    if (!g.is_constant()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  Rat lead = den.terms.rbegin()->second;
  if (lead != 1) {
    num = Rat(1) / lead * num;
    den = Rat(1) / lead * den;
  }
  num = num.shifted(nq - dq, nt - dt);
}

const QTLaurent& QTRational::as_laurent() const {
  if (!is_polynomial()) throw std::domain_error("not a Laurent polynomial: " + str());
  return num;
}

QTRational QTRational::operator+(const QTRational& o) const {
  if (den == o.den) return QTRational(num + o.num, den);
  return QTRational(num * o.den + o.num * den, den * o.den);
}
QTRational QTRational::operator-(const QTRational& o) const {
  if (den == o.den) return QTRational(num - o.num, den);
  return QTRational(num * o.den - o.num * den, den * o.den);
}
QTRational QTRational::operator*(const QTRational& o) const {
  return QTRational(num * o.num, den * o.den);
}
QTRational QTRational::operator/(const QTRational& o) const {
  if (o.num.is_zero()) throw std::domain_error("division by zero");
  return QTRational(num * o.den, den * o.num);
}
QTRational QTRational::operator-() const {
  QTRational r = *this;
  r.num = -r.num;
  return r;
}

std::string QTRational::str() const {
  if (is_polynomial()) return num.str();
  return "(" + num.str() + ") / (" + den.str() + ")";
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

namespace {

QTLaurent trunc2(const QTLaurent& f, int bound2) {
  QTLaurent r;
  for (auto& [e, c] : f.terms)
    if (e.q2 + e.t2 <= bound2) r.terms[e] = c;
  return r;
}

}  // namespace

QTSeries series_add(const QTSeries& a, const QTSeries& b) {
  QTSeries r{a.terms + b.terms, std::min(a.bound, b.bound)};
  r.truncate();
  return r;
}

QTSeries series_mul(const QTSeries& a, const QTSeries& b) {
  QTSeries r{a.terms * b.terms, std::min(a.bound, b.bound)};
  r.truncate();
  return r;
}

QTSeries series_expand(const QTRational& f, int bound) {
  if (f.num.is_zero()) return {QTLaurent(), bound};
  // locate the unique lowest-total-degree term of the denominator
  int m2 = f.den.min_tdeg2();
  const std::pair<const Exp, Rat>* low = nullptr;
  for (auto& [e, c] : f.den.terms)
    if (e.q2 + e.t2 == m2) {
      if (low) throw std::domain_error("denominator lowest-degree part is not a monomial");
      low = &*std::as_const(f.den.terms).find(e);
    }
  Rat c0 = low->second;
  int a2 = low->first.q2, b2 = low->first.t2;
  QTLaurent h = Rat(1) / c0 * f.den.shifted(-a2, -b2) - QTLaurent::one();
  QTLaurent g = Rat(1) / c0 * f.num.shifted(-a2, -b2);
  int s = g.min_tdeg2();
  int need2 = 2 * bound - s;  // accuracy needed for the geometric series
  QTLaurent acc = QTLaurent::one(), pw = QTLaurent::one();
  for (int k = 1; k <= need2 && !pw.is_zero(); ++k) {
    pw = trunc2(pw * (-h), need2);
    acc += pw;
  }
  QTSeries r{trunc2(g * acc, 2 * bound), bound};
  return r;
}

// ---------------------------------------------------------------------------
// factored products and the Omega functional
// ---------------------------------------------------------------------------

void QTFactored::mul_factor(int i, int j, long e) {
  if (e == 0 || coeff == 0) return;
  if (i == 0 && j == 0) {  // (1 - 1) = 0
    if (e < 0) throw std::domain_error("factor (1-1) in denominator");
    coeff = 0;
    factors.clear();
    return;
  }
  if (i < 0 || (i == 0 && j < 0)) {
    // (1 - q^i t^j) = -q^i t^j (1 - q^{-i} t^{-j})
    if (e % 2 != 0) coeff = -coeff;
    mq2 += 2 * i * static_cast<int>(e);
    mt2 += 2 * j * static_cast<int>(e);
    i = -i;
    j = -j;
  }
  auto [it, fresh] = factors.emplace(std::pair{i, j}, e);
  if (!fresh) {
    it->second += e;
    if (it->second == 0) factors.erase(it);
  }
}

QTFactored& QTFactored::operator*=(const QTFactored& o) {
  if (coeff == 0 || o.coeff == 0) {
    coeff = 0;
    factors.clear();
    return *this;
  }
  coeff *= o.coeff;
  mq2 += o.mq2;
  mt2 += o.mt2;
  for (auto& [k, e] : o.factors) mul_factor(k.first, k.second, e);
  return *this;
}

namespace {

QTLaurent expand_factor_map(const std::map<std::pair<int, int>, long>& m, bool positive) {
  QTLaurent r = QTLaurent::one();
  for (auto& [k, e] : m) {
    long ee = positive ? std::max(e, 0L) : std::max(-e, 0L);
    if (ee == 0) continue;
    QTLaurent f = QTLaurent::one() - QTLaurent::monomial(1, 2 * k.first, 2 * k.second);
    r = r * f.pow(ee);
  }
  return r;
}

}  // namespace

QTLaurent QTFactored::numerator_poly() const { return expand_factor_map(factors, true); }
QTLaurent QTFactored::denominator_poly() const { return expand_factor_map(factors, false); }

QTRational QTFactored::to_rational() const {
  if (coeff == 0) return QTRational(Rat(0));
  return QTRational(QTLaurent::monomial(coeff, mq2, mt2) * numerator_poly(),
                    denominator_poly());
}

QTLaurent QTFactored::expand() const {
  if (coeff == 0) return QTLaurent();
  for (auto& [k, e] : factors)
    if (e < 0) throw std::domain_error("expand() on a factored form with denominator");
  return QTLaurent::monomial(coeff, mq2, mt2) * numerator_poly();
}

void FactoredSum::add(const QTFactored& term) { add(term, QTLaurent::one()); }

void FactoredSum::add(const QTFactored& term, const QTLaurent& extra_num) {
  if (term.coeff == 0 || extra_num.is_zero()) return;
  std::map<std::pair<int, int>, long> tden;
  for (auto& [k, e] : term.factors)
    if (e < 0) tden[k] = -e;
  std::map<std::pair<int, int>, long> newden = started_ ? den_ : tden;
  if (started_)
    for (auto& [k, e] : tden) newden[k] = std::max(newden.count(k) ? newden[k] : 0L, e);
  // scale the accumulated numerator up to the new common denominator
  std::map<std::pair<int, int>, long> d1, d2;
  for (auto& [k, e] : newden) {
    long old = started_ && den_.count(k) ? den_.at(k) : 0;
    long tv = tden.count(k) ? tden.at(k) : 0;
    if (!started_) old = 0;
    if (e - old > 0) d1[k] = e - old;
    if (e - tv > 0) d2[k] = e - tv;
  }
  if (started_ && !d1.empty()) num_ = num_ * expand_factor_map(d1, true);
  QTLaurent tnum = QTLaurent::monomial(term.coeff, term.mq2, term.mt2) * extra_num *
                   term.numerator_poly() * expand_factor_map(d2, true);
  if (started_)
    num_ += tnum;
  else
    num_ = tnum;
  den_ = std::move(newden);
  started_ = true;
}

QTLaurent FactoredSum::polynomial_value() const {
  if (!started_) return QTLaurent();
  auto q = divide_exact(num_, expand_factor_map(den_, true));
  if (!q) throw std::runtime_error("internal error: sum did not simplify to a Laurent polynomial");
  return *q;
}

QTRational FactoredSum::rational_value() const {
  if (!started_) return QTRational(Rat(0));
  return QTRational(num_, expand_factor_map(den_, true));
}

QTFactored omega_zero(const QTLaurent& E) {
  if (!E.integer_exponents()) throw std::domain_error("Omega requires integer exponents");
  if (!E.integer_coefficients()) throw std::domain_error("Omega requires integer coefficients");
  QTFactored r;
  for (auto& [e, c] : E.terms) {
    if (e.q2 == 0 && e.t2 == 0) continue;  // constant term dropped: Omega[...]^0
    if (!c.get_num().fits_slong_p()) throw std::domain_error("Omega exponent overflow");
    r.mul_factor(e.q2 / 2, e.t2 / 2, c.get_num().get_si());
  }
  return r;
}

QTLaurent pleth_power(long k, const QTLaurent& E) {
  QTLaurent r;
  for (auto& [e, c] : E.terms)
    r.terms[{static_cast<int>(e.q2 * k), static_cast<int>(e.t2 * k)}] = c;
  return r;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

using njson = nlohmann::ordered_json;

njson laurent_to_njson(const QTLaurent& f) {
  njson arr = njson::array();
  for (auto& [e, c] : f.terms) {
    njson term;
    term["q"] = exp_str(e.q2);
    term["t"] = exp_str(e.t2);
    term["c"] = c.get_str();
    arr.push_back(term);
  }
  return arr;
}

int exp_from_str(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return 2 * std::stoi(s);
  if (s.substr(slash + 1) != "2") throw std::domain_error("bad exponent: " + s);
  return std::stoi(s.substr(0, slash));
}

QTLaurent laurent_from_njson(const njson& arr) {
  QTLaurent f;
  for (auto& term : arr) {
    Rat c(term.at("c").get<std::string>());
    c.canonicalize();
    f.add_term({exp_from_str(term.at("q").get<std::string>()),
                exp_from_str(term.at("t").get<std::string>())},
               c);
  }
  return f;
}

}  // namespace

std::string to_json(const QTLaurent& f) { return laurent_to_njson(f).dump(); }

std::string to_json(const QTRational& f) {
  njson j;
  j["num"] = laurent_to_njson(f.num);
  j["den"] = laurent_to_njson(f.den);
  return j.dump();
}

QTLaurent laurent_from_json(const std::string& s) {
  return laurent_from_njson(njson::parse(s));
}

QTRational rational_from_json(const std::string& s) {
  njson j = njson::parse(s);
  return QTRational(laurent_from_njson(j.at("num")), laurent_from_njson(j.at("den")));
}

}  // namespace qtforge
