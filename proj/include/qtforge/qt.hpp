// Exact arithmetic in the two-variable Laurent ring Q[q^{1/2},t^{1/2},q^{-1/2},t^{-1/2}]
// and its fraction field.  Exponents are half-integers stored doubled, so the monomial
// q^{3/2} t^{-2} has key {3,-4}.  Coefficients are exact rationals (GMP).
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtforge {

using Rat = mpq_class;

// doubled exponent pair: represents q^{q2/2} t^{t2/2}
struct Exp {
  int q2 = 0;
  int t2 = 0;
  auto operator<=>(const Exp&) const = default;
};

class QTLaurent {
 public:
  // sparse terms, zero coefficients never stored
  std::map<Exp, Rat> terms;

  QTLaurent() = default;
  explicit QTLaurent(const Rat& c) {
    if (c != 0) terms[{0, 0}] = c;
  }
  QTLaurent(long num, long den) : QTLaurent(Rat(num, den)) {}
  static QTLaurent monomial(const Rat& c, int q2, int t2) {
    QTLaurent r;
    if (c != 0) r.terms[{q2, t2}] = c;
    return r;
  }
  static QTLaurent q(int e2 = 2) { return monomial(1, e2, 0); }
  static QTLaurent t(int e2 = 2) { return monomial(1, 0, e2); }
  static QTLaurent one() { return QTLaurent(Rat(1)); }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp{0, 0});
  }
  bool is_monomial() const { return terms.size() == 1; }
  Rat constant_term() const {
    auto it = terms.find({0, 0});
    return it == terms.end() ? Rat(0) : it->second;
  }
  bool integer_exponents() const {
    for (auto& [e, c] : terms)
      if (e.q2 % 2 != 0 || e.t2 % 2 != 0) return false;
    return true;
  }
  bool integer_coefficients() const {
    for (auto& [e, c] : terms)
      if (c.get_den() != 1) return false;
    return true;
  }

  void add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  QTLaurent& operator+=(const QTLaurent& o) {
    for (auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }
  QTLaurent& operator-=(const QTLaurent& o) {
    for (auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }
  friend QTLaurent operator+(QTLaurent a, const QTLaurent& b) { return a += b; }
  friend QTLaurent operator-(QTLaurent a, const QTLaurent& b) { return a -= b; }
  QTLaurent operator-() const {
    QTLaurent r;
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }
  friend QTLaurent operator*(const QTLaurent& a, const QTLaurent& b) {
    QTLaurent r;
    for (auto& [ea, ca] : a.terms)
      for (auto& [eb, cb] : b.terms) r.add_term({ea.q2 + eb.q2, ea.t2 + eb.t2}, ca * cb);
    return r;
  }
  QTLaurent& operator*=(const QTLaurent& o) { return *this = *this * o; }
  friend QTLaurent operator*(const Rat& c, const QTLaurent& a) {
    QTLaurent r;
    if (c == 0) return r;
    for (auto& [e, v] : a.terms) r.terms[e] = c * v;
    return r;
  }
  bool operator==(const QTLaurent&) const = default;

  QTLaurent pow(long k) const;              // k >= 0, or k<0 for a monomial
  QTLaurent shifted(int dq2, int dt2) const;  // multiply by q^{dq2/2} t^{dt2/2}

  // substitute q -> fq, t -> ft; negative or half-integer exponents of *this require
  // the corresponding image to be a single monomial
  QTLaurent subst(const QTLaurent& fq, const QTLaurent& ft) const;
  // evaluate at rational points (requires integer exponents; negative needs nonzero base)
  Rat eval(const Rat& qv, const Rat& tv) const;

  // support bounds on doubled exponents; 0 for the zero polynomial
  int min_q2() const;
  int max_q2() const;
  int min_t2() const;
  int max_t2() const;
  // minimal/maximal total (doubled) degree q2+t2 over the support
  int min_tdeg2() const;
  int max_tdeg2() const;

  std::string str() const;  // human-readable, deterministic
};

// exact division in the Laurent ring; nullopt if b does not divide a
std::optional<QTLaurent> divide_exact(const QTLaurent& a, const QTLaurent& b);

// gcd of two Laurent polynomials with integer exponents, as a polynomial in (q,t):
// monomial content removed, leading coefficient (lex greatest term) 1
QTLaurent qt_gcd(const QTLaurent& a, const QTLaurent& b);

// element of the fraction field Q(q^{1/2}, t^{1/2}); kept canonical: den is a polynomial
// (nonnegative integer exponents, min q- and t-exponent zero), num/den coprime after
// monomial-content extraction, den lex-leading coefficient 1
class QTRational {
 public:
  QTLaurent num, den;

  QTRational() : num(), den(QTLaurent::one()) {}
  QTRational(const Rat& c) : num(c), den(QTLaurent::one()) {}
  QTRational(const QTLaurent& n) : num(n), den(QTLaurent::one()) {}
  QTRational(QTLaurent n, QTLaurent d, bool do_reduce = true);

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den == QTLaurent::one(); }
  // the Laurent polynomial when den == 1 (after reduce den==1 iff polynomial)
  const QTLaurent& as_laurent() const;

  QTRational operator+(const QTRational& o) const;
  QTRational operator-(const QTRational& o) const;
  QTRational operator*(const QTRational& o) const;
  QTRational operator/(const QTRational& o) const;
  QTRational operator-() const;
  QTRational& operator+=(const QTRational& o) { return *this = *this + o; }
  QTRational& operator-=(const QTRational& o) { return *this = *this - o; }
  QTRational& operator*=(const QTRational& o) { return *this = *this * o; }
  QTRational& operator/=(const QTRational& o) { return *this = *this / o; }

  // canonical forms agree, so equality is component-wise; cross_equal is the
  // independent cross-multiplication test
  bool operator==(const QTRational& o) const { return num == o.num && den == o.den; }
  friend bool cross_equal(const QTRational& a, const QTRational& b) {
    return a.num * b.den == b.num * a.den;
  }

  QTRational subst(const QTLaurent& fq, const QTLaurent& ft) const {
    return QTRational(num.subst(fq, ft), den.subst(fq, ft));
  }

  std::string str() const;

 private:
  void reduce();
};

// truncated power series: all terms of total degree (q2+t2)/2 <= bound are exact
struct QTSeries {
  QTLaurent terms;
  int bound = 0;  // total degree bound (in whole units)

  void truncate() {
    for (auto it = terms.terms.begin(); it != terms.terms.end();)
      it = (it->first.q2 + it->first.t2 > 2 * bound) ? terms.terms.erase(it) : std::next(it);
  }
  bool operator==(const QTSeries&) const = default;
};

QTSeries series_add(const QTSeries& a, const QTSeries& b);
QTSeries series_mul(const QTSeries& a, const QTSeries& b);
// expand a fraction whose denominator has a unique term of minimal total degree
QTSeries series_expand(const QTRational& f, int bound);

// product of binomial factors (1 - q^i t^j)^e times a monomial, kept factored.
// factor keys are normalised: i > 0, or i == 0 and j > 0.
struct QTFactored {
  Rat coeff = 1;
  int mq2 = 0, mt2 = 0;                 // monomial part q^{mq2/2} t^{mt2/2}
  std::map<std::pair<int, int>, long> factors;  // (i,j) -> exponent, may be negative

  void mul_factor(int i, int j, long e);  // multiply by (1 - q^i t^j)^e, normalising
  QTFactored& operator*=(const QTFactored& o);
  friend QTFactored operator*(QTFactored a, const QTFactored& b) { return a *= b; }
  bool is_zero() const { return coeff == 0; }

  QTLaurent numerator_poly() const;    // expansion of positive-exponent factors
  QTLaurent denominator_poly() const;  // expansion of negative-exponent factors
  QTRational to_rational() const;
  // expansion when no negative-exponent factors remain (asserted)
  QTLaurent expand() const;
};

// exact sum accumulator for QTFactored terms sharing structured denominators;
// keeps the running value as num / (product of binomial factors)
class FactoredSum {
 public:
  void add(const QTFactored& term);
  // adds extra_num * term
  void add(const QTFactored& term, const QTLaurent& extra_num);
  // exact quotient; throws std::runtime_error if the sum is not a Laurent polynomial
  QTLaurent polynomial_value() const;
  QTRational rational_value() const;

 private:
  QTLaurent num_;                              // accumulated numerator
  std::map<std::pair<int, int>, long> den_;    // common denominator factors (exps > 0)
  bool started_ = false;
};

// the Omega functional: for E = sum a_{ij} q^i t^j (integer exponents & coefficients),
// Omega[E]^0 = prod_{(i,j) != (0,0)} (1 - q^i t^j)^{a_ij}, the constant term dropped
QTFactored omega_zero(const QTLaurent& E);

// plethysm by p_k on alphabets: q -> q^k, t -> t^k
QTLaurent pleth_power(long k, const QTLaurent& E);

// JSON (de)serialisation; schema: QTLaurent is a list of {"q": "<e>", "t": "<e>",
// "c": "<num>[/<den>]"} with exponents "a" or "a/2"; QTRational is {"num":…, "den":…}
std::string to_json(const QTLaurent& f);
std::string to_json(const QTRational& f);
QTLaurent laurent_from_json(const std::string& s);
QTRational rational_from_json(const std::string& s);

}  // namespace qtforge
