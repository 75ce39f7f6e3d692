#include "qtforge/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace qtforge {

QTLaurent biv_kostant(const Weight& lam, int n) { return kostant_colored(lam, n, true); }

// ---------------------------------------------------------------------------
// PNP fiber character and the Garsia-Haiman recursion
// ---------------------------------------------------------------------------

namespace {

QTFactored inverse_factored(const QTFactored& f) {
  if (f.coeff == 0) throw std::domain_error("inverse of zero");
  QTFactored r;
  r.coeff = Rat(1) / f.coeff;
  r.mq2 = -f.mq2;
  r.mt2 = -f.mt2;
  for (auto& [k, e] : f.factors) r.factors[k] = -e;
  return r;
}

// B_{sigma(k)} for the first k cells of the chain
QTLaurent b_poly_prefix(const StandardTableau& syt, int k) {
  QTLaurent b;
  for (int i = 0; i < k; ++i) b.add_term({2 * syt.cell_of[i].first, 2 * syt.cell_of[i].second}, 1);
  return b;
}

int shape_arm(const std::vector<int>& rows, int c, int r) { return rows[r] - 1 - c; }
int shape_leg(const std::vector<int>& rows, int c, int r) {
  int l = 0;
  for (int rr = r + 1; rr < static_cast<int>(rows.size()) && rows[rr] > c; ++rr) l++;
  return l;
}

}  // namespace

QTFactored pnp_tableau_term(const Partition& mu, const StandardTableau& syt) {
  int n = part_size(mu);
  QTFactored pref = hook_product_factored(mu);
  pref.mul_factor(1, 0, -n);
  pref.mul_factor(0, 1, -n);
  QTLaurent binv = b_poly(mu).subst(QTLaurent::q(-2), QTLaurent::t(-2));  // B_mu(1/q,1/t)
  pref *= inverse_factored(omega_zero(binv));
  QTLaurent onembinom = QTLaurent::one() - QTLaurent::q() - QTLaurent::t() +
                        QTLaurent::q() * QTLaurent::t();  // 1 - q - t + qt
  for (int k = 1; k <= n; ++k) {
    auto [c, r] = syt.cell_of[k - 1];
    QTLaurent E = onembinom * b_poly_prefix(syt, k - 1) *
                  QTLaurent::monomial(1, -2 * c, -2 * r);
    pref *= omega_zero(E);
  }
  return pref;
}

QTFactored gh_tableau_term(const Partition& mu, const StandardTableau& syt) {
  int n = part_size(mu);
  QTFactored out;
  std::vector<int> rows;  // shape after k cells
  for (int k = 1; k <= n; ++k) {
    auto [c, r] = syt.cell_of[k - 1];
    std::vector<int> prev = rows;
    if (r == static_cast<int>(rows.size())) rows.push_back(0);
    rows[r]++;
    // boxes in the same row as p_k
    for (int cc = 0; cc < rows[r]; ++cc) {
      if (cc == c) continue;
      int ak = shape_arm(rows, cc, r), lk = shape_leg(rows, cc, r);
      int ap = shape_arm(prev, cc, r), lp = shape_leg(prev, cc, r);
      out.mul_factor(1 + ak, -lk, 1);
      out.mul_factor(1 + ap, -lp, -1);
    }
    // boxes in the same column as p_k
    for (int rr = 0; rr < static_cast<int>(rows.size()); ++rr) {
      if (rr == r || rows[rr] <= c) continue;
      int ak = shape_arm(rows, c, rr), lk = shape_leg(rows, c, rr);
      int ap = shape_arm(prev, c, rr), lp = shape_leg(prev, c, rr);
      out.mul_factor(-ak, 1 + lk, 1);
      out.mul_factor(-ap, 1 + lp, -1);
    }
  }
  return out;
}

namespace {

QTLaurent syt_sum_character(const Partition& mu, bool garsia_haiman) {
  Partition m = normalized(mu);
  FactoredSum sum;
  for (auto& syt : syt_enumerate(m))
    sum.add(garsia_haiman ? gh_tableau_term(m, syt) : pnp_tableau_term(m, syt));
  QTLaurent out = sum.polynomial_value();
  for (auto& [e, c] : out.terms)
    if (c < 0 || c.get_den() != 1)
      throw std::runtime_error("internal error: character has a negative or fractional term");
  return out;
}

}  // namespace

QTLaurent pnp_character(const Partition& mu) { return syt_sum_character(mu, false); }
QTLaurent garsia_haiman_character(const Partition& mu) { return syt_sum_character(mu, true); }

bool gh_equivalence_per_tableau(const Partition& mu) {
  Partition m = normalized(mu);
  for (auto& syt : syt_enumerate(m)) {
    QTFactored a = pnp_tableau_term(m, syt);
    QTFactored b = gh_tableau_term(m, syt);
    QTFactored quot = a * inverse_factored(b);
    if (quot.factors.empty() && quot.mq2 == 0 && quot.mt2 == 0 && quot.coeff == 1) continue;
    if (!cross_equal(a.to_rational(), b.to_rational())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// polygraph / b-coefficient / R^nil sums over nu
// ---------------------------------------------------------------------------

namespace {

QTRational nu_sum(int n, const SchurExpansion& front,
                  const std::function<QTLaurent(const Partition&)>& weight_of,
                  const std::vector<Partition>& nus) {
  FactoredSum sum;
  for (auto& nu : nus) {
    QTLaurent w = weight_of(nu);
    if (w.is_zero()) continue;
    QTRational pl = plethysm_alphabet(front, b_poly(nu));
    sum.add(inverse_factored(hook_product_factored(nu)), pl.as_laurent() * w);
  }
  (void)n;
  return sum.rational_value();
}

}  // namespace

QTRational polygraph_isotypic(int n, const Partition& mu, const Partition& lam) {
  return nu_sum(n, SchurExpansion::single(normalized(mu)),
                [&](const Partition& nu) { return kostka_modified(lam, nu); },
                partitions_of(n));
}

QTRational b_coeff(const Partition& mu, const Partition& lam) {
  int n = part_size(lam);
  if (static_cast<int>(normalized(mu).size()) >= n)
    throw std::domain_error("b_coeff: mu needs fewer than n parts");
  return nu_sum(n, phi_schur(normalized(mu)),
                [&](const Partition& nu) { return kostka_modified(lam, nu); },
                partitions_of(n));
}

QTRational rnil_isotypic(const Partition& mu, const Partition& lam) {
  int n = part_size(lam);
  std::vector<Partition> nus;
  for (auto& nu : partitions_of(n))
    if (dominance_le(nu, lam)) nus.push_back(nu);
  return nu_sum(n, phi_schur(normalized(mu)),
                [&](const Partition& nu) { return k_coeff(lam, nu); }, nus);
}

QTRational rnil_specialized(const Partition& mu, const Partition& lam) {
  QTLaurent blam = b_poly(lam).subst(QTLaurent::q(), QTLaurent::q(-2));  // B_lam(q, 1/q)
  QTRational pl = plethysm_alphabet(phi_schur(normalized(mu)), blam);
  QTLaurent hq_inv = hook_poly(lam, 'q').subst(QTLaurent::q(-2), QTLaurent::t());  // H_lam(1/q)
  int nl = static_cast<int>(n_stat(lam));
  return pl * QTRational(QTLaurent::monomial(1, -2 * nl, 0), hq_inv);
}

// ---------------------------------------------------------------------------
// the two global-sections series
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::map<Weight, QTLaurent>;

void zadd(ZPoly& a, const Weight& v, const QTLaurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = a.emplace(v, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

// multiply by (1 - mon * e^beta)
ZPoly zmul_binomial(const ZPoly& a, const QTLaurent& mon, const Weight& beta) {
  ZPoly r = a;
  for (auto& [v, c] : a) {
    Weight w = v;
    for (size_t i = 0; i < w.size(); ++i) w[i] += beta[i];
    zadd(r, w, -(mon * c));
  }
  return r;
}

// exact division of antisymmetrized polynomials by the Weyl alternant J
ZPoly zdivide_exact(ZPoly num, const ZPoly& den) {
  ZPoly quo;
  auto lead_den = *den.rbegin();
  size_t guard = 0;
  while (!num.empty()) {
    if (++guard > 2000000) throw std::runtime_error("internal error: z-division diverged");
    auto lead = *num.rbegin();
    Weight dv = lead.first;
    for (size_t i = 0; i < dv.size(); ++i) dv[i] -= lead_den.first[i];
    auto q = divide_exact(lead.second, lead_den.second);
    if (!q) throw std::runtime_error("internal error: Weyl-denominator division failed");
    zadd(quo, dv, *q);
    for (auto& [v, c] : den) {
      Weight w = dv;
      for (size_t i = 0; i < w.size(); ++i) w[i] += v[i];
      zadd(num, w, -(*q * c));
    }
  }
  return quo;
}

QTLaurent trunc_laurent(const QTLaurent& f, int D) {
  QTLaurent r;
  for (auto& [e, c] : f.terms)
    if (e.q2 + e.t2 <= 2 * D) r.terms[e] = c;
  return r;
}

void ztruncate(ZPoly& a, int D) {
  for (auto it = a.begin(); it != a.end();) {
    it->second = trunc_laurent(it->second, D);
    it = it->second.is_zero() ? a.erase(it) : std::next(it);
  }
}

// multiply by the truncated geometric series of 1/(1 - mon e^beta)
ZPoly zmul_geo(const ZPoly& a, const QTLaurent& mon, const Weight& beta, int D) {
  ZPoly r;
  for (auto& [v, c] : a) {
    Weight w = v;
    QTLaurent m = c;
    for (int k = 0; 2 * k <= 2 * D; ++k) {
      if (k > 0) {
        for (size_t i = 0; i < w.size(); ++i) w[i] += beta[i];
        m = trunc_laurent(m * mon, D);
        if (m.is_zero()) break;
      }
      zadd(r, w, m);
    }
  }
  ztruncate(r, D);
  return r;
}

std::vector<std::pair<std::vector<int>, int>> all_perms_with_sign(int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[i] > idx[j]) sign = -sign;
    out.emplace_back(idx, sign);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

TCharacterSeries finish_series(int n, int D, ZPoly body) {
  // multiply by (1-q)^{-n} (1-t)^{-n}
  Weight zero(n, 0);
  for (int i = 0; i < n; ++i) {
    body = zmul_geo(body, QTLaurent::q(), zero, D);
    body = zmul_geo(body, QTLaurent::t(), zero, D);
  }
  TCharacterSeries out;
  out.n = n;
  out.bound = D;
  for (auto& [v, c] : body) out.coeffs[v] = QTSeries{c, D};
  return out;
}

}  // namespace

TCharacterSeries chi_R_atiyah_bott(int n, int D) {
  RootDataA root(n);
  ZPoly num;
  for (auto& [perm, sign] : all_perms_with_sign(n)) {
    Weight wdelta(n);
    for (int i = 0; i < n; ++i) wdelta[perm[i]] = root.delta[i];
    ZPoly term;
    term[wdelta] = QTLaurent(Rat(sign));
    for (auto& alpha : root.pos_roots) {
      Weight wa(n), nwa(n);
      for (int i = 0; i < n; ++i) wa[perm[i]] = alpha[i];
      for (int i = 0; i < n; ++i) nwa[i] = -wa[i];
      term = zmul_binomial(term, QTLaurent::q() * QTLaurent::t(), wa);   // (1 - qt e^{w a})
      term = zmul_binomial(term, QTLaurent::q(), nwa);                   // (1 - q e^{-w a})
      term = zmul_binomial(term, QTLaurent::t(), nwa);                   // (1 - t e^{-w a})
    }
    for (auto& [v, c] : term) zadd(num, v, c);
  }
  ZPoly weyl;
  for (auto& [perm, sign] : all_perms_with_sign(n)) {
    Weight wdelta(n);
    for (int i = 0; i < n; ++i) wdelta[perm[i]] = root.delta[i];
    zadd(weyl, wdelta, QTLaurent(Rat(sign)));
  }
  ZPoly body = zdivide_exact(std::move(num), weyl);
  ztruncate(body, D);
  // series part: prod over all roots (pos and neg) of 1/((1-q e^a)(1-t e^a))
  for (auto& alpha : root.pos_roots) {
    Weight neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -alpha[i];
    body = zmul_geo(body, QTLaurent::q(), alpha, D);
    body = zmul_geo(body, QTLaurent::t(), alpha, D);
    body = zmul_geo(body, QTLaurent::q(), neg, D);
    body = zmul_geo(body, QTLaurent::t(), neg, D);
  }
  return finish_series(n, D, std::move(body));
}

TCharacterSeries chi_R_thm(int n, int D) {
  ZPoly body;
  int H = D * (n - 1);  // height bound: omitted lambda only affect degrees > D
  std::vector<int> m(std::max(n - 1, 0), 0);
  auto emit = [&]() {
    Weight lam(n, 0);
    if (n > 1) {
      lam[0] = m[0];
      for (int i = 1; i < n - 1; ++i) lam[i] = m[i] - m[i - 1];
      lam[n - 1] = -m[n - 2];
    }
    QTLaurent kp = trunc_laurent(biv_kostant(lam, n), D);
    if (kp.is_zero()) return;
    for (auto& [muw, at] : degen_macdonald(lam, n, true)) {
      // a~_{lam,mu}(qt): substitute t -> qt
      QTLaurent factor =
          trunc_laurent(kp * at.subst(QTLaurent::q(), QTLaurent::monomial(1, 2, 2)), D);
      if (factor.is_zero()) continue;
      for (auto& [zv, mult] : schur_z_expansion(muw)) zadd(body, zv, Rat(mult) * factor);
    }
  };
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n - 1) {
      emit();
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      m[i] = v;
      self(self, i + 1, rem - v);
    }
    m[i] = 0;
  };
  if (n == 1) {
    zadd(body, {0}, QTLaurent::one());
  } else {
    rec(rec, 0, H);
  }
  ztruncate(body, D);
  return finish_series(n, D, std::move(body));
}

bool tcharacter_equal_window(const TCharacterSeries& a, const TCharacterSeries& b) {
  if (a.n != b.n) return false;
  int D = std::min(a.bound, b.bound);
  std::set<Weight> keys;
  for (auto& [v, c] : a.coeffs) keys.insert(v);
  for (auto& [v, c] : b.coeffs) keys.insert(v);
  for (auto& v : keys) {
    bool in_window = true;
    for (int x : v)
      if (std::abs(x) > D) in_window = false;
    if (!in_window) continue;
    auto ita = a.coeffs.find(v);
    auto itb = b.coeffs.find(v);
    QTLaurent ca = ita == a.coeffs.end() ? QTLaurent() : trunc_laurent(ita->second.terms, D);
    QTLaurent cb = itb == b.coeffs.end() ? QTLaurent() : trunc_laurent(itb->second.terms, D);
    if (ca != cb) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Garsia-Haiman lemmas
// ---------------------------------------------------------------------------

GHLemmaResult gh_lemma_checks(const Partition& nu) {
  Partition p = normalized(nu);
  Partition pc = conjugate(p);
  QTLaurent onembinom = QTLaurent::one() - QTLaurent::q() - QTLaurent::t() +
                        QTLaurent::q() * QTLaurent::t();
  GHLemmaResult res{true, true, true};
  {
    // GH1, both displayed forms
    QTLaurent lhs = b_poly(p) * onembinom;
    QTLaurent rhs1 = QTLaurent::one(), rhs2 = QTLaurent::one();
    int l = static_cast<int>(p.size()), lc = static_cast<int>(pc.size());
    for (int i = 1; i <= l; ++i) {
      rhs1 += QTLaurent::monomial(1, 2 * p[i - 1], 2 * i) -
              QTLaurent::monomial(1, 2 * p[i - 1], 2 * (i - 1));
    }
    rhs1 -= QTLaurent::t(2 * l);
    for (int j = 1; j <= lc; ++j) {
      rhs2 += QTLaurent::monomial(1, 2 * j, 2 * pc[j - 1]) -
              QTLaurent::monomial(1, 2 * (j - 1), 2 * pc[j - 1]);
    }
    rhs2 -= QTLaurent::q(2 * lc);
    res.gh1 = (lhs == rhs1) && (lhs == rhs2);
  }
  // GH2 and GH3 over every removable box (c,r) of p
  for (size_t r = 0; r < p.size(); ++r) {
    if (r + 1 < p.size() && p[r] == p[r + 1]) continue;
    int c = p[r] - 1;
    Partition small = p;
    small[r]--;
    small = normalized(small);
    {
      QTLaurent lhs = b_poly(small) * onembinom;
      QTLaurent rhs = QTLaurent::one() - QTLaurent::monomial(1, 2 * c, 2 * static_cast<int>(r));
      for (int i = 1; i <= c; ++i)
        rhs += (QTLaurent::q(2 * i) - QTLaurent::q(2 * (i - 1))) * QTLaurent::t(2 * pc[i - 1]);
      for (int j = 1; j <= static_cast<int>(r); ++j)
        rhs += QTLaurent::q(2 * p[j - 1]) *
               (QTLaurent::t(2 * j) - QTLaurent::t(2 * (j - 1)));
      if (lhs != rhs) res.gh2 = false;
    }
    {
      // GH3: arms and legs measured in p (a_n) and small (a_{n-1})
      auto arm = [](const Partition& sh, int cc, int rr) { return sh[rr] - 1 - cc; };
      auto leg = [](const Partition& sh, int cc, int rr) {
        int l = 0;
        for (int r2 = rr + 1; r2 < static_cast<int>(sh.size()) && sh[r2] > cc; ++r2) l++;
        return l;
      };
      QTLaurent lhs;
      for (int j = 0; j < static_cast<int>(r); ++j) {  // column boxes (c, j)
        lhs += QTLaurent::monomial(1, 2 * (1 + arm(small, c, j)), -2 * leg(small, c, j));
        lhs -= QTLaurent::monomial(1, 2 * (1 + arm(p, c, j)), -2 * leg(p, c, j));
      }
      for (int i = 0; i < c; ++i) {  // row boxes (i, r)
        lhs += QTLaurent::monomial(1, -2 * arm(small, i, static_cast<int>(r)),
                                   2 * (1 + leg(small, i, static_cast<int>(r))));
        lhs -= QTLaurent::monomial(1, -2 * arm(p, i, static_cast<int>(r)),
                                   2 * (1 + leg(p, i, static_cast<int>(r))));
      }
      QTLaurent rhs;
      for (int i = 1; i <= c; ++i)
        rhs += (QTLaurent::q(2 * i) - QTLaurent::q(2 * (i - 1))) * QTLaurent::t(2 * pc[i - 1]);
      for (int j = 1; j <= static_cast<int>(r); ++j)
        rhs += QTLaurent::q(2 * p[j - 1]) *
               (QTLaurent::t(2 * j) - QTLaurent::t(2 * (j - 1)));
      rhs = rhs * QTLaurent::monomial(1, -2 * c, -2 * static_cast<int>(r));
      if (lhs != rhs) res.gh3 = false;
    }
  }
  return res;
}

}  // namespace qtforge
