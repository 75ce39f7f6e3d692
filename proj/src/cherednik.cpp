#include "qtforge/cherednik.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qtforge {

Rat kappa(const Rat& k, const Partition& lam) {
  Rat v = Rat(part_size(lam), 2) + k * Rat(n_stat(lam) - n_stat(conjugate(lam)));
  v.canonicalize();
  return v;
}

namespace {

// one mu-term of eq:definitionGpoly with the t^kappa monomial attached
struct GTerm {
  Partition mu;
  Rat coeff;    // eps_r(mu) * c^lam_{quo(mu)}
  int kappa2;   // doubled exponent of t^kappa
};

// D(t) = prod_{i<=m} (1-t^i)^{floor(m/i)}: a common multiple of every
// prod_i (1 - t^{rho_i}) over cycle types rho |- m
QTLaurent master_denominator(int m) {
  QTLaurent d = QTLaurent::one();
  for (int i = 1; i <= m; ++i) {
    QTLaurent f = QTLaurent::one() - QTLaurent::t(2 * i);
    for (int e = 0; e < m / i; ++e) d *= f;
  }
  return d;
}

// P_rho = D / prod_i (1 - t^{rho_i}), computed once per (m, rho)
const QTLaurent& complement_poly(int m, const Partition& rho) {
  static std::map<std::pair<int, Partition>, QTLaurent> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find({m, rho});
  if (it != cache.end()) return it->second;
  QTLaurent p = master_denominator(m);
  for (int part : rho) {
    auto q = divide_exact(p, QTLaurent::one() - QTLaurent::t(2 * part));
    if (!q) throw std::runtime_error("internal error: master denominator not divisible");
    p = std::move(*q);
  }
  return cache.emplace(std::make_pair(m, rho), std::move(p)).first->second;
}

std::vector<GTerm> g_terms(long l, long r, int n, const Partition& lam) {
  if (l <= 0 || r < 1 || std::gcd(l, r) != 1)
    throw std::domain_error("g_poly: k = l/r must be positive and in lowest terms");
  if (part_size(lam) != n) throw std::domain_error("g_poly: lam must be a partition of n");
  int m = static_cast<int>(r) * n;
  Rat k(l, r);
  std::vector<GTerm> out;
  for (auto& mu : r_core_zero_partitions(m, static_cast<int>(r))) {
    Rat c;
    int sign = 1;
    if (r == 1) {
      c = (mu == normalized(lam)) ? 1 : 0;
    } else {
      CoreQuotient cq = r_core_quotient_sign(mu, static_cast<int>(r));
      sign = cq.sign;
      c = lr_coeff(cq.quo, lam);
    }
    if (c == 0) continue;
    Rat kp = kappa(k, mu);
    Rat kp2 = 2 * kp;
    kp2.canonicalize();
    if (kp2.get_den() != 1)
      throw std::runtime_error("internal error: kappa not a half-integer on an r-core-zero mu");
    out.push_back({mu, sign * c, static_cast<int>(kp2.get_num().get_si())});
  }
  return out;
}

// numerators over master_denominator(m) for every nu |- m at once
std::map<Partition, QTLaurent> g_numerators(long l, long r, int n, const Partition& lam) {
  int m = static_cast<int>(r) * n;
  auto terms = g_terms(l, r, n, lam);
  std::map<Partition, QTLaurent> nums;
  for (auto& rho : partitions_of(m)) {
    QTLaurent a;
    for (auto& gt : terms) {
      long long chi = sn_character(gt.mu, rho);
      if (chi != 0) a.add_term({0, gt.kappa2}, gt.coeff * Rat(static_cast<long>(chi)));
    }
    if (a.is_zero()) continue;
    QTLaurent ap = a * complement_poly(m, rho);
    Rat zr(z_order(rho));
    for (auto& nu : partitions_of(m)) {
      long long chi = sn_character(nu, rho);
      if (chi == 0) continue;
      auto [it, fresh] = nums.emplace(nu, QTLaurent());
      it->second += Rat(static_cast<long>(chi)) / zr * ap;
    }
  }
  return nums;
}

}  // namespace

QTRational g_poly(long l, long r, int n, const Partition& lam, const Partition& nu) {
  int m = static_cast<int>(r) * n;
  if (part_size(nu) != m) throw std::domain_error("g_poly: nu must be a partition of r*n");
  auto terms = g_terms(l, r, n, lam);
  QTLaurent num;
  for (auto& rho : partitions_of(m)) {
    long long chinu = sn_character(normalized(nu), rho);
    if (chinu == 0) continue;
    QTLaurent a;
    for (auto& gt : terms) {
      long long chi = sn_character(gt.mu, rho);
      if (chi != 0) a.add_term({0, gt.kappa2}, gt.coeff * Rat(static_cast<long>(chi)));
    }
    if (a.is_zero()) continue;
    num += Rat(static_cast<long>(chinu)) / Rat(z_order(rho)) * (a * complement_poly(m, rho));
  }
  return QTRational(num, master_denominator(m));
}

std::map<Partition, QTRational> simple_module_character(long l, long r, int n,
                                                        const Partition& lam) {
  int m = static_cast<int>(r) * n;
  QTLaurent d = master_denominator(m);
  std::map<Partition, QTRational> out;
  for (auto& [nu, num] : g_numerators(l, r, n, lam)) out.emplace(nu, QTRational(num, d));
  return out;
}

QTRational curly_g(const Partition& lam, const Weight& nu, int n) {
  int s = weight_sum(nu);
  if (s <= 0 || s % n != 0) throw std::domain_error("curly_g: |nu| must be a positive multiple of n");
  Partition nup(nu.begin(), nu.end());
  if (!is_partition(nup)) throw std::domain_error("curly_g: nu must have nonnegative parts");
  return g_poly(1, s / n, n, lam, nup);
}

std::pair<bool, bool> thm_identities_check(int n, const Partition& mu, const Partition& lam) {
  SchurExpansion phimu = phi_schur(normalized(mu));
  Weight nu = dagger(star(normalized(mu), n));
  bool id1, id2;
  {
    QTLaurent blam = b_poly(lam).subst(QTLaurent::q(), QTLaurent::q(-2));  // B_lam(q, 1/q)
    QTRational lhs = plethysm_alphabet(phimu, blam);
    QTRational g = curly_g(lam, nu, n).subst(QTLaurent::q(), QTLaurent::q(-2));  // t -> 1/q
    QTLaurent hinv = hook_poly(lam, 'q').subst(QTLaurent::q(-2), QTLaurent::t());  // H_lam(1/q)
    // q^{n/2 + n(lam)}: doubled exponent n + 2 n(lam)
    QTRational rhs = QTRational(QTLaurent::monomial(1, n + 2 * static_cast<int>(n_stat(lam)), 0)) *
                     QTRational(hinv) * g;
    id1 = cross_equal(lhs, rhs);
  }
  {
    QTLaurent lhs = lusztig_t_analog(star(normalized(mu), n), Weight(n, 0), n);
    QTLaurent alphabet;  // (1 - t^n)/(1 - t) = 1 + t + ... + t^{n-1}
    for (int i = 0; i < n; ++i) alphabet += QTLaurent::t(2 * i);
    QTRational rhs = plethysm_alphabet(phimu, alphabet);
    id2 = cross_equal(QTRational(lhs), rhs);
  }
  return {id1, id2};
}

}  // namespace qtforge
