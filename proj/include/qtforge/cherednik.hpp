// Graded characters of the simple modules L(r lam) for the type-A rational
// Cherednik algebra: the kappa statistic, the G-polynomials, and the two
// identities tying them to Phi_mu and the Lusztig t-analogue.
#pragma once

#include "qtforge/macdonald.hpp"

namespace qtforge {

// kappa(k, lam) = m/2 + k (n(lam) - n(lam')), m = |lam|
Rat kappa(const Rat& k, const Partition& lam);

// G_{k,n}(lam, nu; t) for k = l/r in lowest terms, lam |- n, nu |- rn
QTRational g_poly(long l, long r, int n, const Partition& lam, const Partition& nu);

// graded S_m-character of L(r lam): nu |- rn -> G_{k,n}(lam, nu; t)
std::map<Partition, QTRational> simple_module_character(long l, long r, int n,
                                                        const Partition& lam);

// curly-G(lam, nu; t) = G_{n/|nu|, n}(lam, nu; t), nu dominant with nu_n = 1
// and |nu| divisible by n
QTRational curly_g(const Partition& lam, const Weight& nu, int n);

// Theorem identities: (1) Phi_mu[B_lam(q, 1/q)] = q^{n/2 + n(lam)} H_lam(1/q)
// curly-G(lam, (mu*)^dagger; 1/q); (2) K_{mu*,0}(t) = Phi_mu[(1-t^n)/(1-t)]
std::pair<bool, bool> thm_identities_check(int n, const Partition& mu, const Partition& lam);

}  // namespace qtforge
