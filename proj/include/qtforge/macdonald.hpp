// Transformed Macdonald polynomials, Kostka-Macdonald matrices, integral forms,
// degenerate Macdonald polynomials over GL_n, and the Lusztig t-analogue.
#pragma once

#include "qtforge/symfunc.hpp"

namespace qtforge {

// the transformed Macdonald polynomial H~_mu in the Schur basis, from the
// triangularity axioms (unique solution of a linear system; cached)
const SchurExpansion& modified_macdonald(const Partition& mu);

// K~_{lam,mu}(q,t), a polynomial
QTLaurent kostka_modified(const Partition& lam, const Partition& mu);
// K_{lam,mu}(q,t) = t^{n(mu)} K~_{lam,mu}(q, t^{-1})
QTLaurent kostka_integral(const Partition& lam, const Partition& mu);
// K_{lam,mu}(t,t)
QTLaurent kostka_integral_tt(const Partition& lam, const Partition& mu);

// k_{lam,mu}(q,t): Schur coefficients of H~_mu[(1-q)Z]
QTLaurent k_coeff(const Partition& lam, const Partition& mu);

// P_lam(t) (plain) or P~_lam(t) (tilde) over GL_n: dominant-weight expansion
// with coefficients that are Laurent polynomials in t
std::map<Weight, QTLaurent> degen_macdonald(const Weight& lam, int n, bool tilde);

// Lusztig t-analogue K_{lam,mu}(t) for dominant weights of equal coordinate sum
QTLaurent lusztig_t_analog(const Weight& lam, const Weight& mu, int n);
// t-deformed Kostant partition function P_t(v) (coefficient of t^k counts
// decompositions of v into k positive roots)
QTLaurent kostant_t(const Weight& v, int n);
// shared kernel: bivariate = true gives the (q,t)-colored count (each root
// multiplicity k contributes q^i t^j over i+j=k), false the t-count
QTLaurent kostant_colored(const Weight& v, int n, bool bivariate);

}  // namespace qtforge
