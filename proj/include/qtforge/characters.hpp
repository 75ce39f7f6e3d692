// Bigraded character formulas: the two global-sections series, the principal
// nilpotent pair fiber character, the Garsia-Haiman recursion, polygraph and
// R^nil characters, and the b-coefficients.
#pragma once

#include "qtforge/macdonald.hpp"

namespace qtforge {

// bivariate Kostant partition P(lam; q, t): exact polynomial
QTLaurent biv_kostant(const Weight& lam, int n);

// truncated character series over z-monomials
struct TCharacterSeries {
  int n = 0;
  int bound = 0;                         // certified (q,t)-degree
  std::map<Weight, QTSeries> coeffs;     // z-exponent vector -> series
};

TCharacterSeries chi_R_thm(int n, int D);
TCharacterSeries chi_R_atiyah_bott(int n, int D);
// compare on the window of z-monomials with all |exponents| <= D
bool tcharacter_equal_window(const TCharacterSeries& a, const TCharacterSeries& b);

QTLaurent pnp_character(const Partition& mu);
QTLaurent garsia_haiman_character(const Partition& mu);
// prefactor * Gamma_sigma for one standard tableau, in factored form
QTFactored pnp_tableau_term(const Partition& mu, const StandardTableau& syt);
// prod_k Pi_{sigma(k)} for one standard tableau
QTFactored gh_tableau_term(const Partition& mu, const StandardTableau& syt);
// per-tableau equality of the two products, for every tableau of mu
bool gh_equivalence_per_tableau(const Partition& mu);

// chi_lam-isotypic coefficient of the polygraph character R(n, mu)
QTRational polygraph_isotypic(int n, const Partition& mu, const Partition& lam);
// b_{mu*,lam}(q,t)
QTRational b_coeff(const Partition& mu, const Partition& lam);
// chi((R^nil_lam)_{mu*}) and its closed t=q^{-1} form
QTRational rnil_isotypic(const Partition& mu, const Partition& lam);
QTRational rnil_specialized(const Partition& mu, const Partition& lam);

// the three Garsia-Haiman lemmas as exact identities for the shape nu
// (GH2/GH3 quantified over every removable box)
struct GHLemmaResult {
  bool gh1, gh2, gh3;
};
GHLemmaResult gh_lemma_checks(const Partition& nu);

}  // namespace qtforge
