// Symmetric functions in the Schur basis over Q(q,t): S_n character tables,
// Littlewood-Richardson products, power-sum conversion, plethysm at alphabets.
#pragma once

#include <map>

#include "qtforge/partitions.hpp"
#include "qtforge/weights.hpp"

namespace qtforge {

// irreducible S_n character value chi^lam(rho), by Murnaghan-Nakayama (memoized)
long long sn_character(const Partition& lam, const Partition& rho);
mpz_class z_order(const Partition& rho);  // z_rho = prod i^{m_i} m_i!

struct SchurExpansion {
  std::map<Partition, QTRational> coeffs;  // no zero coefficients stored

  void add(const Partition& lam, const QTRational& c);
  static SchurExpansion single(const Partition& lam, const QTRational& c = QTRational(Rat(1)));
  bool homogeneous(int* degree = nullptr) const;
  SchurExpansion operator+(const SchurExpansion& o) const;
  SchurExpansion operator*(const QTRational& c) const;
};

using PowerExpansion = std::map<Partition, QTRational>;  // keyed by cycle type

PowerExpansion to_power_sums(const SchurExpansion& f);
SchurExpansion from_power_sums(const PowerExpansion& p, int degree);

SchurExpansion lr_multiply(const SchurExpansion& f, const SchurExpansion& g);
long lr_coeff(const MultiPartition& multi, const Partition& lam);

// f evaluated at the alphabet E: p_k -> pleth_power(k, E)
QTRational plethysm_alphabet(const SchurExpansion& f, const QTLaurent& E);

enum class PlethMode { DivOneMinusT, TimesOneMinusT, TimesOneMinusQ };
// p_k -> p_k/(1-t^k), p_k (1-t^k), p_k (1-q^k)
SchurExpansion pleth_scale(const SchurExpansion& f, PlethMode mode);

QTRational inner_product(const SchurExpansion& f, const SchurExpansion& g);

// <s_mu[Z/(1-v)], s_nu> as an exact rational function in the variable v ('q' or 't')
QTRational delta_bracket(const Partition& mu, const Partition& nu, char var = 't');

// Phi_mu = sum over phi(mu) of the corresponding Schur functions
SchurExpansion phi_schur(const Partition& mu);

// monomial expansion of s_mu(z_1..z_n) for a weakly decreasing integer weight mu
std::map<Weight, long> schur_z_expansion(const Weight& mu);

}  // namespace qtforge
