// GL_n integral weights, type-A root data, and the weight maps psi, phi, star,
// dagger, E(mu,m).
#pragma once

#include <map>
#include <vector>

#include "qtforge/partitions.hpp"

namespace qtforge {

using Weight = std::vector<int>;
using ZWeightCombo = std::map<Weight, long>;  // finite Z-linear combination

struct RootDataA {
  int n;
  std::vector<Weight> pos_roots;  // e_i - e_j, i < j, length n each
  Weight delta;                   // staircase (n-1, ..., 0); rho up to a central shift
  explicit RootDataA(int n);
};

// dominant representative under the rho-shifted action: sorts coordinates
// decreasingly; sign = parity of the sorting permutation, 0 if v + rho has a
// repeated coordinate
std::pair<Weight, int> dominant_rep(const Weight& v);
// plain sort with permutation sign; sign 0 on a repeated coordinate
std::pair<Weight, int> sort_strict(const Weight& v);

bool is_dominant(const Weight& v);
int weight_sum(const Weight& v);

// psi(lam) = sum of mu <= lam with lam/mu a horizontal strip (any size);
// phi = psi^{-1}, by inversion over the containment downset
ZWeightCombo psi(const Partition& lam);
ZWeightCombo phi(const Partition& lam);

// mu* = -w0(mu_1, ..., mu_{n-1}, -|mu|) for mu a partition with < n parts
Weight star(const Partition& mu, int n);
// mu† = mu + ((1 - mu_n)^n) for mu in Q+_n
Weight dagger(const Weight& mu);

// E(mu, m): dominant nu obtained from mu by removing m squares, no two per column
std::vector<Weight> inverse_pieri_set(const Weight& mu, int m);

// Weyl dimension of the GL_n irreducible with highest weight lam
mpz_class weyl_dim(const Weight& lam);

}  // namespace qtforge
