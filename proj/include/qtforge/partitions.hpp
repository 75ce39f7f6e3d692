// Partitions, Young diagrams (column,row coordinates, row 0 at the bottom),
// hook statistics, standard tableaux, and rim-hook combinatorics.
#pragma once

#include <utility>
#include <vector>

#include "qtforge/qt.hpp"

namespace qtforge {

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros
using MultiPartition = std::vector<Partition>;

bool is_partition(const Partition& mu);
Partition normalized(Partition mu);  // strip trailing zeros, validate
int part_size(const Partition& mu);  // |mu|
Partition conjugate(const Partition& mu);
long n_stat(const Partition& mu);  // n(mu) = sum (i-1) mu_i

// cells of Y_mu as (column, row)
std::vector<std::pair<int, int>> cells(const Partition& mu);
// arm, leg, hook of a cell (column c, row r); throws if outside the diagram
struct ALH {
  int arm, leg, hook;
};
ALH arm_leg_hook(const Partition& mu, int c, int r);

QTLaurent b_poly(const Partition& mu);                  // B_mu(q,t) = sum q^c t^r
QTLaurent hook_poly(const Partition& mu, char var);     // prod (1 - var^{h(x)})
// prod_{x in Y_mu} (1-q^{1+a}t^{-l})(1-q^{-a}t^{1+l}) in factored form
QTFactored hook_product_factored(const Partition& mu);

bool dominance_le(const Partition& lam, const Partition& mu);  // lam <= mu
bool contains(const Partition& lam, const Partition& mu);      // Y_mu subset Y_lam

std::vector<Partition> partitions_of(int n);
// partitions fitting inside the box with given row lengths (subdiagrams of lam)
std::vector<Partition> subdiagrams(const Partition& lam);

// a standard tableau as the growth chain: cell_of[k] = (column,row) of entry k+1
struct StandardTableau {
  Partition shape;
  std::vector<std::pair<int, int>> cell_of;
};
std::vector<StandardTableau> syt_enumerate(const Partition& mu);
long syt_count_hook_formula(const Partition& mu);

struct CoreQuotient {
  Partition core;
  MultiPartition quo;  // r components
  int sign;            // epsilon_r(mu)
};
// beta-number construction with m >= l(mu) slots (default: l(mu) slots)
CoreQuotient r_core_quotient_sign(const Partition& mu, int r, int m = -1);
// independent oracle: exhaustively remove r-rim-hooks; asserts path-independence
Partition rim_hook_core_oracle(const Partition& mu, int r);
// all single r-rim-hook removals: (resulting partition, rows spanned)
std::vector<std::pair<Partition, int>> rim_hook_removals(const Partition& mu, int r);
// partitions of m with empty r-core
std::vector<Partition> r_core_zero_partitions(int m, int r);

}  // namespace qtforge
