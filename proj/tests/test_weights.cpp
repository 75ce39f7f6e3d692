#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtforge/weights.hpp"

using namespace qtforge;

namespace {
// horizontal strip test: mu/nu with no two removed cells in one column
bool horizontal_strip_below(const Partition& mu, const Partition& nu) {
  for (size_t i = 0; i < nu.size(); ++i) {
    int m = i < mu.size() ? mu[i] : 0;
    int next = i + 1 < mu.size() ? mu[i + 1] : 0;
    if (nu[i] > m || nu[i] < next) return false;
  }
  for (size_t i = nu.size(); i < mu.size(); ++i)
    if (i + 1 < mu.size() && mu[i + 1] > 0) return false;
  return true;
}
}  // namespace

TEST_CASE("root data") {
  RootDataA rd(3);
  CHECK(rd.pos_roots.size() == 3);
  CHECK(rd.delta == Weight{2, 1, 0});
  for (auto& a : rd.pos_roots) CHECK(weight_sum(a) == 0);
  CHECK(std::count(rd.pos_roots.begin(), rd.pos_roots.end(), Weight{1, -1, 0}) == 1);
  CHECK(std::count(rd.pos_roots.begin(), rd.pos_roots.end(), Weight{1, 0, -1}) == 1);
}

TEST_CASE("dominant representatives and sorting signs") {
  auto [w, s] = sort_strict({1, 3, 2});
  CHECK(w == Weight{3, 2, 1});
  CHECK(s == 1);  // cyclic permutation, even
  CHECK(sort_strict({2, 3, 2}).second == 0);
  // rho-shifted action: v=(0,1) has v+rho=(1,1), singular
  CHECK(dominant_rep({0, 1}).second == 0);
  auto [d, sg] = dominant_rep({0, 2});  // v+rho=(1,2) -> (2,1) by one swap -> (1,1)...
  CHECK(d == Weight{1, 1});
  CHECK(sg == -1);
  CHECK(is_dominant(Weight{3, 1, 1}));
  CHECK(!is_dominant(Weight{1, 2}));
}

TEST_CASE("psi sums over horizontal strips below") {
  for (auto lam : {Partition{3, 1}, Partition{2, 2}, Partition{4, 2, 1}}) {
    auto combo = psi(lam);
    // every key is a partition mu <= lam with lam/mu a horizontal strip, coeff 1
    int count = 0;
    for (auto& [mu, c] : combo) {
      CHECK(c == 1);
      CHECK(horizontal_strip_below(lam, normalized(Partition(mu.begin(), mu.end()))));
      ++count;
    }
    // direct count of horizontal strips below lam
    int expect = 1;
    {
      // rows interleave: lam_{i+1} <= mu_i <= lam_i, independent choices
      expect = 1;
      for (size_t i = 0; i < lam.size(); ++i) {
        int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
        expect *= lam[i] - lo + 1;
      }
    }
    CHECK(count == expect);
  }
}

TEST_CASE("phi is the inverse of psi on downsets") {
  for (auto& lam : std::vector<Partition>{{3, 2}, {2, 2, 1}, {4, 1}}) {
    // (phi o psi)(lam) = delta_lam: expand psi(lam), apply phi to each key
    ZWeightCombo total;
    for (auto& [mu, c] : psi(lam))
      for (auto& [nu, d] : phi(normalized(Partition(mu.begin(), mu.end()))))
        total[nu] += c * d;
    std::erase_if(total, [](auto& kv) { return kv.second == 0; });
    REQUIRE(total.size() == 1);
    CHECK(total.begin()->first == normalized(lam));
    CHECK(total.begin()->second == 1);
    // and the other composition
    ZWeightCombo total2;
    for (auto& [mu, c] : phi(lam))
      for (auto& [nu, d] : psi(normalized(Partition(mu.begin(), mu.end()))))
        total2[nu] += c * d;
    std::erase_if(total2, [](auto& kv) { return kv.second == 0; });
    REQUIRE(total2.size() == 1);
    CHECK(total2.begin()->first == normalized(lam));
  }
}

TEST_CASE("star and dagger") {
  CHECK(star({2, 1}, 3) == Weight{3, -1, -2});
  CHECK(star({}, 2) == Weight{0, 0});
  CHECK(star({1}, 2) == Weight{1, -1});
  CHECK(dagger(Weight{3, -1, -2}) == Weight{6, 2, 1});
  CHECK(dagger(Weight{1, -1}) == Weight{3, 1});
  // dagger output is a strict... at least a partition with positive last entry
  auto d = dagger(star({2, 2, 1}, 4));
  CHECK(is_dominant(d));
  CHECK(d.back() == 1);
}

TEST_CASE("inverse Pieri set: dominant removals, no two per column") {
  Weight mu{2, 1};
  auto e1 = inverse_pieri_set(mu, 1);
  std::set<Weight> got(e1.begin(), e1.end());
  CHECK(got == std::set<Weight>{{1, 1}, {2, 0}});
  // removing |mu| squares: interleaving mu_1 >= nu_1 >= mu_2 >= nu_2 forces
  auto e3 = inverse_pieri_set(mu, 3);
  std::set<Weight> got3(e3.begin(), e3.end());
  CHECK(got3 == std::set<Weight>{{1, -1}, {2, -2}});
  // every member differs from mu by a horizontal strip of size m
  for (int m = 1; m <= 3; ++m)
    for (auto& nu : inverse_pieri_set(mu, m)) {
      CHECK(is_dominant(nu));
      CHECK(weight_sum(mu) - weight_sum(nu) == m);
    }
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim(Weight{1, 0}) == 2);
  CHECK(weyl_dim(Weight{1, 0, 0}) == 3);
  CHECK(weyl_dim(Weight{1, 1, 0}) == 3);
  CHECK(weyl_dim(Weight{2, 1, 0}) == 8);   // adjoint of sl3 (+ det twist)
  CHECK(weyl_dim(Weight{0, 0, 0, 0}) == 1);
  CHECK(weyl_dim(Weight{2, 0}) == 3);
  // negative entries via a det twist leave the dimension invariant
  CHECK(weyl_dim(Weight{1, -1}) == weyl_dim(Weight{2, 0}));
}

TEST_CASE("dimension additivity across an inverse Pieri set") {
  // dim V_mu(GL_n) restricted... oracle frozen from the Pieri rule:
  // s_mu = sum_{nu in E(mu,m)} s_nu * h_m picks out dim via principal gl_{n} count
  // Direct check used during development: mu=(2,1,0,0), m = 3
  Weight mu{2, 1, 0, 0};
  auto es = inverse_pieri_set(mu, 3);
  mpz_class total = 0;
  for (auto& nu : es) total += weyl_dim(nu);
  mpz_class whole = weyl_dim(mu);
  CHECK(total >= whole);  // E(mu,|mu|) contains all strips, including mu - full rows
}
