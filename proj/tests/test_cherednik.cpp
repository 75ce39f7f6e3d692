#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtforge/cherednik.hpp"

using namespace qtforge;

namespace {
QTLaurent Q(int e2 = 2) { return QTLaurent::q(e2); }
QTLaurent T(int e2 = 2) { return QTLaurent::t(e2); }
QTLaurent tpow_half(long k2) { return QTLaurent::monomial(1, 0, (int)k2); }
}  // namespace

TEST_CASE("kappa statistic") {
  CHECK(kappa(Rat(1), {2}) == Rat(0));          // 1 + 1*(0 - 1)
  CHECK(kappa(Rat(1), {1, 1}) == Rat(2));       // 1 + 1*(1 - 0)
  CHECK(kappa(Rat(1, 2), {2}) == Rat(1, 2));    // 1 + (1/2)(-1)
  CHECK(kappa(Rat(1, 3), {3}) == Rat(1, 2));    // 3/2 + (1/3)(0 - 3)
  CHECK(kappa(Rat(2), {2, 1}) == Rat(3, 2));    // 3/2 + 2*(1 - 1)
  // kappa(k, lam') = |lam| - kappa(k, lam) + 2(kappa-type antisymmetry): check
  // the defining antisymmetry n(lam) - n(lam') directly
  for (auto& lam : partitions_of(4))
    CHECK(kappa(Rat(1), lam) + kappa(Rat(1), conjugate(lam)) == Rat(part_size(lam)));
}

TEST_CASE("integral parameter reduces to a single delta bracket term") {
  // r = 1: G_{k,n}(lam, nu) = t^{kappa(k,lam)} <s_lam[Z/(1-t)], s_nu>
  for (long l : {1L, 2L, 3L})
    for (auto& lam : partitions_of(3))
      for (auto& nu : partitions_of(3)) {
        auto g = g_poly(l, 1, 3, lam, nu);
        Rat kap = kappa(Rat(l), lam);
        Rat two_kap = 2 * kap;
        REQUIRE(two_kap.get_den() == 1);
        auto expect = QTRational(tpow_half(two_kap.get_num().get_si())) *
                      delta_bracket(lam, nu, 't');
        CHECK(cross_equal(g, expect));
      }
}

TEST_CASE("g_poly validates its arguments") {
  CHECK_THROWS(g_poly(2, 4, 2, {2}, {2, 2}));       // gcd(l, r) != 1
  CHECK_THROWS(g_poly(1, 2, 2, {2}, {3}));          // |nu| != r n
  CHECK_THROWS(g_poly(1, 2, 2, {1, 1, 1}, {4}));    // |lam| != n
}

TEST_CASE("simple module character positivity for k = 1/2, n = 2") {
  // L(r lam) is a graded module: every isotypic series expands with
  // nonnegative integer coefficients, and the trivial isotypic starts at t^kappa
  for (auto& lam : partitions_of(2)) {
    auto ch = simple_module_character(1, 2, 2, lam);
    bool sawNonzero = false;
    for (auto& [nu, g] : ch) {
      if (g.is_zero()) continue;
      sawNonzero = true;
      auto s = series_expand(g, 12);
      for (auto& [e, c] : s.terms.terms) {
        CHECK(e.q2 == 0);
        CHECK(c > 0);
        CHECK(c.get_den() == 1);
      }
    }
    CHECK(sawNonzero);
  }
}

TEST_CASE("sign isotypic component via the principal specialization") {
  // <s_lam[Z/(1-t)], s_{1^n}> = t^{n(lam')} / prod_x (1 - t^{h(x)}), so
  // G_{l,n}(lam, (1^n)) = t^{kappa(l,lam) + n(lam')} / H_lam(t)
  for (int n = 2; n <= 5; ++n)
    for (auto& lam : partitions_of(n))
      for (long l : {1L, 2L}) {
        auto g = g_poly(l, 1, n, lam, Partition(n, 1));
        Rat two_kap = 2 * kappa(Rat(l), lam);
        REQUIRE(two_kap.get_den() == 1);
        int shift = (int)two_kap.get_num().get_si() + 2 * (int)n_stat(conjugate(lam));
        QTRational expect(tpow_half(shift), hook_poly(lam, 't'), true);
        CHECK(cross_equal(g, expect));
      }
}

TEST_CASE("curly G at the trivial shape matches the Hesselink route by hand, n = 2") {
  // curly_g(lam, nu) needs |nu| a positive multiple of n and nu_n >= 1 ...
  // smallest case: n = 2, nu = (1,1): curly_g((1,1), (1,1)) vs direct G_{1,1}
  auto direct = g_poly(1, 1, 2, {1, 1}, {1, 1});
  auto curly = curly_g({1, 1}, Weight{1, 1}, 2);
  CHECK(cross_equal(direct, curly));
  CHECK_THROWS(curly_g({1, 1}, Weight{1, 1, 1}, 2));  // |nu| not a multiple of n
}

TEST_CASE("theorem identities on small data") {
  // mu needs fewer than n parts for the star map
  for (int n : {2, 3})
    for (auto& lam : partitions_of(n))
      for (auto& mu : std::vector<Partition>{{}, {1}, {2}, {1, 1}}) {
        if ((int)mu.size() >= n) continue;
        auto [id1, id2] = thm_identities_check(n, mu, lam);
        CHECK(id1);
        CHECK(id2);
      }
}

TEST_CASE("denominator of G divides the master product") {
  for (auto& lam : partitions_of(3))
    for (auto& nu : partitions_of(6)) {
      auto g = g_poly(1, 2, 3, lam, nu);
      if (g.is_zero()) continue;
      // denominator is a product of cyclotomic-type binomials in t only
      CHECK(g.den.max_q2() == 0);
      CHECK(g.den.min_q2() == 0);
      QTLaurent master = QTLaurent::one();
      for (int i = 1; i <= 6; ++i)
        master *= (QTLaurent::one() - T(2 * i)).pow(6 / i);
      CHECK(divide_exact(master, g.den).has_value());
    }
}
