#include "qtforge/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qtforge {

namespace {

std::map<Partition, SchurExpansion> hmu_cache;
std::mutex hmu_mutex;

// per-degree cache of pleth_scale(s_lam, Z(1-q)) and Z(1-t)
struct ScaledBasis {
  std::vector<Partition> lams;
  std::vector<SchurExpansion> times_q, times_t;
};
std::map<int, ScaledBasis> scaled_cache;
std::mutex scaled_mutex;

const ScaledBasis& scaled_basis(int n) {
  std::lock_guard lk(scaled_mutex);
  auto it = scaled_cache.find(n);
  if (it != scaled_cache.end()) return it->second;
  ScaledBasis b;
  b.lams = partitions_of(n);
  for (auto& lam : b.lams) {
    b.times_q.push_back(pleth_scale(SchurExpansion::single(lam), PlethMode::TimesOneMinusQ));
    b.times_t.push_back(pleth_scale(SchurExpansion::single(lam), PlethMode::TimesOneMinusT));
  }
  return scaled_cache[n] = std::move(b);
}

SchurExpansion solve_modified_macdonald(const Partition& mu) {
  int n = part_size(mu);
  const ScaledBasis& basis = scaled_basis(n);
  int p = static_cast<int>(basis.lams.size());
  Partition muc = conjugate(mu);
  // rows of the homogeneous system plus the normalization row
  std::vector<std::vector<QTRational>> rows;
  auto coeff_of = [](const SchurExpansion& f, const Partition& kap) {
    auto it = f.coeffs.find(kap);
    return it == f.coeffs.end() ? QTRational(Rat(0)) : it->second;
  };
  for (auto& kap : basis.lams) {
    if (!dominance_le(mu, kap)) {  // kappa not >= mu: coefficient must vanish
      std::vector<QTRational> row(p + 1, QTRational(Rat(0)));
      for (int j = 0; j < p; ++j) row[j] = coeff_of(basis.times_q[j], kap);
      rows.push_back(std::move(row));
    }
    if (!dominance_le(muc, kap)) {
      std::vector<QTRational> row(p + 1, QTRational(Rat(0)));
      for (int j = 0; j < p; ++j) row[j] = coeff_of(basis.times_t[j], kap);
      rows.push_back(std::move(row));
    }
  }
  {
    std::vector<QTRational> row(p + 1, QTRational(Rat(0)));
    int jn = static_cast<int>(std::find(basis.lams.begin(), basis.lams.end(), Partition{n}) -
                              basis.lams.begin());
    row[jn] = QTRational(Rat(1));
    row[p] = QTRational(Rat(1));
    rows.push_back(std::move(row));
  }
  // Gaussian elimination
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_row(p, -1);
  int rank = 0;
  for (int col = 0; col < p; ++col) {
    int pr = -1;
    for (int i = 0; i < nrows; ++i) {
      bool used = false;
      for (int c = 0; c < col; ++c)
        if (pivot_row[c] == i) used = true;
      if (!used && !rows[i][col].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    pivot_row[col] = pr;
    rank++;
    QTRational inv = QTRational(Rat(1)) / rows[pr][col];
    for (int c = col; c <= p; ++c) rows[pr][c] = rows[pr][c] * inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == pr || rows[i][col].is_zero()) continue;
      QTRational f = rows[i][col];
      for (int c = col; c <= p; ++c) rows[i][c] = rows[i][c] - f * rows[pr][c];
    }
  }
  if (rank != p)
    throw std::runtime_error("internal error: Macdonald axiom system is singular");
  SchurExpansion out;
  for (int col = 0; col < p; ++col) out.add(basis.lams[col], rows[pivot_row[col]][p]);
  return out;
}

}  // namespace

const SchurExpansion& modified_macdonald(const Partition& mu) {
  Partition m = normalized(mu);
  {
    std::lock_guard lk(hmu_mutex);
    auto it = hmu_cache.find(m);
    if (it != hmu_cache.end()) return it->second;
  }
  SchurExpansion f = solve_modified_macdonald(m);
  std::lock_guard lk(hmu_mutex);
  return hmu_cache.emplace(m, std::move(f)).first->second;
}

QTLaurent kostka_modified(const Partition& lam, const Partition& mu) {
  auto& f = modified_macdonald(mu);
  auto it = f.coeffs.find(normalized(lam));
  if (it == f.coeffs.end()) return QTLaurent();
  return it->second.as_laurent();
}

QTLaurent kostka_integral(const Partition& lam, const Partition& mu) {
  QTLaurent kt = kostka_modified(lam, mu);
  // t -> t^{-1}, then multiply by t^{n(mu)}
  return kt.subst(QTLaurent::q(), QTLaurent::t(-2)).shifted(0, 2 * static_cast<int>(n_stat(mu)));
}

QTLaurent kostka_integral_tt(const Partition& lam, const Partition& mu) {
  return kostka_integral(lam, mu).subst(QTLaurent::t(), QTLaurent::t());
}

QTLaurent k_coeff(const Partition& lam, const Partition& mu) {
  SchurExpansion f = pleth_scale(modified_macdonald(mu), PlethMode::TimesOneMinusQ);
  auto it = f.coeffs.find(normalized(lam));
  if (it == f.coeffs.end()) return QTLaurent();
  return it->second.as_laurent();
}

std::map<Weight, QTLaurent> degen_macdonald(const Weight& lam, int n, bool tilde) {
  if (n > 7) throw std::domain_error("degen_macdonald: rank over cap");
  if (static_cast<int>(lam.size()) != n) throw std::domain_error("weight length != n");
  RootDataA root(n);
  int nr = static_cast<int>(root.pos_roots.size());
  std::map<Weight, QTLaurent> out;
  for (unsigned mask = 0; mask < (1u << nr); ++mask) {
    Weight v(n);
    int bits = 0;
    for (int i = 0; i < n; ++i) v[i] = lam[i] + root.delta[i];
    for (int r = 0; r < nr; ++r)
      if (mask & (1u << r)) {
        bits++;
        for (int i = 0; i < n; ++i) v[i] += (tilde ? 1 : -1) * root.pos_roots[r][i];
      }
    auto [s, sign] = sort_strict(v);
    if (sign == 0) continue;
    Weight muw(n);
    for (int i = 0; i < n; ++i) muw[i] = s[i] - root.delta[i];
    Rat c = Rat(sign) * (bits % 2 == 0 ? 1 : -1);
    QTLaurent& acc = out[muw];
    acc.add_term({0, 2 * bits}, c);
    if (acc.is_zero()) out.erase(muw);
  }
  return out;
}

namespace {

std::map<std::tuple<int, int, Weight, bool>, QTLaurent> kostant_memo;
std::mutex kostant_mutex;

// v given in simple-root coordinates (length n-1); roots are the intervals
// [i,j] with 0 <= i <= j <= n-2, enumerated by idx
QTLaurent kostant_rec(int n, int idx, const std::vector<int>& m, bool bivariate) {
  bool zero = std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
  int total = n >= 2 ? (n - 1) * n / 2 : 0;  // number of positive roots
  if (idx == total) return zero ? QTLaurent::one() : QTLaurent();
  if (zero) return QTLaurent::one();
  {
    std::lock_guard lk(kostant_mutex);
    auto it = kostant_memo.find({n, idx, m, bivariate});
    if (it != kostant_memo.end()) return it->second;
  }
  // decode idx -> interval [i,j]
  int i = 0, j = 0, k = idx;
  for (i = 0; i < n - 1; ++i) {
    if (k < n - 1 - i) {
      j = i + k;
      break;
    }
    k -= n - 1 - i;
  }
  int kmax = m[i];
  for (int s = i; s <= j; ++s) kmax = std::min(kmax, m[s]);
  QTLaurent total_poly;
  std::vector<int> next = m;
  for (int mult = 0; mult <= kmax; ++mult) {
    QTLaurent factor;
    if (bivariate) {
      for (int a = 0; a <= mult; ++a) factor.add_term({2 * a, 2 * (mult - a)}, 1);
    } else {
      factor = QTLaurent::t(2 * mult);
    }
    total_poly += factor * kostant_rec(n, idx + 1, next, bivariate);
    for (int s = i; s <= j; ++s) next[s]--;
  }
  std::lock_guard lk(kostant_mutex);
  kostant_memo[{n, idx, m, bivariate}] = total_poly;
  return total_poly;
}

}  // namespace

QTLaurent kostant_colored(const Weight& v, int n, bool bivariate) {
  if (weight_sum(v) != 0) return QTLaurent();
  std::vector<int> m(n - 1);
  int acc = 0;
  for (int i = 0; i < n - 1; ++i) {
    acc += v[i];
    if (acc < 0) return QTLaurent();
    m[i] = acc;
  }
  if (n == 1) return QTLaurent::one();
  return kostant_rec(n, 0, m, bivariate);
}

QTLaurent kostant_t(const Weight& v, int n) { return kostant_colored(v, n, false); }

QTLaurent lusztig_t_analog(const Weight& lam, const Weight& mu, int n) {
  if (!is_dominant(lam) || !is_dominant(mu))
    throw std::domain_error("lusztig_t_analog: non-dominant weight");
  RootDataA root(n);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  QTLaurent total;
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[i] > idx[j]) sign = -sign;
    Weight v(n);
    for (int i = 0; i < n; ++i)
      v[i] = (lam[idx[i]] + root.delta[idx[i]]) - (mu[i] + root.delta[i]);
    QTLaurent p = kostant_colored(v, n, false);
    total += Rat(sign) * p;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace qtforge
