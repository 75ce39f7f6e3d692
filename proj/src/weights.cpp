#include "qtforge/weights.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qtforge {

RootDataA::RootDataA(int n_) : n(n_) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Weight a(n, 0);
      a[i] = 1;
      a[j] = -1;
      pos_roots.push_back(a);
    }
  delta.resize(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
}

std::pair<Weight, int> sort_strict(const Weight& v) {
  int n = static_cast<int>(v.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
  Weight s(n);
  for (int i = 0; i < n; ++i) s[i] = v[idx[i]];
  for (int i = 0; i + 1 < n; ++i)
    if (s[i] == s[i + 1]) return {s, 0};
  int sign = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (idx[i] > idx[j]) sign = -sign;
  return {s, sign};
}

std::pair<Weight, int> dominant_rep(const Weight& v) {
  int n = static_cast<int>(v.size());
  Weight shifted(n);
  for (int i = 0; i < n; ++i) shifted[i] = v[i] + (n - 1 - i);
  auto [s, sign] = sort_strict(shifted);
  Weight out(n);
  for (int i = 0; i < n; ++i) out[i] = s[i] - (n - 1 - i);
  return {out, sign};
}

bool is_dominant(const Weight& v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

int weight_sum(const Weight& v) { return std::accumulate(v.begin(), v.end(), 0); }

namespace {

// all mu <= lam with lam/mu a horizontal strip: lam_{i+1} <= mu_i <= lam_i
std::vector<Partition> horizontal_strip_downs(const Partition& lam) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == lam.size()) {
      out.push_back(normalized(cur));
      return;
    }
    int lo = i + 1 < lam.size() ? lam[i + 1] : 0;
    for (int p = lo; p <= lam[i]; ++p) {
      cur.push_back(p);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::map<Partition, ZWeightCombo> phi_memo;
std::mutex phi_mutex;

}  // namespace

ZWeightCombo psi(const Partition& lam) {
  ZWeightCombo out;
  for (auto& mu : horizontal_strip_downs(lam)) out[mu] += 1;
  return out;
}

ZWeightCombo phi(const Partition& lam) {
  {
    std::lock_guard lk(phi_mutex);
    auto it = phi_memo.find(lam);
    if (it != phi_memo.end()) return it->second;
  }
  // psi(phi) = id: phi(lam) = lam - sum_{mu strict down of lam} phi(mu)
  ZWeightCombo out;
  out[lam] = 1;
  for (auto& mu : horizontal_strip_downs(lam)) {
    if (mu == lam) continue;
    for (auto& [nu, c] : phi(mu)) {
      out[nu] -= c;
      if (out[nu] == 0) out.erase(nu);
    }
  }
  std::lock_guard lk(phi_mutex);
  phi_memo[lam] = out;
  return out;
}

Weight star(const Partition& mu, int n) {
  if (static_cast<int>(mu.size()) >= n) throw std::domain_error("star: need < n parts");
  Weight v(n, 0);
  for (size_t i = 0; i < mu.size(); ++i) v[i] = mu[i];
  v[n - 1] = -part_size(mu);
  Weight out(n);
  for (int i = 0; i < n; ++i) out[i] = -v[n - 1 - i];
  if (!is_dominant(out) || weight_sum(out) != 0)
    throw std::runtime_error("internal error: star left Q+_n");
  return out;
}

Weight dagger(const Weight& mu) {
  Weight out = mu;
  int shift = 1 - mu.back();
  for (auto& x : out) x += shift;
  return out;
}

std::vector<Weight> inverse_pieri_set(const Weight& mu, int m) {
  int n = static_cast<int>(mu.size());
  std::vector<Weight> out;
  Weight cur(n);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int hi = mu[i];                                        // nu_i <= mu_i
    int lo = i + 1 < n ? mu[i + 1] : mu[i] - rem;          // horizontal strip rule
    lo = std::max(lo, mu[i] - rem);
    if (i > 0) hi = std::min(hi, cur[i - 1]);              // dominance
    for (int v = hi; v >= lo; --v) {
      cur[i] = v;
      self(self, i + 1, rem - (mu[i] - v));
      cur[i] = 0;
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

mpz_class weyl_dim(const Weight& lam) {
  int n = static_cast<int>(lam.size());
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lam[i] - lam[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

}  // namespace qtforge
