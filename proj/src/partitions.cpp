#include "qtforge/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qtforge {

bool is_partition(const Partition& mu) {
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 0) return false;
    if (i + 1 < mu.size() && mu[i] < mu[i + 1]) return false;
  }
  return true;
}

Partition normalized(Partition mu) {
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (!is_partition(mu)) throw std::domain_error("not a partition");
  return mu;
}

int part_size(const Partition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

Partition conjugate(const Partition& mu) {
  Partition c;
  if (mu.empty()) return c;
  c.resize(mu[0], 0);
  for (int p : mu)
    for (int i = 0; i < p; ++i) c[i]++;
  return c;
}

long n_stat(const Partition& mu) {
  long s = 0;
  for (size_t i = 0; i < mu.size(); ++i) s += static_cast<long>(i) * mu[i];
  return s;
}

std::vector<std::pair<int, int>> cells(const Partition& mu) {
  std::vector<std::pair<int, int>> out;
  for (size_t r = 0; r < mu.size(); ++r)
    for (int c = 0; c < mu[r]; ++c) out.emplace_back(c, static_cast<int>(r));
  return out;
}

ALH arm_leg_hook(const Partition& mu, int c, int r) {
  if (r < 0 || r >= static_cast<int>(mu.size()) || c < 0 || c >= mu[r])
    throw std::domain_error("cell outside the diagram");
  int arm = mu[r] - 1 - c;
  int leg = 0;
  for (int rr = r + 1; rr < static_cast<int>(mu.size()) && mu[rr] > c; ++rr) leg++;
  return {arm, leg, arm + leg + 1};
}

QTLaurent b_poly(const Partition& mu) {
  QTLaurent f;
  for (auto [c, r] : cells(mu)) f.add_term({2 * c, 2 * r}, 1);
  return f;
}

QTLaurent hook_poly(const Partition& mu, char var) {
  QTLaurent f = QTLaurent::one();
  for (auto [c, r] : cells(mu)) {
    int h = arm_leg_hook(mu, c, r).hook;
    f = f * (QTLaurent::one() -
             (var == 'q' ? QTLaurent::q(2 * h) : QTLaurent::t(2 * h)));
  }
  return f;
}

QTFactored hook_product_factored(const Partition& mu) {
  QTFactored f;
  for (auto [c, r] : cells(mu)) {
    auto [a, l, h] = arm_leg_hook(mu, c, r);
    f.mul_factor(1 + a, -l, 1);
    f.mul_factor(-a, 1 + l, 1);
  }
  return f;
}

bool dominance_le(const Partition& lam, const Partition& mu) {
  if (part_size(lam) != part_size(mu)) throw std::domain_error("dominance needs equal size");
  int sl = 0, sm = 0;
  for (size_t i = 0; i < std::max(lam.size(), mu.size()); ++i) {
    sl += i < lam.size() ? lam[i] : 0;
    sm += i < mu.size() ? mu[i] : 0;
    if (sl > sm) return false;
  }
  return true;
}

bool contains(const Partition& lam, const Partition& mu) {
  for (size_t i = 0; i < mu.size(); ++i)
    if (i >= lam.size() || mu[i] > lam[i]) return false;
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::vector<Partition> subdiagrams(const Partition& lam) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, size_t row, int maxp) -> void {
    out.push_back(normalized(cur));
    if (row >= lam.size()) return;
    for (int p = 1; p <= std::min(maxp, lam[row]); ++p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, lam.empty() ? 0 : lam[0]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// corners removable from mu, in increasing row order
std::vector<int> removable_rows(const Partition& mu) {
  std::vector<int> rows;
  for (size_t r = 0; r < mu.size(); ++r)
    if (r + 1 == mu.size() || mu[r] > mu[r + 1]) rows.push_back(static_cast<int>(r));
  return rows;
}

void syt_rec(Partition shape, std::vector<StandardTableau>& out,
             std::vector<std::pair<int, int>>& chain) {
  if (part_size(shape) == 0) {
    StandardTableau t;
    t.cell_of = chain;
    std::reverse(t.cell_of.begin(), t.cell_of.end());
    out.push_back(std::move(t));
    return;
  }
  for (int r : removable_rows(shape)) {
    chain.emplace_back(shape[r] - 1, r);
    Partition next = shape;
    next[r]--;
    syt_rec(normalized(next), out, chain);
    chain.pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> syt_enumerate(const Partition& mu) {
  std::vector<StandardTableau> out;
  std::vector<std::pair<int, int>> chain;
  syt_rec(normalized(mu), out, chain);
  for (auto& t : out) t.shape = mu;
  // deterministic order: lexicographic on the chain of cells
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) {
              return a.cell_of < b.cell_of;
            });
  if (static_cast<long>(out.size()) != syt_count_hook_formula(mu))
    throw std::runtime_error("internal error: SYT count mismatch");
  return out;
}

long syt_count_hook_formula(const Partition& mu) {
  // n! / prod hooks, computed exactly
  mpz_class num = 1;
  for (int i = 2; i <= part_size(mu); ++i) num *= i;
  for (auto [c, r] : cells(mu)) num /= arm_leg_hook(mu, c, r).hook;
  return num.get_si();
}

CoreQuotient r_core_quotient_sign(const Partition& mu, int r, int m) {
  if (m < 0) m = static_cast<int>(mu.size());
  if (m < static_cast<int>(mu.size())) throw std::domain_error("too few beta slots");
  if (m == 0) return {{}, MultiPartition(r), 1};
  // beta numbers b_i = mu_i + (m - i), strictly decreasing
  std::vector<int> b(m);
  for (int i = 0; i < m; ++i)
    b[i] = (i < static_cast<int>(mu.size()) ? mu[i] : 0) + (m - 1 - i);
  // core betas: within each residue class the values pushed down to the bottom
  std::vector<std::vector<int>> cls(r), ccls(r);
  for (int v : b) cls[v % r].push_back(v);  // descending within class
  std::vector<int> c;
  for (int j = 0; j < r; ++j) {
    int k = static_cast<int>(cls[j].size());
    for (int p = 0; p < k; ++p) ccls[j].push_back(j + (k - 1 - p) * r);  // descending
    c.insert(c.end(), ccls[j].begin(), ccls[j].end());
  }
  std::sort(c.rbegin(), c.rend());
  Partition core(m);
  for (int i = 0; i < m; ++i) core[i] = c[i] - (m - 1 - i);
  core = normalized(core);
  // pairing: p-th largest beta in a class pairs with the p-th largest core beta
  // of the class; the permutation's parity is the r-sign
  std::map<int, int> cpos;  // core beta value -> position in descending c
  for (int i = 0; i < m; ++i) cpos[c[i]] = i;
  std::vector<int> perm(m);
  std::vector<int> used(r, 0);
  for (int i = 0; i < m; ++i) {
    int j = b[i] % r;
    perm[i] = cpos.at(ccls[j][used[j]]);
    used[j]++;
  }
  int sign = 1;
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k)
      if (perm[i] > perm[k]) sign = -sign;
  // quotient: component j collects the class with residue (j - m) mod r
  MultiPartition quo(r);
  for (int j = 0; j < r; ++j) {
    int res = ((j - m) % r + r) % r;
    Partition part;
    int k = static_cast<int>(cls[res].size());
    for (int p = 0; p < k; ++p) part.push_back((cls[res][p] - ccls[res][p]) / r);
    quo[j] = normalized(part);
  }
  return {core, quo, sign};
}

std::vector<std::pair<Partition, int>> rim_hook_removals(const Partition& mu, int r) {
  std::vector<std::pair<Partition, int>> out;
  int m = static_cast<int>(mu.size()) + r;  // enough slots
  std::vector<int> b(m);
  for (int i = 0; i < m; ++i)
    b[i] = (i < static_cast<int>(mu.size()) ? mu[i] : 0) + (m - 1 - i);
  std::set<int> bs(b.begin(), b.end());
  for (int i = 0; i < m; ++i) {
    int v = b[i] - r;
    if (v < 0 || bs.count(v)) continue;
    int between = 0;
    for (int w : b)
      if (w > v && w < b[i]) between++;
    std::vector<int> nb = b;
    nb[i] = v;
    std::sort(nb.rbegin(), nb.rend());
    Partition nu(m);
    for (int j = 0; j < m; ++j) nu[j] = nb[j] - (m - 1 - j);
    out.emplace_back(normalized(nu), between + 1);  // rows spanned = between + 1
  }
  return out;
}

namespace {

std::map<std::pair<Partition, int>, Partition> core_memo;
std::mutex core_mutex;

Partition core_rec(const Partition& mu, int r) {
  {
    std::lock_guard lk(core_mutex);
    auto it = core_memo.find({mu, r});
    if (it != core_memo.end()) return it->second;
  }
  auto rem = rim_hook_removals(mu, r);
  Partition result;
  if (rem.empty()) {
    result = mu;
  } else {
    bool first = true;
    for (auto& [nu, rows] : rem) {
      Partition c = core_rec(nu, r);
      if (first) {
        result = c;
        first = false;
      } else if (c != result) {
        throw std::runtime_error("internal error: r-core is path-dependent");
      }
    }
  }
  std::lock_guard lk(core_mutex);
  core_memo[{mu, r}] = result;
  return result;
}

}  // namespace

Partition rim_hook_core_oracle(const Partition& mu, int r) { return core_rec(mu, r); }

std::vector<Partition> r_core_zero_partitions(int m, int r) {
  std::vector<Partition> out;
  for (auto& mu : partitions_of(m))
    if (r_core_quotient_sign(mu, r).core.empty()) out.push_back(mu);
  return out;
}

}  // namespace qtforge
