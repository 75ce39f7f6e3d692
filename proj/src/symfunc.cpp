#include "qtforge/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace qtforge {

namespace {

std::map<std::pair<Partition, Partition>, long long> chi_memo;
std::mutex chi_mutex;

// Murnaghan-Nakayama via beta numbers: remove a border strip of size rho[0]
long long chi_rec(const Partition& lam, const Partition& rho) {
  if (lam.empty()) return 1;
  {
    std::lock_guard lk(chi_mutex);
    auto it = chi_memo.find({lam, rho});
    if (it != chi_memo.end()) return it->second;
  }
  int r = rho[0];
  Partition rest(rho.begin() + 1, rho.end());
  long long total = 0;
  int m = static_cast<int>(lam.size());
  std::vector<int> b(m);
  for (int i = 0; i < m; ++i) b[i] = lam[i] + (m - 1 - i);
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
    long long sgn = between % 2 == 0 ? 1 : -1;
    total += sgn * chi_rec(normalized(nu), rest);
  }
  std::lock_guard lk(chi_mutex);
  chi_memo[{lam, rho}] = total;
  return total;
}

}  // namespace

long long sn_character(const Partition& lam, const Partition& rho) {
  if (part_size(lam) != part_size(rho)) throw std::domain_error("character size mismatch");
  return chi_rec(normalized(lam), normalized(rho));
}

mpz_class z_order(const Partition& rho) {
  std::map<int, int> mult;
  for (int p : rho) mult[p]++;
  mpz_class z = 1;
  for (auto [p, m] : mult) {
    for (int i = 0; i < m; ++i) z *= p;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

void SchurExpansion::add(const Partition& lam, const QTRational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.emplace(lam, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

SchurExpansion SchurExpansion::single(const Partition& lam, const QTRational& c) {
  SchurExpansion f;
  f.add(normalized(lam), c);
  return f;
}

bool SchurExpansion::homogeneous(int* degree) const {
  int d = coeffs.empty() ? 0 : part_size(coeffs.begin()->first);
  for (auto& [lam, c] : coeffs)
    if (part_size(lam) != d) return false;
  if (degree) *degree = d;
  return true;
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& o) const {
  SchurExpansion r = *this;
  for (auto& [lam, c] : o.coeffs) r.add(lam, c);
  return r;
}

SchurExpansion SchurExpansion::operator*(const QTRational& c) const {
  SchurExpansion r;
  for (auto& [lam, v] : coeffs) r.add(lam, v * c);
  return r;
}

PowerExpansion to_power_sums(const SchurExpansion& f) {
  int d;
  if (!f.homogeneous(&d)) throw std::domain_error("to_power_sums: inhomogeneous input");
  PowerExpansion out;
  for (auto& rho : partitions_of(d)) {
    QTRational c(Rat(0));
    Rat zr(z_order(rho));
    for (auto& [lam, v] : f.coeffs)
      c += v * QTRational(Rat(static_cast<long>(sn_character(lam, rho))) / zr);
    if (!c.is_zero()) out[rho] = c;
  }
  return out;
}

SchurExpansion from_power_sums(const PowerExpansion& p, int degree) {
  SchurExpansion out;
  for (auto& lam : partitions_of(degree)) {
    QTRational c(Rat(0));
    for (auto& [rho, v] : p) c += v * QTRational(Rat(static_cast<long>(sn_character(lam, rho))));
    out.add(lam, c);
  }
  return out;
}

SchurExpansion lr_multiply(const SchurExpansion& f, const SchurExpansion& g) {
  int df, dg;
  if (!f.homogeneous(&df) || !g.homogeneous(&dg))
    throw std::domain_error("lr_multiply: inhomogeneous input");
  PowerExpansion pf = to_power_sums(f), pg = to_power_sums(g), prod;
  for (auto& [r1, c1] : pf)
    for (auto& [r2, c2] : pg) {
      Partition merged = r1;
      merged.insert(merged.end(), r2.begin(), r2.end());
      std::sort(merged.rbegin(), merged.rend());
      auto [it, fresh] = prod.emplace(merged, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  return from_power_sums(prod, df + dg);
}

long lr_coeff(const MultiPartition& multi, const Partition& lam) {
  SchurExpansion f = SchurExpansion::single({});
  for (auto& mu : multi)
    f = lr_multiply(f, SchurExpansion::single(mu));
  auto it = f.coeffs.find(normalized(lam));
  if (it == f.coeffs.end()) return 0;
  Rat v = it->second.as_laurent().constant_term();
  return static_cast<long>(v.get_num().get_si());
}

namespace {

// split into homogeneous layers by degree
std::map<int, SchurExpansion> layers(const SchurExpansion& f) {
  std::map<int, SchurExpansion> out;
  for (auto& [lam, c] : f.coeffs) out[part_size(lam)].add(lam, c);
  return out;
}

}  // namespace

QTRational plethysm_alphabet(const SchurExpansion& f, const QTLaurent& E) {
  QTRational total(Rat(0));
  for (auto& [d, layer] : layers(f)) {
    for (auto& [rho, c] : to_power_sums(layer)) {
      QTLaurent prod = QTLaurent::one();
      for (int k : rho) prod = prod * pleth_power(k, E);
      total += c * QTRational(prod);
    }
  }
  return total;
}

SchurExpansion pleth_scale(const SchurExpansion& f, PlethMode mode) {
  SchurExpansion out;
  for (auto& [d, layer] : layers(f)) {
    PowerExpansion p = to_power_sums(layer);
    for (auto& [rho, c] : p) {
      QTRational factor(Rat(1));
      for (int k : rho) {
        QTLaurent v = mode == PlethMode::TimesOneMinusQ ? QTLaurent::q(2 * k)
                                                        : QTLaurent::t(2 * k);
        QTRational bin(QTLaurent::one() - v);
        factor = mode == PlethMode::DivOneMinusT ? factor / bin : factor * bin;
      }
      p[rho] = c * factor;
    }
    out = out + from_power_sums(p, d);
  }
  return out;
}

QTRational inner_product(const SchurExpansion& f, const SchurExpansion& g) {
  int df, dg;
  if (!f.homogeneous(&df) || !g.homogeneous(&dg) || (df != dg && !f.coeffs.empty() && !g.coeffs.empty()))
    throw std::domain_error("inner_product: degree mismatch");
  QTRational total(Rat(0));
  for (auto& [lam, c] : f.coeffs) {
    auto it = g.coeffs.find(lam);
    if (it != g.coeffs.end()) total += c * it->second;
  }
  return total;
}

QTRational delta_bracket(const Partition& mu, const Partition& nu, char var) {
  int m = part_size(mu);
  if (part_size(nu) != m) throw std::domain_error("delta_bracket: size mismatch");
  QTRational total(Rat(0));
  for (auto& rho : partitions_of(m)) {
    long long cm = sn_character(mu, rho), cn = sn_character(nu, rho);
    if (cm == 0 || cn == 0) continue;
    QTLaurent den = QTLaurent::one();
    for (int k : rho)
      den = den * (QTLaurent::one() - (var == 'q' ? QTLaurent::q(2 * k) : QTLaurent::t(2 * k)));
    total += QTRational(QTLaurent(Rat(static_cast<long>(cm)) * Rat(static_cast<long>(cn)) / Rat(z_order(rho))), den);
  }
  return total;
}

SchurExpansion phi_schur(const Partition& mu) {
  SchurExpansion f;
  for (auto& [lam, c] : phi(mu)) f.add(lam, QTRational(Rat(c)));
  return f;
}

namespace {

// Gelfand-Tsetlin recursion: interlacing chains lam^(1) <= ... <= lam^(k) = shape
void gt_rec(const Partition& top, int k, std::vector<int>& weight,
            std::map<Weight, long>& out) {
  if (k == 1) {
    weight[0] = top.empty() ? 0 : top[0];
    Weight w = weight;
    out[w] += 1;
    weight[0] = 0;
    return;
  }
  // enumerate lam^(k-1) interlacing top: top_{i+1} <= lam_i <= top_i
  int rows = std::min<int>(k - 1, static_cast<int>(top.size()));
  Partition cur;
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == rows) {
      weight[k - 1] = part_size(top) - sum;
      gt_rec(normalized(cur), k - 1, weight, out);
      weight[k - 1] = 0;
      return;
    }
    int hi = top[i];
    int lo = i + 1 < static_cast<int>(top.size()) ? top[i + 1] : 0;
    if (i > 0) hi = std::min(hi, cur[i - 1]);
    for (int v = lo; v <= hi; ++v) {
      cur.push_back(v);
      self(self, i + 1, sum + v);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::map<Weight, long> schur_z_expansion(const Weight& mu) {
  int n = static_cast<int>(mu.size());
  if (!is_dominant(mu)) throw std::domain_error("schur_z_expansion: non-dominant weight");
  int shift = mu[n - 1];
  Partition shape(n);
  for (int i = 0; i < n; ++i) shape[i] = mu[i] - shift;
  shape = normalized(shape);
  std::map<Weight, long> raw;
  std::vector<int> weight(n, 0);
  gt_rec(shape, n, weight, raw);
  if (shift == 0) return raw;
  std::map<Weight, long> out;
  for (auto& [w, c] : raw) {
    Weight v = w;
    for (auto& x : v) x += shift;
    out[v] = c;
  }
  return out;
}

}  // namespace qtforge
