#include "qtforge/degenerations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtforge {

namespace {

bool in_diagram(const Partition& shape, int r, int c) {
  return r >= 0 && c >= 0 && r < static_cast<int>(shape.size()) && c < shape[r];
}

Bond make_bond(Cell a, Cell b) { return a < b ? Bond{a, b} : Bond{b, a}; }

// lattice point (x, y) on the grid; a vertical bond (r,c)-(r+1,c) is cut by
// the wall from (c, r+1) to (c+1, r+1), a horizontal bond (r,c)-(r,c+1) by
// the wall from (c+1, r) to (c+1, r+1)
using Point = std::pair<int, int>;

std::pair<Point, Point> wall_of(const Bond& b) {
  auto [a, d] = b;
  if (a.first + 1 == d.first) return {{a.second, d.first}, {a.second + 1, d.first}};
  return {{d.second, a.first}, {d.second, a.first + 1}};
}

// lattice points with fewer than 4 incident diagram cells lie on the outer boundary
bool on_outer_boundary(const Partition& shape, const Point& p) {
  auto [x, y] = p;
  int cnt = 0;
  for (int dr : {-1, 0})
    for (int dc : {-1, 0}) cnt += in_diagram(shape, y + dr, x + dc);
  return cnt < 4;
}

}  // namespace

std::vector<Bond> all_bonds(const Partition& shape) {
  std::vector<Bond> out;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      if (in_diagram(shape, r, c + 1)) out.push_back({{r, c}, {r, c + 1}});
      if (in_diagram(shape, r + 1, c)) out.push_back({{r, c}, {r + 1, c}});
    }
  std::sort(out.begin(), out.end());
  return out;
}

CutConfig full_config(const Partition& shape) {
  auto b = all_bonds(shape);
  return {shape, std::set<Bond>(b.begin(), b.end())};
}

CutConfig empty_config(const Partition& shape) { return {shape, {}}; }

namespace {

void validate(const CutConfig& c) {
  if (!is_partition(c.shape)) throw std::domain_error("cut config: shape is not a partition");
  for (auto& [a, b] : c.bonds) {
    bool adj = (a.first == b.first && a.second + 1 == b.second) ||
               (a.second == b.second && a.first + 1 == b.first);
    if (!adj || !in_diagram(c.shape, a.first, a.second) ||
        !in_diagram(c.shape, b.first, b.second))
      throw std::domain_error("cut config: bond outside the diagram");
  }
}

std::vector<std::vector<Cell>> components(const CutConfig& c) {
  std::map<Cell, int> comp;
  std::vector<std::vector<Cell>> out;
  for (int r = 0; r < static_cast<int>(c.shape.size()); ++r)
    for (int col = 0; col < c.shape[r]; ++col) {
      Cell start{r, col};
      if (comp.count(start)) continue;
      int id = static_cast<int>(out.size());
      out.emplace_back();
      std::vector<Cell> stack{start};
      comp[start] = id;
      while (!stack.empty()) {
        Cell cur = stack.back();
        stack.pop_back();
        out[id].push_back(cur);
        for (auto& nb : {Cell{cur.first - 1, cur.second}, Cell{cur.first + 1, cur.second},
                         Cell{cur.first, cur.second - 1}, Cell{cur.first, cur.second + 1}}) {
          if (!in_diagram(c.shape, nb.first, nb.second) || comp.count(nb)) continue;
          if (c.bonds.count(make_bond(cur, nb))) {
            comp[nb] = id;
            stack.push_back(nb);
          }
        }
      }
      std::sort(out[id].begin(), out[id].end());
    }
  return out;
}

bool is_skew_piece(const std::vector<Cell>& cells) {
  // contiguous occupied rows, a contiguous column interval per row, and both
  // interval ends weakly decreasing upward (a skew shape in this orientation)
  std::map<int, std::pair<int, int>> rows;  // row -> [min col, max col]
  std::map<int, int> count;
  for (auto& [r, c] : cells) {
    auto [it, fresh] = rows.emplace(r, std::pair<int, int>{c, c});
    if (!fresh) {
      it->second.first = std::min(it->second.first, c);
      it->second.second = std::max(it->second.second, c);
    }
    count[r]++;
  }
  int prev_row = rows.begin()->first - 1;
  std::pair<int, int> prev{0, 0};
  for (auto& [r, iv] : rows) {
    if (r != prev_row + 1) return false;
    if (count[r] != iv.second - iv.first + 1) return false;
    if (r > rows.begin()->first && (iv.first > prev.first || iv.second > prev.second))
      return false;
    prev_row = r;
    prev = iv;
  }
  return true;
}

bool square_rule_ok(const CutConfig& c) {
  for (int r = 0; r + 1 < static_cast<int>(c.shape.size()); ++r)
    for (int col = 0; col + 1 < c.shape[r + 1]; ++col) {
      bool B = c.bonds.count({{r, col}, {r, col + 1}});
      bool T = c.bonds.count({{r + 1, col}, {r + 1, col + 1}});
      bool L = c.bonds.count({{r, col}, {r + 1, col}});
      bool R = c.bonds.count({{r, col + 1}, {r + 1, col + 1}});
      if ((L && T) != (B && R)) return false;
    }
  return true;
}

}  // namespace

bool is_admissible(const CutConfig& c) {
  validate(c);
  if (!square_rule_ok(c)) return false;
  for (auto& piece : components(c))
    if (!is_skew_piece(piece)) return false;
  return true;
}

std::vector<std::vector<Cell>> pieces(const CutConfig& c) {
  if (!is_admissible(c)) throw std::domain_error("pieces: configuration is not admissible");
  auto comps = components(c);
  std::stable_sort(comps.begin(), comps.end(),
                   [](const std::vector<Cell>& a, const std::vector<Cell>& b) {
                     bool az = a.front() == Cell{0, 0}, bz = b.front() == Cell{0, 0};
                     if (az != bz) return az;
                     return a.front() < b.front();
                   });
  return comps;
}

std::vector<std::set<Bond>> boundary_segments(const CutConfig& c) {
  auto ps = pieces(c);
  std::set<Cell> lam1(ps.front().begin(), ps.front().end());
  // cuts on the boundary of lambda_1 vs all other absent adjacencies
  std::vector<Bond> bdry;
  std::vector<Bond> other;
  for (auto& b : all_bonds(c.shape)) {
    if (c.bonds.count(b)) continue;
    int inside = static_cast<int>(lam1.count(b.first)) + static_cast<int>(lam1.count(b.second));
    (inside == 1 ? bdry : other).push_back(b);
  }
  // walls as lattice edges; division points split the boundary into segments
  std::map<Point, std::vector<size_t>> at;  // lattice point -> incident boundary walls
  for (size_t i = 0; i < bdry.size(); ++i) {
    auto [p, q] = wall_of(bdry[i]);
    at[p].push_back(i);
    at[q].push_back(i);
  }
  std::set<Point> other_pts;
  for (auto& b : other) {
    auto [p, q] = wall_of(b);
    other_pts.insert(p);
    other_pts.insert(q);
  }
  auto division = [&](const Point& p) {
    return at[p].size() != 2 || other_pts.count(p) || on_outer_boundary(c.shape, p);
  };
  std::vector<std::set<Bond>> segs;
  std::vector<bool> used(bdry.size(), false);
  auto walk = [&](size_t start, Point from) {
    std::set<Bond> seg;
    size_t e = start;
    Point p = from;
    while (true) {
      used[e] = true;
      seg.insert(bdry[e]);
      auto [a, b] = wall_of(bdry[e]);
      Point next = (a == p) ? b : a;
      if (division(next)) break;
      size_t cont = at[next][0] == e ? at[next][1] : at[next][0];
      if (used[cont]) break;
      e = cont;
      p = next;
    }
    segs.push_back(std::move(seg));
  };
  for (auto& [p, es] : at)
    if (division(p))
      for (size_t e : es)
        if (!used[e]) walk(e, p);
  for (size_t e = 0; e < bdry.size(); ++e)  // defensive: closed runs without division points
    if (!used[e]) walk(e, wall_of(bdry[e]).first);
  return segs;
}

std::vector<CutConfig> merge_moves(const CutConfig& c) {
  size_t m = pieces(c).size();
  if (m == 1) throw std::domain_error("merge_moves: nothing to merge");
  std::set<CutConfig> out;
  for (auto& seg : boundary_segments(c)) {
    CutConfig next = c;
    next.bonds.insert(seg.begin(), seg.end());
    if (!is_admissible(next)) continue;
    if (components(next).size() != m - 1) continue;
    out.insert(std::move(next));
  }
  return std::vector<CutConfig>(out.begin(), out.end());
}

std::vector<CutConfig> admissible_configs(const Partition& shape) {
  auto bonds = all_bonds(shape);
  if (bonds.size() > 25) throw std::domain_error("admissible_configs: diagram too large");
  std::vector<CutConfig> out;
  for (unsigned long mask = 0; mask < (1ul << bonds.size()); ++mask) {
    CutConfig c{shape, {}};
    for (size_t i = 0; i < bonds.size(); ++i)
      if (mask & (1ul << i)) c.bonds.insert(bonds[i]);
    if (is_admissible(c)) out.push_back(std::move(c));
  }
  return out;
}

bool degeneration_connected(const Partition& mu) {
  Partition shape = normalized(mu);
  auto configs = admissible_configs(shape);
  std::map<CutConfig, size_t> index;
  for (size_t i = 0; i < configs.size(); ++i) index[configs[i]] = i;
  CutConfig full = full_config(shape);
  // reverse reachability from the full-bond configuration
  std::vector<std::vector<size_t>> rev(configs.size());
  for (size_t i = 0; i < configs.size(); ++i) {
    if (configs[i] == full) continue;
    for (auto& nxt : merge_moves(configs[i])) rev[index.at(nxt)].push_back(i);
  }
  std::vector<bool> seen(configs.size(), false);
  std::vector<size_t> stack{index.at(full)};
  seen[index.at(full)] = true;
  while (!stack.empty()) {
    size_t v = stack.back();
    stack.pop_back();
    for (size_t u : rev[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace qtforge
