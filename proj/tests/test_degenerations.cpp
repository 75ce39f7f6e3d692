#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtforge/degenerations.hpp"

using namespace qtforge;

namespace {
// bonds of the 2x2 square: h0/h1 horizontal in rows 0/1, v0/v1 vertical in cols 0/1
const Bond h0{{0, 0}, {0, 1}};
const Bond h1{{1, 0}, {1, 1}};
const Bond v0{{0, 0}, {1, 0}};
const Bond v1{{0, 1}, {1, 1}};

CutConfig cfg22(std::set<Bond> bonds) { return CutConfig{{2, 2}, std::move(bonds)}; }

CutConfig transpose(const CutConfig& c) {
  CutConfig r{conjugate(c.shape), {}};
  for (auto& [a, b] : c.bonds) {
    Cell ta{a.second, a.first}, tb{b.second, b.first};
    r.bonds.insert(ta < tb ? Bond{ta, tb} : Bond{tb, ta});
  }
  return r;
}
}  // namespace

TEST_CASE("bond enumeration") {
  CHECK(all_bonds({2, 2}).size() == 4);
  CHECK(all_bonds({1}).empty());
  CHECK(all_bonds({3, 1}).size() == 3);
  CHECK(full_config({2, 2}).bonds.size() == 4);
  CHECK(empty_config({2, 2}).bonds.empty());
}

TEST_CASE("golden table for the full 2x2 square") {
  // the ten admissible bond patterns
  std::set<std::set<Bond>> good{
      {h0, h1, v0, v1}, {h0, h1}, {v0, v1}, {h0, v0}, {h1, v1},
      {h0}, {h1}, {v0}, {v1}, {}};
  // the six impossible ones
  std::set<std::set<Bond>> bad{
      {h0, h1, v0}, {h0, h1, v1}, {h0, v0, v1}, {h1, v0, v1}, {h0, v1}, {h1, v0}};
  for (auto& b : good) CHECK(is_admissible(cfg22(b)));
  for (auto& b : bad) CHECK(!is_admissible(cfg22(b)));
  auto all = admissible_configs({2, 2});
  CHECK(all.size() == 10);
  std::set<std::set<Bond>> got;
  for (auto& c : all) got.insert(c.bonds);
  CHECK(got == good);
}

TEST_CASE("pieces: order and content") {
  auto p = pieces(cfg22({h0, v0}));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::vector<Cell>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(p[1] == std::vector<Cell>{{1, 1}});
  CHECK(pieces(full_config({2, 2})).size() == 1);
  CHECK(pieces(empty_config({2, 2})).size() == 4);
  CHECK_THROWS(pieces(cfg22({h0, v1})));  // not admissible
}

TEST_CASE("invalid bonds are rejected") {
  CHECK_THROWS(is_admissible(CutConfig{{2, 1}, {Bond{{0, 0}, {1, 1}}}}));  // diagonal
  CHECK_THROWS(is_admissible(CutConfig{{2, 1}, {Bond{{0, 1}, {1, 1}}}}));  // outside
}

TEST_CASE("merge moves on the 2x2 square, by hand") {
  // two horizontal dominoes: the division points are only the outer ones,
  // one segment {v0, v1}, restoring it gives the full configuration
  auto m = merge_moves(cfg22({h0, h1}));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == full_config({2, 2}));
  m = merge_moves(cfg22({v0, v1}));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == full_config({2, 2}));
  // corner singleton vs L piece: segment {h0, v0} merges them
  m = merge_moves(cfg22({h1, v1}));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == full_config({2, 2}));
  // four singletons: the interior lattice point is a division point because the
  // other cuts end there, so h0 and v0 restore separately
  m = merge_moves(empty_config({2, 2}));
  std::set<std::set<Bond>> got;
  for (auto& c : m) got.insert(c.bonds);
  CHECK(got == std::set<std::set<Bond>>{{h0}, {v0}});
  CHECK_THROWS(merge_moves(full_config({2, 2})));  // single piece
}

TEST_CASE("every multi piece configuration has a merge move") {
  for (auto shape : {Partition{3, 2}, Partition{2, 2, 1}, Partition{4, 1}})
    for (auto& c : admissible_configs(shape)) {
      if (pieces(c).size() == 1) continue;
      auto m = merge_moves(c);
      CHECK(!m.empty());
      for (auto& next : m) {
        CHECK(is_admissible(next));
        CHECK(pieces(next).size() == pieces(c).size() - 1);
        CHECK(std::includes(next.bonds.begin(), next.bonds.end(), c.bonds.begin(),
                            c.bonds.end()));
      }
    }
}

TEST_CASE("transpose equivariance") {
  for (auto shape : {Partition{3, 1}, Partition{3, 2}, Partition{2, 2, 1}}) {
    auto direct = admissible_configs(conjugate(shape));
    std::set<CutConfig> transposed;
    for (auto& c : admissible_configs(shape)) transposed.insert(transpose(c));
    CHECK(std::set<CutConfig>(direct.begin(), direct.end()) == transposed);
  }
}

TEST_CASE("merge graph connectivity") {
  for (auto shape : {Partition{2, 2}, Partition{3, 1}, Partition{3, 2, 1}, Partition{4}})
    CHECK(degeneration_connected(shape));
}
