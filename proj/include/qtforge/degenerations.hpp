// Admissible decompositions of a Young diagram into skew pieces, the local
// 2x2 commutativity rule, merge moves along the boundary of the (0,0)-piece,
// and connectivity of the merge graph.
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "qtforge/partitions.hpp"

namespace qtforge {

// (row, col), row 0 at the bottom; row r of the diagram has shape[r] cells
using Cell = std::pair<int, int>;
using Bond = std::pair<Cell, Cell>;  // present bond, cells in increasing order

struct CutConfig {
  Partition shape;        // weakly decreasing part lengths, row 0 longest
  std::set<Bond> bonds;   // PRESENT bonds; the cuts are the absent adjacencies

  auto operator<=>(const CutConfig&) const = default;
};

// all adjacent cell pairs of the diagram, in canonical order
std::vector<Bond> all_bonds(const Partition& shape);

// full-bond and empty-bond configurations
CutConfig full_config(const Partition& shape);
CutConfig empty_config(const Partition& shape);

// local 2x2 rule on every full square + every connected component a skew shape
bool is_admissible(const CutConfig& c);

// connected components as sorted cell lists, the (0,0)-piece first, the rest
// by minimal cell; throws if c is not admissible
std::vector<std::vector<Cell>> pieces(const CutConfig& c);

// all admissible configurations obtained by restoring one maximal boundary
// segment of the (0,0)-piece, merging it with exactly one other piece;
// throws if the configuration has a single piece
std::vector<CutConfig> merge_moves(const CutConfig& c);

// maximal boundary segments of the (0,0)-piece between division points, as
// bond sets (the candidates merge_moves filters by admissibility)
std::vector<std::set<Bond>> boundary_segments(const CutConfig& c);

std::vector<CutConfig> admissible_configs(const Partition& shape);

// every admissible configuration reaches the full-bond one through merges
bool degeneration_connected(const Partition& mu);

}  // namespace qtforge
