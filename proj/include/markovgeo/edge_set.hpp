#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace markovgeo {

/// Directed support graph of a kernel or edge function over states 0..m-1.
///
/// States are 0-based internally; the file format uses 1-based indices and
/// the conversion happens at the JSON boundary. The state space must have
/// at least two states.
class EdgeSet {
 public:
  EdgeSet(int size, const std::vector<std::pair<int, int>>& edges);

  static EdgeSet full(int size);
  /// Birth-and-death support {(i,j) : |i-j| <= 1}.
  static EdgeSet birth_death(int size);

  int size() const { return size_; }
  int edge_count() const { return edge_count_; }
  bool contains(int x, int xp) const { return mask_[idx(x, xp)] != 0; }

  bool symmetric() const;
  EdgeSet transposed() const;
  EdgeSet united(const EdgeSet& other) const;
  EdgeSet intersected(const EdgeSet& other) const;

  /// Edges in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// |T0|: number of self-loops.
  int diagonal_count() const;

  /// Smallest x with (m-1, x) an edge. Symmetric supports only.
  int excluded_column() const;

  /// T(E): pairs (i,j) with j <= i, minus (m-1, excluded_column()),
  /// lexicographic. Symmetric supports only.
  std::vector<std::pair<int, int>> coordinate_pairs() const;

  bool operator==(const EdgeSet& other) const = default;

 private:
  int idx(int x, int xp) const { return x * size_ + xp; }

  int size_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint8_t> mask_;
};

/// True iff the directed graph has a single strongly connected component
/// covering every state.
bool strongly_connected(const EdgeSet& edges);

}  // namespace markovgeo
