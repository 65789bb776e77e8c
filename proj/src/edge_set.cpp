#include "markovgeo/edge_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "markovgeo/errors.hpp"

namespace markovgeo {

EdgeSet::EdgeSet(int size, const std::vector<std::pair<int, int>>& edges)
    : size_(size) {
  if (size < 2) {
    fail(errc::invalid_size,
         "state space must have at least two states, got " +
             std::to_string(size));
  }
  mask_.assign(static_cast<std::size_t>(size) * size, 0);
  for (auto [x, xp] : edges) {
    if (x < 0 || x >= size || xp < 0 || xp >= size) {
      fail(errc::invalid_size, "edge (" + std::to_string(x) + "," +
                                   std::to_string(xp) + ") out of range");
    }
    mask_[idx(x, xp)] = 1;
  }
  edge_count_ = static_cast<int>(std::count(mask_.begin(), mask_.end(), 1));
}

EdgeSet EdgeSet::full(int size) {
  std::vector<std::pair<int, int>> all;
  all.reserve(static_cast<std::size_t>(size) * size);
  for (int x = 0; x < size; ++x)
    for (int xp = 0; xp < size; ++xp) all.emplace_back(x, xp);
  return EdgeSet(size, all);
}

EdgeSet EdgeSet::birth_death(int size) {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < size; ++x)
    for (int xp = 0; xp < size; ++xp)
      if (std::abs(x - xp) <= 1) e.emplace_back(x, xp);
  return EdgeSet(size, e);
}

bool EdgeSet::symmetric() const {
  for (int x = 0; x < size_; ++x)
    for (int xp = x + 1; xp < size_; ++xp)
      if (mask_[idx(x, xp)] != mask_[idx(xp, x)]) return false;
  return true;
}

EdgeSet EdgeSet::transposed() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(edge_count_);
  for (auto [x, xp] : edges()) e.emplace_back(xp, x);
  return EdgeSet(size_, e);
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < size_; ++x)
    for (int xp = 0; xp < size_; ++xp)
      if (contains(x, xp) || other.contains(x, xp)) e.emplace_back(x, xp);
  return EdgeSet(size_, e);
}

EdgeSet EdgeSet::intersected(const EdgeSet& other) const {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < size_; ++x)
    for (int xp = 0; xp < size_; ++xp)
      if (contains(x, xp) && other.contains(x, xp)) e.emplace_back(x, xp);
  return EdgeSet(size_, e);
}

std::vector<std::pair<int, int>> EdgeSet::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(edge_count_);
  for (int x = 0; x < size_; ++x)
    for (int xp = 0; xp < size_; ++xp)
      if (mask_[idx(x, xp)]) e.emplace_back(x, xp);
  return e;
}

int EdgeSet::diagonal_count() const {
  int n = 0;
  for (int x = 0; x < size_; ++x) n += mask_[idx(x, x)];
  return n;
}

int EdgeSet::excluded_column() const {
  if (!symmetric()) {
    fail(errc::asymmetric_support,
         "coordinate machinery requires a symmetric support");
  }
  for (int x = 0; x < size_; ++x)
    if (mask_[idx(size_ - 1, x)]) return x;
  fail(errc::not_irreducible, "last state has no outgoing edge");
}

std::vector<std::pair<int, int>> EdgeSet::coordinate_pairs() const {
  const int xstar = excluded_column();
  std::vector<std::pair<int, int>> t;
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j <= i; ++j)
      if (mask_[idx(i, j)] && !(i == size_ - 1 && j == xstar))
        t.emplace_back(i, j);
  return t;
}

bool strongly_connected(const EdgeSet& edges) {
  const int m = edges.size();
  auto reach = [&](bool forward) {
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m; ++y) {
        bool edge = forward ? edges.contains(x, y) : edges.contains(y, x);
        if (edge && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return std::count(seen.begin(), seen.end(), 1) == m;
  };
  return reach(true) && reach(false);
}

}  // namespace markovgeo
