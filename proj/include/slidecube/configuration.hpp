#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cell.hpp"

namespace slidecube {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CellSet = std::unordered_set<Cell, CellHash>;

// A finite set of cubes. Connectivity and size requirements are checked at
// API boundaries (validate_configuration), not on every mutation, so the same
// type also carries intermediate sets such as shove_result.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::initializer_list<Cell> cubes) : cubes_(cubes.begin(), cubes.end()) {}
  explicit Configuration(std::span<const Cell> cubes) : cubes_(cubes.begin(), cubes.end()) {}
  explicit Configuration(CellSet cubes) : cubes_(std::move(cubes)) {}

  bool contains(Cell c) const { return cubes_.count(c) != 0; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }

  bool insert(Cell c) { return cubes_.insert(c).second; }
  bool erase(Cell c) { return cubes_.erase(c) != 0; }

  const CellSet& cells() const { return cubes_; }
  auto begin() const { return cubes_.begin(); }
  auto end() const { return cubes_.end(); }

  std::vector<Cell> sorted() const {
    std::vector<Cell> out(cubes_.begin(), cubes_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.cubes_ == b.cubes_;
  }

 private:
  CellSet cubes_;
};

struct BoundingBox {
  Cell min;
  Cell max;

  bool contains(Cell c) const {
    return c.x >= min.x && c.y >= min.y && c.z >= min.z && c.x <= max.x && c.y <= max.y &&
           c.z <= max.z;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

template <typename Range>
BoundingBox bounding_box_of(const Range& cubes) {
  auto it = std::begin(cubes);
  if (it == std::end(cubes)) throw ModelError("bounding box of an empty configuration");
  BoundingBox box{*it, *it};
  for (; it != std::end(cubes); ++it) {
    for (int a = 0; a < 3; ++a) {
      box.min[a] = std::min(box.min[a], (*it)[a]);
      box.max[a] = std::max(box.max[a], (*it)[a]);
    }
  }
  return box;
}

inline BoundingBox bounding_box(const Configuration& cfg) { return bounding_box_of(cfg); }

// Number of face-connected components among the cubes accepted by `keep`.
template <typename Pred>
int count_components_if(const Configuration& cfg, Pred&& keep) {
  CellSet seen;
  std::vector<Cell> stack;
  int components = 0;
  for (Cell start : cfg) {
    if (!keep(start) || seen.count(start)) continue;
    ++components;
    seen.insert(start);
    stack.push_back(start);
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      for (Cell d : kFaceDirections) {
        Cell n = c + d;
        if (cfg.contains(n) && keep(n) && seen.insert(n).second) stack.push_back(n);
      }
    }
  }
  return components;
}

inline bool is_connected(const Configuration& cfg) {
  return count_components_if(cfg, [](Cell) { return true; }) <= 1;
}

inline bool is_connected_without(const Configuration& cfg, Cell removed) {
  return count_components_if(cfg, [removed](Cell c) { return c != removed; }) <= 1;
}

inline bool is_connected_without(const Configuration& cfg, const CellSet& removed) {
  return count_components_if(cfg, [&removed](Cell c) { return removed.count(c) == 0; }) <= 1;
}

// True iff removing `s` leaves a connected-or-empty set. Throws if s is not a subset.
template <typename Range>
bool is_non_cut(const Configuration& cfg, const Range& s) {
  CellSet removed;
  for (Cell c : s) {
    if (!cfg.contains(c)) throw ModelError("is_non_cut: set is not a subset of the configuration");
    removed.insert(c);
  }
  return is_connected_without(cfg, removed);
}

// Connected components as sorted cell lists, ordered by their smallest cell.
template <typename Pred>
std::vector<std::vector<Cell>> components_if(const Configuration& cfg, Pred&& keep) {
  std::vector<std::vector<Cell>> out;
  CellSet seen;
  for (Cell start : cfg.sorted()) {
    if (!keep(start) || seen.count(start)) continue;
    std::vector<Cell> comp{start};
    seen.insert(start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Cell d : kFaceDirections) {
        Cell n = comp[i] + d;
        if (cfg.contains(n) && keep(n) && seen.insert(n).second) comp.push_back(n);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Articulation cubes of the face-adjacency graph (iterative Tarjan). A cube is
// reported iff removing it increases the number of components.
inline CellSet cut_cubes(const Configuration& cfg) {
  const std::vector<Cell> cubes = cfg.sorted();
  const int n = static_cast<int>(cubes.size());
  std::unordered_map<Cell, int, CellHash> index;
  index.reserve(cubes.size());
  for (int i = 0; i < n; ++i) index.emplace(cubes[i], i);

  std::vector<std::array<int, 6>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d < 6; ++d) {
      auto it = index.find(cubes[i] + kFaceDirections[d]);
      adj[i][d] = it == index.end() ? -1 : it->second;
    }
  }

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_edge(n, 0), children(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      if (next_edge[v] < 6) {
        int w = adj[v][next_edge[v]++];
        if (w < 0) continue;
        if (disc[w] == -1) {
          parent[w] = v;
          ++children[v];
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (parent[p] >= 0 && low[v] >= disc[p]) is_cut[p] = true;
        }
      }
    }
    if (children[root] > 1) is_cut[root] = true;
  }
  CellSet out;
  for (int i = 0; i < n; ++i)
    if (is_cut[i]) out.insert(cubes[i]);
  return out;
}

// Rejects inputs the algorithm does not accept: fewer than two cubes,
// disconnected sets, or cubes with a negative coordinate.
inline void validate_configuration(const Configuration& cfg) {
  if (cfg.size() < 2) throw ModelError("configuration needs at least two cubes");
  for (Cell c : cfg)
    if (!is_nonnegative(c)) throw ModelError("configuration has a cube with a negative coordinate");
  if (!is_connected(cfg)) throw ModelError("configuration is not connected");
}

}  // namespace slidecube
