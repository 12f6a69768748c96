#pragma once

#include <map>
#include <utility>
#include <vector>

#include "configuration.hpp"

namespace slidecube {

// Vertical run {x} x {y} x {z_bottom..z_top}. The head is the top cube, the
// support everything below it.
struct Subpillar {
  int x{0};
  int y{0};
  int z_bottom{0};
  int z_top{0};

  int height() const { return z_top - z_bottom + 1; }
  Cell head() const { return {x, y, z_top}; }
  Cell base() const { return {x, y, z_bottom}; }
  Cell at(int z) const { return {x, y, z}; }
  bool contains(Cell c) const { return c.x == x && c.y == y && c.z >= z_bottom && c.z <= z_top; }
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int z = z_bottom; z <= z_top; ++z) out.push_back({x, y, z});
    return out;
  }
  friend auto operator<=>(const Subpillar&, const Subpillar&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Subpillar& p) {
  return os << "P(" << p.x << ',' << p.y << ',' << p.z_bottom << ".." << p.z_top << ')';
}

// Horizontal side offsets in the fixed order +x, -x, +y, -y.
inline constexpr std::array<std::pair<int, int>, 4> kSides{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

// Maximal vertical runs, sorted by (x, y, z_bottom).
template <typename Range>
std::vector<Subpillar> decompose_pillars(const Range& cubes) {
  std::map<std::pair<int, int>, std::vector<int>> columns;
  for (Cell c : cubes) columns[{c.x, c.y}].push_back(c.z);
  std::vector<Subpillar> out;
  for (auto& [xy, zs] : columns) {
    std::sort(zs.begin(), zs.end());
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    std::size_t i = 0;
    while (i < zs.size()) {
      std::size_t j = i;
      while (j + 1 < zs.size() && zs[j + 1] == zs[j] + 1) ++j;
      out.push_back({xy.first, xy.second, zs[i], zs[j]});
      i = j + 1;
    }
  }
  return out;
}

struct PillarGraph {
  std::vector<Subpillar> vertices;
  std::vector<std::vector<int>> edges;

  int index_of(const Subpillar& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    return (it != vertices.end() && *it == p) ? static_cast<int>(it - vertices.begin()) : -1;
  }
};

template <typename Range>
PillarGraph pillar_graph(const Range& cubes) {
  PillarGraph g;
  g.vertices = decompose_pillars(cubes);
  g.edges.resize(g.vertices.size());
  std::map<std::pair<int, int>, std::vector<int>> by_column;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    by_column[{g.vertices[i].x, g.vertices[i].y}].push_back(i);
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
    const Subpillar& p = g.vertices[i];
    for (auto [dx, dy] : kSides) {
      auto it = by_column.find({p.x + dx, p.y + dy});
      if (it == by_column.end()) continue;
      for (int j : it->second) {
        const Subpillar& q = g.vertices[j];
        if (q.z_bottom <= p.z_top && p.z_bottom <= q.z_top) g.edges[i].push_back(j);
      }
    }
    std::sort(g.edges[i].begin(), g.edges[i].end());
  }
  return g;
}

// Articulation vertices of an undirected graph given as adjacency lists.
inline std::vector<bool> articulation_points(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0), children(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      if (next[v] < static_cast<int>(adj[v].size())) {
        int w = adj[v][next[v]++];
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
          if (parent[p] >= 0 && low[v] >= disc[p]) cut[p] = true;
        }
      }
    }
    if (children[root] > 1) cut[root] = true;
  }
  return cut;
}

inline bool is_pillar_of(const Configuration& cfg, const Subpillar& p) {
  if (p.z_bottom > p.z_top) return false;
  for (Cell c : p.cells())
    if (!cfg.contains(c)) return false;
  return !cfg.contains(p.at(p.z_bottom - 1)) && !cfg.contains(p.at(p.z_top + 1));
}

inline bool is_subpillar_of(const Configuration& cfg, const Subpillar& p) {
  if (p.z_bottom > p.z_top) return false;
  for (Cell c : p.cells())
    if (!cfg.contains(c)) return false;
  return true;
}

inline bool is_non_cut_pillar_by_removal(const Configuration& cfg, const Subpillar& p) {
  return is_non_cut(cfg, p.cells());
}

inline bool is_non_cut_pillar_by_graph(const Configuration& cfg, const Subpillar& p) {
  const PillarGraph g = pillar_graph(cfg);
  const int i = g.index_of(p);
  if (i < 0) throw ModelError("is_non_cut_pillar: not a pillar of the configuration");
  // A disconnected host makes "non-cut vertex" and "removal leaves one
  // component" disagree; only the removal form is meaningful there.
  return !articulation_points(g.edges)[i];
}

inline bool is_non_cut_pillar(const Configuration& cfg, const Subpillar& p) {
  if (!is_pillar_of(cfg, p)) throw ModelError("is_non_cut_pillar: not a pillar of the configuration");
  const bool by_removal = is_non_cut_pillar_by_removal(cfg, p);
#ifndef NDEBUG
  if (is_connected(cfg) && by_removal != is_non_cut_pillar_by_graph(cfg, p))
    throw ModelError("pillar non-cut characterizations disagree");
#endif
  return by_removal;
}

// All non-cut pillars of a connected configuration, in (x, y, z_bottom) order.
inline std::vector<Subpillar> non_cut_pillars(const Configuration& cfg) {
  const PillarGraph g = pillar_graph(cfg);
  const auto cut = articulation_points(g.edges);
  std::vector<Subpillar> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (!cut[i]) out.push_back(g.vertices[i]);
  return out;
}

// Locked: the head's only neighbor is its own support. Height-1 pillars have
// no support and are never locked.
inline bool is_locked(const Configuration& cfg, const Subpillar& p) {
  if (!is_subpillar_of(cfg, p)) throw ModelError("is_locked: subpillar is not in the configuration");
  if (p.height() < 2) return false;
  const Cell head = p.head();
  for (Cell d : kFaceDirections) {
    Cell n = head + d;
    if (n == head - unit(2)) continue;
    if (cfg.contains(n)) return false;
  }
  return true;
}

// Maximal pillars in the side column that touch p, ordered bottom to top.
inline std::vector<Subpillar> adjacent_pillars(const Configuration& cfg, const Subpillar& p,
                                               std::pair<int, int> side) {
  const int sx = p.x + side.first;
  const int sy = p.y + side.second;
  std::vector<Subpillar> out;
  int z = p.z_bottom;
  while (z <= p.z_top) {
    if (!cfg.contains({sx, sy, z})) {
      ++z;
      continue;
    }
    int lo = z, hi = z;
    while (cfg.contains({sx, sy, lo - 1})) --lo;
    while (cfg.contains({sx, sy, hi + 1})) ++hi;
    out.push_back({sx, sy, lo, hi});
    z = hi + 1;
  }
  return out;
}

}  // namespace slidecube
