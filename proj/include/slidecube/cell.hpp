#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace slidecube {

// A lattice cell. Cubes are occupied cells.
struct Cell {
  int x{0};
  int y{0};
  int z{0};

  constexpr int operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  constexpr int& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }

  friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Cell operator-(Cell a) { return {-a.x, -a.y, -a.z}; }

  // Lexicographic (x, y, z).
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.x << ',' << c.y << ',' << c.z << ')';
}

constexpr bool is_nonnegative(Cell c) { return c.x >= 0 && c.y >= 0 && c.z >= 0; }

constexpr int l1_norm(Cell c) {
  return (c.x < 0 ? -c.x : c.x) + (c.y < 0 ? -c.y : c.y) + (c.z < 0 ? -c.z : c.z);
}

constexpr bool are_adjacent(Cell a, Cell b) { return l1_norm(a - b) == 1; }

// Orders by (z, y, x), used wherever the algorithm speaks of "(z, y, x)" order.
constexpr bool zyx_less(Cell a, Cell b) {
  if (a.z != b.z) return a.z < b.z;
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

inline constexpr std::array<Cell, 6> kFaceDirections{{
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

inline constexpr Cell unit(int axis, int sign = 1) {
  Cell c{};
  c[axis] = sign;
  return c;
}

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    auto h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x));
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c.y);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(c.z);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace slidecube

template <>
struct std::hash<slidecube::Cell> : slidecube::CellHash {};
