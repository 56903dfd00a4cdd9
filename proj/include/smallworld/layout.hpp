#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace smallworld {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

// Angle of the vector from a to b, normalized to [0, 2*pi).
double bearing(const Point& a, const Point& b);

// Node placement over a rectangular region, plus the omnidirectional radio
// range and the seed that produced the draw. Positions are immutable once
// placed; everything downstream keys off node ids 0..N-1.
struct NodeLayout {
  std::vector<Point> positions;
  double region_width = 0.0;
  double region_height = 0.0;
  double omni_range = 1.0;
  std::uint64_t seed = 0;

  int node_count() const { return static_cast<int>(positions.size()); }
};

NodeLayout place_nodes(int count, double region_width, double region_height,
                       double omni_range, std::uint64_t seed);

// Largest pairwise Euclidean distance; needs at least two nodes.
double euclidean_diameter(const NodeLayout& layout);

// Text form: header "N width height r seed", then one "id x y" line per node
// with six-decimal coordinates.
void write_layout(std::ostream& out, const NodeLayout& layout);
NodeLayout read_layout(std::istream& in);

}  // namespace smallworld
