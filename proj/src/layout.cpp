#include "smallworld/layout.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "smallworld/rng.hpp"

namespace smallworld {

double distance(const Point& a, const Point& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

double bearing(const Point& a, const Point& b) {
  if (a.x == b.x && a.y == b.y)
    throw std::invalid_argument("bearing: points coincide");
  double angle = std::atan2(b.y - a.y, b.x - a.x);
  if (angle < 0.0) angle += two_pi;
  if (angle >= two_pi) angle = 0.0;
  return angle;
}

NodeLayout place_nodes(int count, double region_width, double region_height,
                       double omni_range, std::uint64_t seed) {
  if (count < 1)
    throw std::invalid_argument("place_nodes: count must be at least 1");
  if (!(region_width > 0.0) || !(region_height > 0.0))
    throw std::invalid_argument("place_nodes: region dimensions must be positive");
  if (!(omni_range > 0.0))
    throw std::invalid_argument("place_nodes: omni_range must be positive");

  NodeLayout layout;
  layout.region_width = region_width;
  layout.region_height = region_height;
  layout.omni_range = omni_range;
  layout.seed = seed;
  layout.positions.reserve(count);

  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    double x = rng.uniform(0.0, region_width);
    double y = rng.uniform(0.0, region_height);
    layout.positions.push_back({x, y});
  }
  return layout;
}

double euclidean_diameter(const NodeLayout& layout) {
  const int n = layout.node_count();
  if (n < 2)
    throw std::invalid_argument("euclidean_diameter: need at least 2 nodes");
  double best = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      best = std::max(best, distance(layout.positions[i], layout.positions[j]));
  return best;
}

void write_layout(std::ostream& out, const NodeLayout& layout) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d %.6f %.6f %.6f %llu\n",
                layout.node_count(), layout.region_width,
                layout.region_height, layout.omni_range,
                static_cast<unsigned long long>(layout.seed));
  out << buf;
  for (int i = 0; i < layout.node_count(); ++i) {
    std::snprintf(buf, sizeof buf, "%d %.6f %.6f\n", i,
                  layout.positions[i].x, layout.positions[i].y);
    out << buf;
  }
}

NodeLayout read_layout(std::istream& in) {
  NodeLayout layout;
  int count = 0;
  unsigned long long seed = 0;
  if (!(in >> count >> layout.region_width >> layout.region_height >>
        layout.omni_range >> seed))
    throw std::invalid_argument("layout file: malformed header");
  layout.seed = seed;
  if (count < 1 || !(layout.region_width > 0.0) ||
      !(layout.region_height > 0.0) || !(layout.omni_range > 0.0))
    throw std::invalid_argument("layout file: header values out of range");

  layout.positions.resize(count);
  for (int i = 0; i < count; ++i) {
    int id = 0;
    Point p;
    if (!(in >> id >> p.x >> p.y))
      throw std::invalid_argument("layout file: truncated node list");
    if (id != i)
      throw std::invalid_argument("layout file: node ids must run 0..N-1 in order");
    if (p.x < 0.0 || p.x > layout.region_width || p.y < 0.0 ||
        p.y > layout.region_height)
      throw std::invalid_argument("layout file: position outside the region");
    layout.positions[i] = p;
  }
  return layout;
}

}  // namespace smallworld
