#pragma once

#include <utility>

#include "smallworld/layout.hpp"

namespace smallworld {

// Pie-slice beam: constant gain inside the slice, nothing outside. Narrowing
// the slice stretches its reach so the covered area stays pi * r^2.
struct SectorBeam {
  double boresight = 0.0;  // [0, 2*pi)
  double width = two_pi;   // radians
  double length = 1.0;     // reach along the boresight
};

// Uniform linear array steered at the boresight, half-wavelength spacing.
// tx_power and rx_threshold are calibrated so a single element reaches
// exactly omni_range.
struct UlaBeam {
  double boresight = 0.0;
  int elements = 1;
  double pathloss_exponent = 2.0;
  double tx_power = 1.0;
  double rx_threshold = 1.0;
};

// Outcome of the beamwidth search: the width whose reach, weighted by the
// chance that both the nearest and the farthest reach band actually contain
// a node, is largest.
struct BeamwidthChoice {
  double width = two_pi;
  int length_multiple = 1;        // reach = length_multiple * omni_range
  double prob_first_band = 1.0;
  double prob_last_band = 1.0;
  double weighted_length = 0.0;
};

// Reach of a sector of the given width holding the covered area at the
// omnidirectional disc's: omni_range * sqrt(2*pi / width).
double sector_beam_length(double width, double omni_range);

// For a sector of width 2*pi/k^2 split into k radial bands of depth
// omni_range, the chance that the first band and the last band each contain
// at least one of `neighborhood_size` nodes scattered uniformly over an
// omnidirectional disc's worth of area.
std::pair<double, double> region_presence_probs(int length_multiple,
                                                int neighborhood_size,
                                                double omni_range);

// Scans length multiples 1..max_multiple and keeps the largest weighted
// reach; ties go to the wider beam.
BeamwidthChoice optimize_beamwidth(int neighborhood_size, int max_multiple,
                                   double omni_range);

bool sector_covers(const Point& origin, const SectorBeam& beam,
                   const Point& target);

UlaBeam make_ula_beam(double boresight, int elements, double omni_range,
                      double pathloss_exponent = 2.0);

// Array power gain toward `direction`: m * (sin(m*psi/2) / (m*sin(psi/2)))^2
// with psi = pi * (cos(direction) - cos(boresight)). Peaks at m on the
// boresight.
double ula_gain(int elements, double boresight, double direction);

bool ula_covers(const Point& origin, const UlaBeam& beam, const Point& target,
                double omni_range);

// Element count whose boresight reach covers the sector choice's reach:
// ceil(reach / omni_range).
int elements_for_beamwidth(const BeamwidthChoice& choice, double omni_range);

}  // namespace smallworld
