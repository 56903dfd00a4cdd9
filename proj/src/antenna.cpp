#include "smallworld/antenna.hpp"

#include <cmath>
#include <stdexcept>

namespace smallworld {

double sector_beam_length(double width, double omni_range) {
  if (!(width > 0.0) || width > two_pi)
    throw std::invalid_argument("sector_beam_length: width must lie in (0, 2*pi]");
  if (!(omni_range > 0.0))
    throw std::invalid_argument("sector_beam_length: omni_range must be positive");
  return omni_range * std::sqrt(two_pi / width);
}

std::pair<double, double> region_presence_probs(int length_multiple,
                                                int neighborhood_size,
                                                double omni_range) {
  if (length_multiple < 1)
    throw std::invalid_argument("region_presence_probs: length_multiple must be at least 1");
  if (neighborhood_size < 0)
    throw std::invalid_argument("region_presence_probs: neighborhood_size must be nonnegative");
  if (!(omni_range > 0.0))
    throw std::invalid_argument("region_presence_probs: omni_range must be positive");

  const double k = length_multiple;
  // Band areas over the footprint pi*r^2: the innermost band holds 1/k^2 of
  // it, the outermost (2k-1)/k^2.
  const double first_share = 1.0 / (k * k);
  const double last_share = (2.0 * k - 1.0) / (k * k);
  const int n = neighborhood_size;
  double p_first = 1.0 - std::pow(1.0 - first_share, n);
  double p_last = 1.0 - std::pow(1.0 - last_share, n);
  return {p_first, p_last};
}

BeamwidthChoice optimize_beamwidth(int neighborhood_size, int max_multiple,
                                   double omni_range) {
  if (max_multiple < 1)
    throw std::invalid_argument("optimize_beamwidth: max_multiple must be at least 1");
  if (neighborhood_size < 0)
    throw std::invalid_argument("optimize_beamwidth: neighborhood_size must be nonnegative");
  if (!(omni_range > 0.0))
    throw std::invalid_argument("optimize_beamwidth: omni_range must be positive");

  BeamwidthChoice best;
  bool have = false;
  for (int k = 1; k <= max_multiple; ++k) {
    BeamwidthChoice c;
    c.width = two_pi / static_cast<double>(k) / static_cast<double>(k);
    c.length_multiple = k;
    auto [pf, pl] = region_presence_probs(k, neighborhood_size, omni_range);
    c.prob_first_band = pf;
    c.prob_last_band = pl;
    c.weighted_length = sector_beam_length(c.width, omni_range) * pf * pl;
    // strict > keeps the smaller multiple on ties
    if (!have || c.weighted_length > best.weighted_length) {
      best = c;
      have = true;
    }
  }
  return best;
}

bool sector_covers(const Point& origin, const SectorBeam& beam,
                   const Point& target) {
  if (origin.x == target.x && origin.y == target.y)
    throw std::invalid_argument("sector_covers: origin and target coincide");
  if (distance(origin, target) > beam.length) return false;
  double off = std::remainder(bearing(origin, target) - beam.boresight, two_pi);
  return std::fabs(off) <= 0.5 * beam.width;
}

UlaBeam make_ula_beam(double boresight, int elements, double omni_range,
                      double pathloss_exponent) {
  if (elements < 1)
    throw std::invalid_argument("make_ula_beam: elements must be at least 1");
  if (!(omni_range > 0.0))
    throw std::invalid_argument("make_ula_beam: omni_range must be positive");
  if (!(pathloss_exponent > 0.0))
    throw std::invalid_argument("make_ula_beam: pathloss_exponent must be positive");
  UlaBeam beam;
  beam.boresight = boresight;
  beam.elements = elements;
  beam.pathloss_exponent = pathloss_exponent;
  beam.tx_power = 1.0;
  // one element at exactly omni_range sits right on the decode threshold
  beam.rx_threshold = 1.0 / std::pow(omni_range, pathloss_exponent);
  return beam;
}

double ula_gain(int elements, double boresight, double direction) {
  if (elements < 1)
    throw std::invalid_argument("ula_gain: elements must be at least 1");
  const double m = elements;
  double psi = pi * (std::cos(direction) - std::cos(boresight));
  double half_sin = std::sin(0.5 * psi);
  double factor;
  if (std::fabs(half_sin) < 1e-9)
    factor = 1.0;  // removable singularity at the lobe peaks
  else
    factor = std::sin(0.5 * m * psi) / (m * half_sin);
  return m * factor * factor;
}

bool ula_covers(const Point& origin, const UlaBeam& beam, const Point& target,
                double omni_range) {
  if (origin.x == target.x && origin.y == target.y)
    throw std::invalid_argument("ula_covers: origin and target coincide");
  double gain = ula_gain(beam.elements, beam.boresight, bearing(origin, target));
  // Received power tx * gain / s^alpha clears the calibrated threshold
  // exactly when s <= r * gain^(1/alpha).
  double reach = omni_range * std::pow(gain, 1.0 / beam.pathloss_exponent);
  return distance(origin, target) <= reach;
}

int elements_for_beamwidth(const BeamwidthChoice& choice, double omni_range) {
  double reach = sector_beam_length(choice.width, omni_range);
  double ratio = reach / omni_range;
  // the slack keeps an exact integer ratio from ceiling up on rounding noise
  return static_cast<int>(std::ceil(ratio - 1e-9));
}

}  // namespace smallworld
