#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqw {

using Complex = std::complex<double>;

// Site handle; sites are dense 0..site_count-1 after graph finalization.
using SiteId = std::int32_t;

// Direction label at a site, 1..valence. Label values are explicit data:
// they identify which incident bond a basis state arrived through.
using DirectionIndex = std::int32_t;

// Basis state of the walk: the unit of amplitude sitting on the bond
// incident to `site` that arrived through the bond labeled `dir`,
// i.e. "incoming to site along direction dir".
struct BondState {
  SiteId site = 0;
  DirectionIndex dir = 1;

  friend bool operator==(const BondState&, const BondState&) = default;
  // canonical order: (site, dir) lexicographic; used everywhere an
  // iteration or matrix index order matters, so results are reproducible.
  friend auto operator<=>(const BondState&, const BondState&) = default;
};

inline std::string to_string(const BondState& s) {
  return std::to_string(s.site) + ":" + std::to_string(s.dir);
}

// Evaluation of a rational generating function at a pole.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, double denominator_magnitude)
      : std::runtime_error(what), denominator_magnitude_(denominator_magnitude) {}
  double denominator_magnitude() const { return denominator_magnitude_; }

 private:
  double denominator_magnitude_;
};

// Symbolic series exceeded its configured term budget. Hard error by design:
// the caller must lower n_max or merge symbols, never receive a silent truncation.
class SeriesCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqw
