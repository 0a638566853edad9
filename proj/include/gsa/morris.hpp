#ifndef GSA_MORRIS_HPP
#define GSA_MORRIS_HPP

#include <cstdint>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

/// Randomized one-factor-at-a-time trajectory design on the k-level grid
/// {0, 1/(k-1), ..., 1}^p. Each trajectory holds p+1 rows; consecutive rows
/// differ in exactly one coordinate by +/- delta.
struct MorrisDesign {
  std::size_t p = 0;
  std::size_t k = 0;           // grid levels
  std::size_t delta_mult = 0;  // delta = delta_mult/(k-1)
  std::size_t r = 0;           // trajectory count
  std::uint64_t seed = 0;
  Matrix x;                    // r(p+1) x p

  // Provenance: for row j > start of its trajectory, which input moved
  // between rows j-1 and j and in which direction.
  std::vector<std::size_t> trajectory_id;   // per row
  std::vector<int> perturbed_input;         // per row; -1 for trajectory starts
  std::vector<int> step_sign;               // +1/-1; 0 for trajectory starts

  double delta() const {
    return static_cast<double>(delta_mult) / static_cast<double>(k - 1);
  }
  std::size_t rows_per_trajectory() const { return p + 1; }
};

struct MorrisResult {
  std::vector<double> mean;      // signed mean of elementary effects
  std::vector<double> mean_abs;  // mu*
  std::vector<double> stddev;
  std::vector<double> sem;       // stddev / sqrt(r)
  std::size_t r = 0;
  // Raw elementary effects, [input][trajectory].
  std::vector<std::vector<double>> effects;
};

MorrisDesign morris_design(std::size_t p, std::size_t k, std::size_t delta_mult,
                           std::size_t r, std::uint64_t seed);

/// One elementary effect per (trajectory, input), sign resolved from the
/// actual step direction. Needs r >= 2 for the spread estimates.
MorrisResult morris_analyze(const MorrisDesign& design,
                            const std::vector<double>& y);

}  // namespace gsa

#endif
