#ifndef GSA_FAST_HPP
#define GSA_FAST_HPP

#include <cstdint>

#include "gsa/model.hpp"
#include "gsa/sobol.hpp"

namespace gsa {

/// Extended FAST on independent inputs. One search curve per input: the
/// driver input gets the maximum frequency (n-1)/(2M) and the remaining
/// inputs low frequencies by the Saltelli (1999) spacing rule; the curve
/// maps phase through each marginal's quantile function. First-order
/// indices read spectrum power at the driver's first M harmonics, totals
/// read the complement band strictly below half the driver frequency.
/// Requires n_per_input >= 4 M^2 + 2.
SobolResult fast_indices(const Model& model, const InputSpace& space,
                         std::size_t n_per_input, std::size_t interference_order,
                         std::uint64_t seed = 0);

}  // namespace gsa

#endif
