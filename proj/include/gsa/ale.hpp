#ifndef GSA_ALE_HPP
#define GSA_ALE_HPP

#include "gsa/effects.hpp"
#include "gsa/model.hpp"

namespace gsa {

/// First-order accumulated local effects (Apley-Zhu). Bin edges come from
/// empirical quantiles of the observed x_i; each sample contributes the
/// finite difference of f between its bin's edges with the other
/// coordinates held at the sample's own values, so no evaluation ever
/// leaves the data cloud. The curve is tabulated at bin edges and centered
/// so that its linear interpolant has mean zero over the sample.
/// Costs exactly 2 * rows(X) model evaluations.
EffectCurve ale_first_order(const Model& model, const Matrix& x,
                            std::size_t input_index, std::size_t bins = 32);

}  // namespace gsa

#endif
