#ifndef GSA_SAMPLING_HPP
#define GSA_SAMPLING_HPP

#include <cstdint>

#include "gsa/dists.hpp"
#include "gsa/matrix.hpp"

namespace gsa {

enum class SampleScheme { Iid, Lhs };

/// Draw n points from the input space. Identical (space, n, seed, scheme)
/// arguments produce bit-identical matrices. LHS places exactly one point
/// per equal-probability stratum per column; it requires independent inputs.
Matrix sample(const InputSpace& space, std::size_t n, std::uint64_t seed,
              SampleScheme scheme = SampleScheme::Iid);

SampleScheme parse_scheme(const std::string& s);

}  // namespace gsa

#endif
