#ifndef GSA_DESIGN_HPP
#define GSA_DESIGN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gsa/dists.hpp"
#include "gsa/matrix.hpp"

namespace gsa {

/// Pick-freeze run plan: base block A, shadow block B, and one hybrid block
/// per input where A's column i is replaced by B's. Row order is
/// [A; B; A_B^(1); ...; A_B^(p)], n rows per block.
struct PickFreezeDesign {
  Matrix x;               // n(p+2) rows
  std::size_t n_base = 0;
  std::size_t p = 0;
  std::uint64_t seed = 0;

  // Block of a row: 0 = A, 1 = B, 2+i = hybrid for input i.
  std::size_t block_of_row(std::size_t r) const { return r / n_base; }
  std::string block_label(std::size_t r) const;

  std::size_t rows() const { return x.rows(); }
};

PickFreezeDesign pick_freeze_design(const InputSpace& space, std::size_t n,
                                    std::uint64_t seed);

}  // namespace gsa

#endif
