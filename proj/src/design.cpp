#include "gsa/design.hpp"

#include "gsa/errors.hpp"
#include "gsa/sampling.hpp"

namespace gsa {

std::string PickFreezeDesign::block_label(std::size_t r) const {
  std::size_t b = block_of_row(r);
  if (b == 0) return "A";
  if (b == 1) return "B";
  return "AB" + std::to_string(b - 1);
}

PickFreezeDesign pick_freeze_design(const InputSpace& space, std::size_t n,
                                    std::uint64_t seed) {
  if (!space.independent())
    throw PreconditionError(
        "pick-freeze sampling requires independent inputs; use Shapley effects "
        "for dependent inputs");
  if (n < 2) throw ConfigError("pick-freeze design needs n >= 2");

  std::size_t p = space.dim();
  Matrix a = sample(space, n, derive_seed(seed, 1));
  Matrix b = sample(space, n, derive_seed(seed, 2));

  PickFreezeDesign d;
  d.n_base = n;
  d.p = p;
  d.seed = seed;
  d.x = Matrix(n * (p + 2), p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      d.x(i, j) = a(i, j);
      d.x(n + i, j) = b(i, j);
    }
  for (std::size_t k = 0; k < p; ++k) {
    std::size_t off = (2 + k) * n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p; ++j)
        d.x(off + i, j) = j == k ? b(i, j) : a(i, j);
  }
  return d;
}

}  // namespace gsa
