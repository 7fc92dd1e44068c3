#include "bquant/weight.hpp"

#include "bquant/errors.hpp"

namespace bquant {

namespace {
void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw DimensionError("weight ranks differ: " + std::to_string(a.rank()) + " vs " +
                         std::to_string(b.rank()));
}
}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  return Weight(IntVector(a.coords_ + b.coords_));
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  return Weight(IntVector(a.coords_ - b.coords_));
}

Weight operator-(const Weight& a) { return Weight(IntVector(-a.coords_)); }

}  // namespace bquant
