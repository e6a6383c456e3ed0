///////////////////////////////////////////////////////////////////////////////
// sampling.hpp
//
// Halton low-discrepancy sequence used for interior sampling and QMC
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <cstdint>
#include <vector>

namespace qd {

/// Halton sequence in [0,1)^dim. The seed offsets the start index so distinct
/// seeds give distinct (still deterministic) streams.
class Halton {
  public:
    explicit Halton(int dim, std::uint64_t seed = 0);

    /// next point, components in [0,1)
    std::vector<double> next();

    int dim() const { return dim_; }

  private:
    int dim_;
    std::uint64_t index_;
};

double halton_radical_inverse(std::uint64_t index, int base);

} // namespace qd
