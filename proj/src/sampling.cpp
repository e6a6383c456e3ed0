#include "qd/sampling.hpp"

#include <stdexcept>

namespace qd {

static const int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

double halton_radical_inverse(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

Halton::Halton(int dim, std::uint64_t seed) : dim_(dim), index_(seed * 7919 + 1) {
    if (dim < 1 || dim > 12) throw std::invalid_argument("Halton: dim out of range");
}

std::vector<double> Halton::next() {
    std::vector<double> p(dim_);
    for (int i = 0; i < dim_; ++i) p[i] = halton_radical_inverse(index_, kPrimes[i]);
    ++index_;
    return p;
}

} // namespace qd
