#ifndef HUMBERT_SAMPLING_HPP
#define HUMBERT_SAMPLING_HPP

#include <random>

#include "humbert/torus.hpp"

namespace humbert {

// Deterministic sampler for random exact inputs. Uses raw mt19937_64 draws
// with modular reduction, never std distributions, so a seed produces the
// same stream on every platform.
class SiegelSampler {
public:
    explicit SiegelSampler(unsigned long long seed) : rng(seed) {}

    std::mt19937_64 rng;

    // numerator in [-h, h], denominator in [1, h]
    mpq_class random_rational(long h);

    // symmetric matrix with entries of height <= h and strictly diagonally
    // dominant imaginary part, hence in Siegel space; requires h >= 3
    SiegelMatrix random_siegel(int dim, long h);

    // divisor chain of length k with every d_i <= dmax
    PolarizationType random_type(int k, long dmax);

private:
    long draw(long lo, long hi); // uniform-ish in [lo, hi]
};

} // namespace humbert

#endif
