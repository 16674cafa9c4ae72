#include "humbert/sampling.hpp"

namespace humbert {

long SiegelSampler::draw(long lo, long hi) { return lo + long(rng() % (unsigned long long)(hi - lo + 1)); }

mpq_class SiegelSampler::random_rational(long h) {
    mpq_class q(draw(-h, h), draw(1, h));
    q.canonicalize();
    return q;
}

SiegelMatrix SiegelSampler::random_siegel(int dim, long h) {
    check(h >= 3, "InvalidHeight", "sampler needs height >= 3");
    GaussMat z(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            mpq_class re = random_rational(h);
            z(i, j).re = re;
            z(j, i).re = re;
        }
    // diagonal imaginary parts are rationals in (2, h], off-diagonal ones
    // +-1/den with den > dim, so rows are strictly diagonally dominant
    for (int i = 0; i < dim; ++i) {
        long den = draw(1, 3);
        mpq_class im(draw(2 * den + 1, std::max(h, 2 * den + 1)), den);
        im.canonicalize();
        z(i, i).im = im;
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            long den = draw(dim + 1, std::max<long>(dim + 2, h));
            mpq_class im(draw(0, 1) ? 1 : -1, den);
            im.canonicalize();
            z(i, j).im = im;
            z(j, i).im = im;
        }
    return SiegelMatrix(z);
}

PolarizationType SiegelSampler::random_type(int k, long dmax) {
    std::vector<mpz_class> d;
    mpz_class cur = draw(1, dmax);
    for (int i = 0; i < k; ++i) {
        if (i > 0) {
            std::vector<long> mult;
            for (long f = 1; cur * f <= dmax; ++f) mult.push_back(f);
            cur *= mult[size_t(draw(0, long(mult.size()) - 1))];
        }
        d.push_back(cur);
    }
    return PolarizationType(d);
}

} // namespace humbert
