#ifndef HUMBERT_POLARIZATION_HPP
#define HUMBERT_POLARIZATION_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "humbert/error.hpp"
#include "humbert/matrix.hpp"

namespace humbert {

// Divisor chain (d_1 | d_2 | ... | d_k) of positive integers.
class PolarizationType {
public:
    PolarizationType() = default;

    explicit PolarizationType(std::vector<mpz_class> d) : d_(std::move(d)) {
        for (size_t i = 0; i < d_.size(); ++i) {
            check(d_[i] >= 1, "InvalidType", "polarization divisors must be positive");
            if (i + 1 < d_.size())
                check(d_[i + 1] % d_[i] == 0, "InvalidType",
                      "polarization divisors must form a chain d_i | d_{i+1}");
        }
    }

    static PolarizationType ones(int n) {
        return PolarizationType(std::vector<mpz_class>(n, mpz_class(1)));
    }

    static PolarizationType parse(const std::string& s);

    int length() const { return int(d_.size()); }
    const std::vector<mpz_class>& divisors() const { return d_; }
    const mpz_class& divisor(int i) const { return d_[i]; }

    mpz_class product() const {
        mpz_class p = 1;
        for (const auto& d : d_) p *= d;
        return p;
    }

    // Largest elementary divisor; 1 for the empty chain.
    mpz_class exponent() const { return d_.empty() ? mpz_class(1) : d_.back(); }

    bool is_principal() const {
        for (const auto& d : d_)
            if (d != 1) return false;
        return true;
    }

    // The divisors bigger than 1.
    std::vector<mpz_class> nontrivial() const {
        std::vector<mpz_class> r;
        for (const auto& d : d_)
            if (d > 1) r.push_back(d);
        return r;
    }

    IntMat diagonal() const {
        IntMat m(length(), length());
        for (int i = 0; i < length(); ++i) m(i, i) = d_[i];
        return m;
    }

    std::string str() const;

    bool operator==(const PolarizationType& o) const { return d_ == o.d_; }
    bool operator!=(const PolarizationType& o) const { return d_ != o.d_; }

private:
    std::vector<mpz_class> d_;
};

} // namespace humbert

#endif
