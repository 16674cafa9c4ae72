#include "humbert/polarization.hpp"

#include <sstream>

namespace humbert {

PolarizationType PolarizationType::parse(const std::string& s) {
    std::vector<mpz_class> d;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        check(!cur.empty(), "InvalidType", "empty divisor in type string");
        for (char c : cur)
            check(c >= '0' && c <= '9', "InvalidType", "type divisors must be decimal integers");
        d.emplace_back(cur);
    }
    check(!d.empty() || s.empty(), "InvalidType", "unparseable type string");
    return PolarizationType(d);
}

std::string PolarizationType::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < d_.size(); ++i) os << (i ? "," : "") << d_[i];
    return os.str();
}

} // namespace humbert
