#include "humbert/json_io.hpp"

namespace humbert {

std::string rat_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rat_from_string(const std::string& s) {
    check(!s.empty(), "MalformedInput", "empty rational string");
    size_t pos = (s[0] == '-') ? 1 : 0;
    bool slash_seen = false;
    check(pos < s.size(), "MalformedInput", "bad rational: " + s);
    for (size_t i = pos; i < s.size(); ++i) {
        if (s[i] == '/' && !slash_seen && i > pos && i + 1 < s.size()) {
            slash_seen = true;
            continue;
        }
        check(s[i] >= '0' && s[i] <= '9', "MalformedInput", "bad rational: " + s);
    }
    mpq_class q;
    check(mpq_set_str(q.get_mpq_t(), s.c_str(), 10) == 0, "MalformedInput",
          "bad rational: " + s);
    check(q.get_den() != 0, "MalformedInput", "zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string decimal_string(const mpq_class& q, int digits) {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpq_class scaled = q * mpq_class(scale);
    // round to nearest, ties away from zero
    mpz_class num = scaled.get_num(), den = scaled.get_den();
    mpz_class twice = 2 * num + (num >= 0 ? den : -den);
    mpz_class r;
    mpz_class twoden = 2 * den;
    mpz_tdiv_q(r.get_mpz_t(), twice.get_mpz_t(), twoden.get_mpz_t());
    bool neg = r < 0;
    mpz_class a = abs(r);
    std::string intpart = mpz_class(a / scale).get_str();
    if (digits == 0) return (neg ? "-" : "") + intpart;
    std::string frac = mpz_class(a % scale).get_str();
    frac.insert(frac.begin(), size_t(digits) - frac.size(), '0');
    return (neg ? "-" : "") + intpart + "." + frac;
}

json to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

mpz_class int_from_string(const std::string& s) {
    mpq_class q = rat_from_string(s);
    check(q.get_den() == 1, "MalformedInput", "expected an integer, got " + s);
    return q.get_num();
}

void require_matrix_shape(const json& j) {
    check(j.is_array(), "MalformedInput", "matrix must be an array of rows");
    size_t cols = 0;
    for (size_t i = 0; i < j.size(); ++i) {
        check(j[i].is_array(), "MalformedInput", "matrix row must be an array");
        if (i == 0)
            cols = j[i].size();
        else
            check(j[i].size() == cols, "MalformedInput", "ragged matrix rows");
    }
}

} // namespace

IntMat int_mat_from_json(const json& j) {
    require_matrix_shape(j);
    int rows = int(j.size());
    int cols = rows ? int(j[0].size()) : 0;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            const json& e = j[i][c];
            check(e.is_string(), "MalformedInput", "integer entries must be decimal strings");
            m(i, c) = int_from_string(e.get<std::string>());
        }
    return m;
}

json to_json(const RatMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat rat_mat_from_json(const json& j) {
    require_matrix_shape(j);
    int rows = int(j.size());
    int cols = rows ? int(j[0].size()) : 0;
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            const json& e = j[i][c];
            check(e.is_string(), "MalformedInput", "rational entries must be strings");
            m(i, c) = rat_from_string(e.get<std::string>());
        }
    return m;
}

json to_json(const GaussMat& m, int float_digits) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            json e;
            e["re"] = rat_to_string(m(i, j).re);
            e["im"] = rat_to_string(m(i, j).im);
            if (float_digits > 0) {
                e["re_dec"] = decimal_string(m(i, j).re, float_digits);
                e["im_dec"] = decimal_string(m(i, j).im, float_digits);
            }
            row.push_back(std::move(e));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

GaussMat gauss_mat_from_json(const json& j) {
    require_matrix_shape(j);
    int rows = int(j.size());
    int cols = rows ? int(j[0].size()) : 0;
    GaussMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) {
            const json& e = j[i][c];
            check(e.is_object() && e.contains("re") && e.contains("im"), "MalformedInput",
                  "complex entries must be {\"re\", \"im\"} objects");
            check(e["re"].is_string() && e["im"].is_string(), "MalformedInput",
                  "complex parts must be rational strings");
            m(i, c) = GaussianRational(rat_from_string(e["re"].get<std::string>()),
                                       rat_from_string(e["im"].get<std::string>()));
        }
    return m;
}

json to_json(const PolarizationType& t) {
    json a = json::array();
    for (const auto& d : t.divisors()) {
        check(d.fits_slong_p(), "MalformedInput", "divisor too large for the wire format");
        a.push_back(d.get_si());
    }
    return a;
}

PolarizationType type_from_json(const json& j) {
    check(j.is_array(), "MalformedInput", "type must be an array of integers");
    std::vector<mpz_class> d;
    for (const auto& e : j) {
        check(e.is_number_integer(), "MalformedInput", "type entries must be integers");
        d.emplace_back(e.get<long>());
    }
    return PolarizationType(d);
}

json to_json(const CertificateReport& r, int float_digits) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    json out;
    out["passed"] = r.passed;
    out["checks"] = std::move(checks);
    if (r.computed_type) out["type"] = to_json(*r.computed_type);
    out["restricted_gram"] = to_json(r.restricted_gram);
    out["image"] = to_json(r.image, float_digits);
    return out;
}

json to_json(const LocusEquationSet& e) {
    json prop = json::array();
    for (const auto& p : e.proportionality) {
        check(p.d.fits_slong_p(), "MalformedInput", "divisor too large for the wire format");
        prop.push_back(json::array({p.i, p.j, p.d.get_si()}));
    }
    json van = json::array();
    for (const auto& v : e.vanishing) van.push_back(json::array({v.i, v.j}));
    json out;
    out["proportionality"] = std::move(prop);
    out["vanishing"] = std::move(van);
    return out;
}

json to_json(const std::vector<SingularRelation>& rels) {
    json out = json::array();
    for (const auto& r : rels) {
        json e;
        json tuple = json::array();
        for (const auto& x : r.rel) {
            check(x.fits_slong_p(), "MalformedInput", "relation entry too large");
            tuple.push_back(x.get_si());
        }
        check(r.delta.fits_slong_p(), "MalformedInput", "discriminant too large");
        e["rel"] = std::move(tuple);
        e["delta"] = r.delta.get_si();
        out.push_back(std::move(e));
    }
    return out;
}

json to_json(const QuotientResult& r, int float_digits) {
    json out;
    out["z_prime"] = to_json(r.Z_prime.mat(), float_digits);
    out["basis_change"] = to_json(r.basis_change);
    out["induced_type"] = to_json(r.induced_type);
    out["m_coords"] = to_json(r.m_coords);
    out["n_coords"] = to_json(r.n_coords);
    return out;
}

} // namespace humbert
