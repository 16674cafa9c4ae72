#ifndef HUMBERT_JSON_IO_HPP
#define HUMBERT_JSON_IO_HPP

#include <json.hpp>

#include "humbert/locus.hpp"
#include "humbert/quotient.hpp"
#include "humbert/torus.hpp"

namespace humbert {

using nlohmann::json;

// Exact wire format: rationals are canonical "p/q" strings (or "p" when the
// denominator is 1), integers are decimal strings, complex entries are
// {"re": ..., "im": ...} objects, types are arrays of plain integers.
// parse(emit(x)) == x bit-exactly.

std::string rat_to_string(const mpq_class& q);
mpq_class rat_from_string(const std::string& s); // MalformedInput on bad syntax

// decimal rendering with the given number of fraction digits (round to
// nearest, ties away from zero); only ever emitted next to the exact form
std::string decimal_string(const mpq_class& q, int digits);

json to_json(const IntMat& m);
IntMat int_mat_from_json(const json& j);

json to_json(const RatMat& m);
RatMat rat_mat_from_json(const json& j);

json to_json(const GaussMat& m, int float_digits = 0);
GaussMat gauss_mat_from_json(const json& j);

json to_json(const PolarizationType& t);
PolarizationType type_from_json(const json& j);

json to_json(const CertificateReport& r, int float_digits = 0);
json to_json(const LocusEquationSet& e);
json to_json(const std::vector<SingularRelation>& rels);
json to_json(const QuotientResult& r, int float_digits = 0);

} // namespace humbert

#endif
