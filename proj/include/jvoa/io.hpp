#ifndef JVOA_IO_HPP
#define JVOA_IO_HPP

#include <jvoa/closed_form.hpp>
#include <jvoa/combinatorics.hpp>

#include <json.hpp>

namespace jvoa {

using nlohmann::json;

json rational_to_json(const Rational& q);           // "p/q" string
json poly_to_json(const CentralPoly& p);            // array, lowest power first
Rational rational_from_json(const json& j);
CentralPoly poly_from_json(const json& j);

/// Input schema {"dim": d, "gram": [[..]], "pairs": [[a,b],..]}; the
/// shorthand {"n": N} loads the d=1 Virasoro data with N pairs.
PairSequence pair_sequence_from_json(const json& j);

json term_to_json(const CorrelatorTerm& t);
json terms_to_json(const std::vector<CorrelatorTerm>& terms);
std::string term_to_text(const CorrelatorTerm& t);

json diagram_to_json(const Diagram& D);   // sorted edge list [["a1","b2"],..]
json derangement_to_json(const Derangement& s);
json series_to_json(const LaurentSeries& s);

} // namespace jvoa

#endif
