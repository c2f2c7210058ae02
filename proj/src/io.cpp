#include <jvoa/io.hpp>

namespace jvoa {

json rational_to_json(const Rational& q)
{
    return to_string(q);
}

json poly_to_json(const CentralPoly& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs())
        out.push_back(to_string(c));
    return out;
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected rational as string or integer");
}

CentralPoly poly_from_json(const json& j)
{
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(rational_from_json(c));
    return CentralPoly(std::move(coeffs));
}

PairSequence pair_sequence_from_json(const json& j)
{
    if (j.contains("n") && !j.contains("pairs"))
        return virasoro_sequence(j.at("n").get<int>());

    int dim = j.at("dim").get<int>();
    Mat gram;
    for (const auto& row : j.at("gram")) {
        Vec r;
        for (const auto& x : row)
            r.push_back(rational_from_json(x));
        gram.push_back(std::move(r));
    }
    PairSequence T{BilinearSpace(dim, std::move(gram)), {}};
    for (const auto& pr : j.at("pairs")) {
        if (pr.size() != 2)
            throw std::invalid_argument("each pair must be [a-coords, b-coords]");
        Vec a, b;
        for (const auto& x : pr[0])
            a.push_back(rational_from_json(x));
        for (const auto& x : pr[1])
            b.push_back(rational_from_json(x));
        T.pairs.push_back({std::move(a), std::move(b)});
    }
    T.validate();
    return T;
}

json term_to_json(const CorrelatorTerm& t)
{
    json denom = json::array();
    for (const auto& f : t.denom)
        denom.push_back({f.left.name(), f.right.name(), 2 * f.mult});
    return {{"cycles", t.cycles},
            {"r_power", t.r_power},
            {"coefficient", poly_to_json(t.coeff)},
            {"denominator", denom}};
}

json terms_to_json(const std::vector<CorrelatorTerm>& terms)
{
    json out = json::array();
    for (const auto& t : terms)
        out.push_back(term_to_json(t));
    return out;
}

std::string term_to_text(const CorrelatorTerm& t)
{
    std::string s = t.cycles + ": (" + t.coeff.str() + ")";
    if (!t.denom.empty()) {
        s += " / [";
        bool first = true;
        for (const auto& f : t.denom) {
            if (!first)
                s += " ";
            first = false;
            s += "(" + f.left.name() + "-" + f.right.name() + ")^" +
                 std::to_string(2 * f.mult);
        }
        s += "]";
    }
    return s;
}

json diagram_to_json(const Diagram& D)
{
    json edges = json::array();
    for (const auto& [u, v] : D.edges)
        edges.push_back({u.name(), v.name()});
    return edges;
}

json derangement_to_json(const Derangement& s)
{
    return {{"image", s.image}, {"cycles", s.cycle_notation()}};
}

json series_to_json(const LaurentSeries& s)
{
    json vars = json::array();
    for (const auto& v : s.domain)
        vars.push_back(v.name());
    json entries = json::array();
    for (const auto& [exps, c] : s.coeffs)
        entries.push_back({{"exponents", exps}, {"coeff", poly_to_json(c)}});
    return {{"domain", vars}, {"bound", s.bound}, {"coefficients", entries}};
}

} // namespace jvoa
