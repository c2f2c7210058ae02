#include <jvoa/closed_form.hpp>

#include <algorithm>

namespace jvoa {

void PairSequence::validate() const
{
    for (const auto& [a, b] : pairs)
        if (a.size() != static_cast<std::size_t>(space.dim) ||
            b.size() != static_cast<std::size_t>(space.dim))
            throw std::invalid_argument("pair vector dimension mismatch");
}

PairSequence virasoro_sequence(int n)
{
    PairSequence T{BilinearSpace::orthonormal(1), {}};
    Vec e = basis_vector(1, 0);
    for (int i = 0; i < n; ++i)
        T.pairs.push_back({e, e});
    return T;
}

Rational gamma_sigma_T(const Derangement& sigma, const PairSequence& T)
{
    if (sigma.n() != T.n())
        throw std::invalid_argument("derangement/sequence length mismatch");
    T.validate();
    Rational out = pow2(-sigma.cycle_count() - T.n());
    for (const auto& cycle : sigma.cycles) {
        TensorElement prod =
            jordan_generator(T.pairs[cycle[0] - 1].first, T.pairs[cycle[0] - 1].second);
        for (std::size_t k = 1; k < cycle.size(); ++k)
            prod = tensor_product(
                prod,
                jordan_generator(T.pairs[cycle[k] - 1].first, T.pairs[cycle[k] - 1].second),
                T.space);
        out *= trace(prod, T.space);
    }
    return out;
}

namespace {

std::vector<SqDiffFactor> merge_factors(std::vector<SqDiffFactor> factors)
{
    std::sort(factors.begin(), factors.end());
    std::vector<SqDiffFactor> out;
    for (const auto& f : factors) {
        if (!out.empty() && out.back().left == f.left && out.back().right == f.right)
            out.back().mult += f.mult;
        else
            out.push_back(f);
    }
    return out;
}

SqDiffFactor make_factor(VarTag a, VarTag b)
{
    if (b < a)
        std::swap(a, b);
    return SqDiffFactor{a, b, 1};
}

} // namespace

std::vector<CorrelatorTerm> theorem1_terms(const PairSequence& T)
{
    T.validate();
    const int n = T.n();
    auto sigmas = enumerate_derangements(n);
    std::sort(sigmas.begin(), sigmas.end(), [](const Derangement& x, const Derangement& y) {
        auto tx = x.cycle_type(), ty = y.cycle_type();
        if (tx != ty)
            return tx < ty;
        return x.cycle_notation() < y.cycle_notation();
    });
    std::vector<CorrelatorTerm> out;
    for (const auto& sigma : sigmas) {
        Rational g = gamma_sigma_T(sigma, T);
        if (g == 0)
            continue;
        CorrelatorTerm term;
        term.coeff = CentralPoly::r_power(sigma.cycle_count(), g);
        std::vector<SqDiffFactor> factors;
        for (int i = 1; i <= n; ++i)
            factors.push_back(make_factor({i, 'z'}, {sigma.apply(i), 'z'}));
        term.denom = merge_factors(std::move(factors));
        term.cycles = sigma.cycle_notation();
        term.r_power = sigma.cycle_count();
        out.push_back(std::move(term));
    }
    return out;
}

EdgeWeight edge_weight(const Edge& e, const PairSequence& T, EdgeWeightKind kind)
{
    const auto& [u, v] = e;
    if (u.pair == v.pair)
        throw std::invalid_argument("edge joins endpoints of the same pair");
    auto vec = [&](const Endpoint& p) -> const Vec& {
        return p.side == Side::A ? T.pairs[p.pair - 1].first : T.pairs[p.pair - 1].second;
    };
    auto var = [](const Endpoint& p) {
        return VarTag{p.pair, p.side == Side::A ? 'z' : 'w'};
    };
    EdgeWeight w;
    w.factor = make_factor(var(u), var(v));
    w.coeff = kind == EdgeWeightKind::K
                  ? Rational(1)
                  : Rational(1, 2) * pairing(vec(u), vec(v), T.space);
    return w;
}

std::vector<CorrelatorTerm> prop2_terms(const PairSequence& T)
{
    T.validate();
    const int n = T.n();
    std::vector<CorrelatorTerm> out;
    if (n == 0) {
        // R(empty; Z, W) = 1
        out.push_back(CorrelatorTerm{CentralPoly(Rational(1)), {}, "()", 0});
        return out;
    }
    for (const auto& D : enumerate_diagrams(n)) {
        Rational gamma_d = pow2(-n); // the 1/2 of each Q(e) factored out
        std::vector<SqDiffFactor> factors;
        for (const auto& e : D.edges) {
            EdgeWeight q = edge_weight(e, T, EdgeWeightKind::Q);
            gamma_d *= q.coeff * 2; // (u,v) per edge
            factors.push_back(q.factor);
        }
        if (gamma_d == 0)
            continue;
        Derangement sigma = diagram_to_derangement(D);
        CorrelatorTerm term;
        term.coeff = CentralPoly::r_power(sigma.cycle_count(), gamma_d);
        term.denom = merge_factors(std::move(factors));
        term.cycles = sigma.cycle_notation();
        term.r_power = sigma.cycle_count();
        out.push_back(std::move(term));
    }
    return out;
}

CentralPoly evaluate_terms(const std::vector<CorrelatorTerm>& terms,
                           const std::map<VarTag, Rational>& assignment)
{
    CentralPoly sum;
    for (const auto& term : terms) {
        Rational denom = 1;
        for (const auto& f : term.denom) {
            auto l = assignment.find(f.left);
            auto r = assignment.find(f.right);
            if (l == assignment.end() || r == assignment.end())
                throw std::invalid_argument("missing value for variable " +
                                            (l == assignment.end() ? f.left : f.right).name());
            Rational diff = l->second - r->second;
            if (diff == 0)
                throw PoleError("pole at evaluation point: " + f.left.name() + " = " +
                                f.right.name());
            for (int k = 0; k < 2 * f.mult; ++k)
                denom *= diff;
        }
        sum += term.coeff * CentralPoly(Rational(1) / denom);
    }
    return sum;
}

long LaurentSeries::norm(const std::vector<long>& exps)
{
    long s = 0;
    for (long e : exps)
        s += e >= 0 ? e : -e;
    return s;
}

std::optional<CentralPoly> LaurentSeries::coeff(const std::vector<long>& exps) const
{
    if (norm(exps) > bound)
        return std::nullopt;
    auto it = coeffs.find(exps);
    return it == coeffs.end() ? CentralPoly() : it->second;
}

namespace {

Rational binom(long top, long k)
{
    Rational out = 1;
    for (long i = 1; i <= k; ++i)
        out *= Rational(top - k + i, i);
    return out;
}

} // namespace

LaurentSeries iota_expand(const std::vector<CorrelatorTerm>& terms,
                          const std::vector<VarTag>& domain, int bound)
{
    LaurentSeries series;
    series.domain = domain;
    series.bound = bound;
    const int nvars = static_cast<int>(domain.size());
    std::map<VarTag, int> pos;
    for (int i = 0; i < nvars; ++i)
        pos[domain[i]] = i;

    for (const auto& term : terms) {
        for (const auto& f : term.denom)
            if (!pos.count(f.left) || !pos.count(f.right))
                throw std::invalid_argument("variable missing from expansion domain");

        // Each factor's series index is bounded by the truncation norm only
        // through the whole product (exponents of a shared variable can
        // cancel along a cycle of factors), so the per-factor cutoff is
        // bound * #factors; the running prune below keeps this cheap.
        const long jmax =
            static_cast<long>(bound) * std::max<std::size_t>(term.denom.size(), 1) + 4;

        // last_factor[v]: index of the last factor touching variable v
        std::vector<int> last_factor(nvars, -1);
        for (std::size_t fi = 0; fi < term.denom.size(); ++fi) {
            last_factor[pos[term.denom[fi].left]] = static_cast<int>(fi);
            last_factor[pos[term.denom[fi].right]] = static_cast<int>(fi);
        }

        std::map<std::vector<long>, Rational> partial;
        partial[std::vector<long>(nvars, 0)] = 1;
        for (std::size_t fi = 0; fi < term.denom.size(); ++fi) {
            const auto& f = term.denom[fi];
            int pl = pos[f.left], pr = pos[f.right];
            int pu = std::min(pl, pr), pv = std::max(pl, pr); // u earlier in domain
            std::map<std::vector<long>, Rational> next;
            for (const auto& [exps, c] : partial) {
                for (long j = 0; j <= jmax; ++j) {
                    std::vector<long> e = exps;
                    e[pu] += -2 * f.mult - j;
                    e[pv] += j;
                    // prune on variables no later factor can still change
                    long fixed_norm = 0;
                    bool keep = true;
                    for (int v = 0; v < nvars; ++v) {
                        if (last_factor[v] <= static_cast<int>(fi)) {
                            fixed_norm += e[v] >= 0 ? e[v] : -e[v];
                            if (fixed_norm > bound) {
                                keep = false;
                                break;
                            }
                        }
                    }
                    if (keep)
                        next[std::move(e)] += c * binom(j + 2 * f.mult - 1, 2 * f.mult - 1);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [exps, c] : partial) {
            if (LaurentSeries::norm(exps) > bound || c == 0)
                continue;
            auto& slot = series.coeffs[exps];
            slot += term.coeff * CentralPoly(c);
            if (slot.is_zero())
                series.coeffs.erase(exps);
        }
    }
    return series;
}

} // namespace jvoa
