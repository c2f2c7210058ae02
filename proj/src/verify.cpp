#include <jvoa/verify.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace jvoa {

long RandomSource::integer(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational RandomSource::rational(long max_abs_num, long max_den)
{
    return Rational(integer(-max_abs_num, max_abs_num)) / Rational(integer(1, max_den));
}

Rational RandomSource::nonzero_rational(long max_abs_num, long max_den)
{
    for (;;) {
        Rational q = rational(max_abs_num, max_den);
        if (q != 0)
            return q;
    }
}

Vec RandomSource::vector(int dim)
{
    Vec v(dim);
    for (auto& x : v)
        x = rational();
    return v;
}

BilinearSpace RandomSource::space(int dim)
{
    for (;;) {
        Mat g(dim, Vec(dim));
        for (int i = 0; i < dim; ++i) {
            g[i][i] = rational();
            for (int j = i + 1; j < dim; ++j)
                g[i][j] = g[j][i] = rational();
        }
        if (mat_det(g) != 0)
            return BilinearSpace(dim, std::move(g));
    }
}

PairSequence RandomSource::pair_sequence(int n, int dim)
{
    PairSequence T{space(dim), {}};
    for (int i = 0; i < n; ++i) {
        // Nonzero vectors so the dataset genuinely exercises all traces.
        Vec a, b;
        do {
            a = vector(dim);
        } while (std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; }));
        do {
            b = vector(dim);
        } while (std::all_of(b.begin(), b.end(), [](const Rational& q) { return q == 0; }));
        T.pairs.push_back({std::move(a), std::move(b)});
    }
    return T;
}

std::vector<Rational> RandomSource::distinct_rationals(int count)
{
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational q = rational(50, 7);
        if (std::find(out.begin(), out.end(), q) == out.end())
            out.push_back(q);
    }
    return out;
}

void VerifyReport::merge(const VerifyReport& o)
{
    cases += o.cases;
    if (ok && !o.ok) {
        ok = false;
        first_mismatch = o.first_mismatch;
    }
}

namespace {

void tuples_rec(int nvars, int idx, long total_left, long budget_left,
                std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (idx == nvars) {
        if (total_left == 0)
            out.push_back(cur);
        return;
    }
    long abs_total = total_left >= 0 ? total_left : -total_left;
    if (abs_total > budget_left)
        return; // remaining variables cannot reach the required sum
    for (long e = -budget_left; e <= budget_left; ++e) {
        long a = e >= 0 ? e : -e;
        cur[idx] = e;
        tuples_rec(nvars, idx + 1, total_left - e, budget_left - a, cur, out);
    }
    cur[idx] = 0;
}

std::string tuple_str(const std::vector<long>& exps)
{
    std::string s = "(";
    for (std::size_t i = 0; i < exps.size(); ++i)
        s += (i ? "," : "") + std::to_string(exps[i]);
    return s + ")";
}

} // namespace

std::vector<std::vector<long>> exponent_tuples(int nvars, long total, int bound)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur(nvars, 0);
    if (nvars == 0) {
        if (total == 0)
            out.push_back(cur);
        return out;
    }
    tuples_rec(nvars, 0, total, bound, cur, out);
    return out;
}

VerifyReport verify_prop2_oracle(const PairSequence& T, int bound, bool corrupt)
{
    const int n = T.n();
    std::vector<VarTag> domain;
    for (int i = 1; i <= n; ++i) {
        domain.push_back({i, 'z'});
        domain.push_back({i, 'w'});
    }
    auto terms = prop2_terms(T);
    if (corrupt && !terms.empty())
        terms.front().coeff *= CentralPoly(Rational(2));
    LaurentSeries series = iota_expand(terms, domain, bound);

    VerifyReport report;
    for (const auto& exps : exponent_tuples(2 * n, -2 * n, bound)) {
        std::vector<std::pair<long, long>> modes(n);
        for (int i = 0; i < n; ++i)
            modes[i] = {-exps[2 * i] - 1, -exps[2 * i + 1] - 1};
        CentralPoly oracle = mode_correlator(T, modes);
        CentralPoly closed = series.coeff(exps).value();
        ++report.cases;
        if (report.ok && !(oracle == closed)) {
            report.ok = false;
            report.first_mismatch = "coefficient at " + tuple_str(exps) + ": closed form " +
                                    closed.str() + " vs oracle " + oracle.str();
        }
    }
    return report;
}

VerifyReport verify_theorem1_oracle(const PairSequence& T, int bound, bool corrupt)
{
    const int n = T.n();
    std::vector<VarTag> domain;
    for (int i = 1; i <= n; ++i)
        domain.push_back({i, 'z'});
    auto terms = theorem1_terms(T);
    if (corrupt && !terms.empty())
        terms.front().coeff *= CentralPoly(Rational(2));
    LaurentSeries series = iota_expand(terms, domain, bound);

    VerifyReport report;
    for (const auto& exps : exponent_tuples(n, -2 * n, bound)) {
        std::vector<long> ls(n);
        for (int i = 0; i < n; ++i)
            ls[i] = -exps[i] - 1;
        CentralPoly oracle = field_correlator_coeff(T, ls);
        CentralPoly closed = series.coeff(exps).value();
        ++report.cases;
        if (report.ok && !(oracle == closed)) {
            report.ok = false;
            report.first_mismatch = "coefficient at " + tuple_str(exps) + ": closed form " +
                                    closed.str() + " vs oracle " + oracle.str();
        }
    }
    return report;
}

VerifyReport verify_fibres(int n)
{
    VerifyReport report;
    auto diagrams = enumerate_diagrams(n);
    if (n < 2) {
        ++report.cases;
        std::size_t expected = n == 0 ? 1 : 0;
        if (diagrams.size() != expected) {
            report.ok = false;
            report.first_mismatch = "diagram count at n=" + std::to_string(n);
        }
        return report;
    }
    std::map<std::string, long> by_sigma;
    for (const auto& D : diagrams)
        ++by_sigma[diagram_to_derangement(D).cycle_notation()];
    long covered = 0;
    for (const auto& sigma : enumerate_derangements(n)) {
        ++report.cases;
        long expected = 1L << (n - sigma.cycle_count());
        auto it = by_sigma.find(sigma.cycle_notation());
        long got = it == by_sigma.end() ? 0 : it->second;
        covered += got;
        if (report.ok && got != expected) {
            report.ok = false;
            report.first_mismatch = "fibre of " + sigma.cycle_notation() + " has " +
                                    std::to_string(got) + " diagrams, expected " +
                                    std::to_string(expected);
        }
    }
    ++report.cases;
    if (report.ok && covered != static_cast<long>(diagrams.size())) {
        report.ok = false;
        report.first_mismatch = "contraction image misses diagrams";
    }
    return report;
}

VerifyReport verify_sign_partition(int n)
{
    VerifyReport report;
    auto diagrams = enumerate_diagrams(n);
    std::map<std::vector<std::pair<char, char>>, std::vector<Diagram>> groups;
    for (const auto& D : diagrams)
        groups[induced_sign(D).signs].push_back(D);
    long total = 0;
    for (const auto& [signs, members] : groups) {
        ++report.cases;
        total += static_cast<long>(members.size());
        auto got = diagrams_for_sign(n, SignAssignment{signs});
        if (report.ok && got != members) {
            report.ok = false;
            report.first_mismatch = "diagrams_for_sign disagrees with induced signs";
        }
    }
    ++report.cases;
    if (report.ok && total != static_cast<long>(diagrams.size())) {
        report.ok = false;
        report.first_mismatch = "sign classes do not partition the diagram set";
    }
    return report;
}

} // namespace jvoa
