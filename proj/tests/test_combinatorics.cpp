#include <jvoa/combinatorics.hpp>
#include <jvoa/verify.hpp>

#include <doctest.h>
#include <algorithm>
#include <numeric>
#include <set>

using namespace jvoa;

namespace {

// Independent oracle: filter all n! permutations for fixed points.
long brute_force_derangement_count(int n)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        bool fp = false;
        for (int i = 0; i < n; ++i)
            if (perm[i] == i + 1)
                fp = true;
        if (!fp)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Independent oracle: all perfect matchings on 2n points, then discard
// those with a within-pair edge.
long brute_force_diagram_count(int n)
{
    std::vector<int> points(2 * n);
    std::iota(points.begin(), points.end(), 0);
    long count = 0;
    auto rec = [&](auto&& self, std::vector<int> left) -> void {
        if (left.empty()) {
            ++count;
            return;
        }
        int u = left[0];
        for (std::size_t k = 1; k < left.size(); ++k) {
            int v = left[k];
            if (u / 2 == v / 2)
                continue;
            std::vector<int> rest;
            for (std::size_t t = 1; t < left.size(); ++t)
                if (t != k)
                    rest.push_back(left[t]);
            self(self, std::move(rest));
        }
    };
    rec(rec, points);
    return count;
}

Diagram make_diagram(int n, std::initializer_list<std::pair<const char*, const char*>> edges)
{
    auto parse = [](const char* s) {
        return Endpoint{std::atoi(s + 1), s[0] == 'a' ? Side::A : Side::B};
    };
    Diagram D{n, {}};
    for (auto [u, v] : edges) {
        Endpoint pu = parse(u), pv = parse(v);
        if (pv < pu)
            std::swap(pu, pv);
        D.edges.push_back({pu, pv});
    }
    std::sort(D.edges.begin(), D.edges.end());
    return D;
}

} // namespace

TEST_CASE("derangement construction and cycle decomposition")
{
    auto d = Derangement::from_image({2, 1, 5, 3, 6, 4});
    CHECK(d.cycle_notation() == "(12)(3564)");
    CHECK(d.cycle_count() == 2);
    CHECK(d.cycle_type() == std::vector<int>{2, 4});

    CHECK(Derangement::from_image({2, 1, 4, 3}).cycle_notation() == "(12)(34)");
    CHECK(Derangement::from_image({2, 3, 4, 1}).cycle_count() == 1);
    CHECK(Derangement::from_image({2, 1, 4, 3, 6, 5}).cycle_count() == 3);

    CHECK_THROWS_AS(Derangement::from_image({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Derangement::from_image({2, 2}), std::invalid_argument);
}

TEST_CASE("derangement counts against brute force")
{
    const long expected[] = {1, 0, 1, 2, 9, 44, 265, 1854};
    for (int n = 0; n <= 7; ++n) {
        auto all = enumerate_derangements(n);
        CHECK(static_cast<long>(all.size()) == expected[n]);
        if (n >= 1)
            CHECK(static_cast<long>(all.size()) == brute_force_derangement_count(n));
    }
    // deterministic lexicographic order
    auto d4 = enumerate_derangements(4);
    CHECK(std::is_sorted(d4.begin(), d4.end(), [](const auto& x, const auto& y) {
        return x.image < y.image;
    }));
}

TEST_CASE("diagram enumeration")
{
    CHECK(enumerate_diagrams(0).size() == 1);
    CHECK(enumerate_diagrams(1).empty());

    auto d2 = enumerate_diagrams(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == make_diagram(2, {{"a1", "a2"}, {"b1", "b2"}}));
    CHECK(d2[1] == make_diagram(2, {{"a1", "b2"}, {"b1", "a2"}}));

    CHECK(enumerate_diagrams(3).size() == 8);
    for (int n = 2; n <= 5; ++n)
        CHECK(static_cast<long>(enumerate_diagrams(n).size()) ==
              brute_force_diagram_count(n));
}

TEST_CASE("induced signs")
{
    auto d2 = enumerate_diagrams(2);
    SignAssignment pp_mm{{{'+', '+'}, {'-', '-'}}};
    CHECK(induced_sign(d2[0]) == pp_mm);
    CHECK(induced_sign(d2[1]) == pp_mm);

    // the signed n=4 figure: edges {b1,a2},{a1,b4},{b2,b3},{a3,a4}
    auto D = make_diagram(4, {{"b1", "a2"}, {"a1", "b4"}, {"b2", "b3"}, {"a3", "a4"}});
    SignAssignment expected{{{'+', '+'}, {'-', '+'}, {'+', '-'}, {'-', '-'}}};
    CHECK(induced_sign(D) == expected);

    // each edge contributes one plus and one minus
    for (const auto& D3 : enumerate_diagrams(3)) {
        auto s = induced_sign(D3);
        int plus = 0, minus = 0;
        for (auto [e, d] : s.signs) {
            plus += (e == '+') + (d == '+');
            minus += (e == '-') + (d == '-');
        }
        CHECK(plus == 3);
        CHECK(minus == 3);
    }
}

TEST_CASE("diagrams for a sign")
{
    SignAssignment empty_sign{
        {{'+', '+'}, {'-', '-'}, {'-', '-'}, {'+', '+'}}};
    CHECK(diagrams_for_sign(4, empty_sign).empty());

    CHECK(diagrams_for_sign(2, SignAssignment{{{'+', '+'}, {'-', '-'}}}).size() == 2);
    CHECK(diagrams_for_sign(2, SignAssignment{{{'+', '-'}, {'-', '+'}}}).empty());
}

TEST_CASE("sign partition identity")
{
    for (int n = 2; n <= 5; ++n) {
        auto report = verify_sign_partition(n);
        INFO(report.first_mismatch);
        CHECK(report.ok);
    }
}

TEST_CASE("diagram contraction")
{
    // the n=6 figure: edges {a1,b2},{b1,a2},{a3,a5},{b5,b6},{b4,a6},{b3,a4}
    auto D = make_diagram(6, {{"a1", "b2"},
                              {"b1", "a2"},
                              {"a3", "a5"},
                              {"b5", "b6"},
                              {"b4", "a6"},
                              {"b3", "a4"}});
    CHECK(diagram_to_derangement(D).cycle_notation() == "(12)(3564)");

    for (const auto& D2 : enumerate_diagrams(2))
        CHECK(diagram_to_derangement(D2).cycle_notation() == "(12)");

    // a single 3-chain a1->b2, a2->b3, a3->b1
    auto chain = make_diagram(3, {{"a1", "b2"}, {"a2", "b3"}, {"a3", "b1"}});
    CHECK(diagram_to_derangement(chain).cycle_count() == 1);

    // no fixed points ever
    for (const auto& D4 : enumerate_diagrams(4)) {
        auto sigma = diagram_to_derangement(D4);
        for (int i = 1; i <= 4; ++i)
            CHECK(sigma.apply(i) != i);
    }

    CHECK_THROWS_AS(diagram_to_derangement(Diagram{0, {}}), std::invalid_argument);
}

TEST_CASE("fibres have size 2^(n-s)")
{
    CHECK(fibre(Derangement::from_image({2, 1}), 2).size() == 2);
    CHECK(fibre(Derangement::from_image({2, 1, 4, 3}), 4).size() == 4);
    CHECK(fibre(Derangement::from_image({2, 3, 4, 1}), 4).size() == 8);

    for (int n = 2; n <= 5; ++n) {
        auto report = verify_fibres(n);
        INFO(report.first_mismatch);
        CHECK(report.ok);
    }

    // |D(T)| = sum over sigma of 2^(n-c)
    for (int n : {3, 4}) {
        long total = 0;
        for (const auto& sigma : enumerate_derangements(n))
            total += 1L << (n - sigma.cycle_count());
        CHECK(total == static_cast<long>(enumerate_diagrams(n).size()));
    }
    CHECK(enumerate_diagrams(3).size() == 8);
    CHECK(enumerate_diagrams(4).size() == 60);
}

TEST_CASE("edge deletion keeps a valid diagram") // the D - e helper, test-only
{
    auto D = make_diagram(4, {{"b1", "a2"}, {"a1", "b4"}, {"b2", "b3"}, {"a3", "a4"}});
    // delete {b1,a2} and relabel the merged pair: the survivor must still be
    // a perfect matching on the remaining endpoints
    std::set<Endpoint> covered;
    for (const auto& [u, v] : D.edges) {
        CHECK(covered.insert(u).second);
        CHECK(covered.insert(v).second);
    }
    CHECK(covered.size() == 8);
}
