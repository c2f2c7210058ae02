#include <jvoa/closed_form.hpp>
#include <jvoa/verify.hpp>

#include <doctest.h>
#include <algorithm>

using namespace jvoa;

namespace {

std::map<VarTag, Rational> z_points(const std::vector<Rational>& vals)
{
    std::map<VarTag, Rational> out;
    for (std::size_t i = 0; i < vals.size(); ++i)
        out[{static_cast<int>(i) + 1, 'z'}] = vals[i];
    return out;
}

} // namespace

TEST_CASE("gamma for the Virasoro data is (1/2)^s")
{
    for (int n : {2, 3, 4}) {
        auto T = virasoro_sequence(n);
        for (const auto& sigma : enumerate_derangements(n))
            CHECK(gamma_sigma_T(sigma, T) == pow2(-sigma.cycle_count()));
    }
}

TEST_CASE("gamma for a 2-cycle matches the trace formula")
{
    RandomSource rnd(11);
    for (int it = 0; it < 10; ++it) {
        auto T = rnd.pair_sequence(2, 2);
        const auto& [a1, b1] = T.pairs[0];
        const auto& [a2, b2] = T.pairs[1];
        auto pr = [&](const Vec& x, const Vec& y) { return pairing(x, y, T.space); };
        Rational expected =
            Rational(1, 4) * (pr(a1, a2) * pr(b1, b2) + pr(a1, b2) * pr(b1, a2));
        CHECK(gamma_sigma_T(Derangement::from_image({2, 1}), T) == expected);
    }
}

TEST_CASE("derangement-sum term lists")
{
    CHECK(theorem1_terms(virasoro_sequence(1)).empty());

    auto t0 = theorem1_terms(virasoro_sequence(0));
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].coeff == CentralPoly(Rational(1)));
    CHECK(t0[0].denom.empty());

    RandomSource rnd(3);
    auto T = rnd.pair_sequence(2, 2);
    auto t2 = theorem1_terms(T);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].r_power == 1);
    CHECK(t2[0].coeff == CentralPoly::r_power(1, gamma_sigma_T(Derangement::from_image({2, 1}), T)));
    REQUIRE(t2[0].denom.size() == 1);
    CHECK(t2[0].denom[0].mult == 2); // (z1-z2)^4
}

TEST_CASE("the nine n=4 terms in display order")
{
    auto T = virasoro_sequence(4);
    auto terms = theorem1_terms(T);
    REQUIRE(terms.size() == 9);
    const char* expected[] = {"(12)(34)", "(13)(24)", "(14)(23)", "(1234)", "(1243)",
                              "(1324)",   "(1342)",   "(1423)",   "(1432)"};
    for (int i = 0; i < 9; ++i) {
        CHECK(terms[i].cycles == expected[i]);
        if (i < 3) {
            CHECK(terms[i].coeff == CentralPoly::r_power(2, Rational(1, 4)));
            CHECK(terms[i].denom.size() == 2); // two quartic factors
            CHECK(terms[i].denom[0].mult == 2);
        } else {
            CHECK(terms[i].coeff == CentralPoly::r_power(1, Rational(1, 2)));
            CHECK(terms[i].denom.size() == 4); // four square factors
        }
    }
}

TEST_CASE("generic n=4 coefficients carry 1/64 Tr Tr and 1/32 Tr")
{
    RandomSource rnd(21);
    auto T = rnd.pair_sequence(4, 2);
    auto tr_cycle = [&](std::vector<int> labels) {
        TensorElement prod =
            jordan_generator(T.pairs[labels[0] - 1].first, T.pairs[labels[0] - 1].second);
        for (std::size_t k = 1; k < labels.size(); ++k)
            prod = tensor_product(prod,
                                  jordan_generator(T.pairs[labels[k] - 1].first,
                                                   T.pairs[labels[k] - 1].second),
                                  T.space);
        return trace(prod, T.space);
    };
    CHECK(gamma_sigma_T(Derangement::from_image({2, 1, 4, 3}), T) ==
          Rational(1, 64) * tr_cycle({1, 2}) * tr_cycle({3, 4}));
    CHECK(gamma_sigma_T(Derangement::from_image({2, 3, 4, 1}), T) ==
          Rational(1, 32) * tr_cycle({1, 2, 3, 4}));
}

TEST_CASE("edge weights")
{
    RandomSource rnd(5);
    auto T = rnd.pair_sequence(3, 2);
    Edge e{{1, Side::A}, {2, Side::B}};
    auto k = edge_weight(e, T, EdgeWeightKind::K);
    CHECK(k.coeff == 1);
    CHECK(k.factor.left == VarTag{1, 'z'});
    CHECK(k.factor.right == VarTag{2, 'w'});
    auto q = edge_weight(e, T, EdgeWeightKind::Q);
    CHECK(q.coeff ==
          Rational(1, 2) * pairing(T.pairs[0].first, T.pairs[1].second, T.space));

    Edge aa{{1, Side::A}, {3, Side::A}};
    CHECK(edge_weight(aa, T, EdgeWeightKind::K).factor.right == VarTag{3, 'z'});

    Edge bad{{1, Side::A}, {1, Side::B}};
    CHECK_THROWS_AS(edge_weight(bad, T, EdgeWeightKind::K), std::invalid_argument);
}

TEST_CASE("diagram-sum term lists")
{
    auto t0 = prop2_terms(virasoro_sequence(0));
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].coeff == CentralPoly(Rational(1)));

    CHECK(prop2_terms(virasoro_sequence(1)).empty());

    RandomSource rnd(8);
    auto T = rnd.pair_sequence(2, 2);
    auto terms = prop2_terms(T);
    auto pr = [&](const Vec& x, const Vec& y) { return pairing(x, y, T.space); };
    REQUIRE(terms.size() == 2);
    // diagram {a1,a2},{b1,b2} then {a1,b2},{b1,a2}
    CHECK(terms[0].coeff ==
          CentralPoly::r_power(1, Rational(1, 4) * pr(T.pairs[0].first, T.pairs[1].first) *
                                      pr(T.pairs[0].second, T.pairs[1].second)));
    CHECK(terms[1].coeff ==
          CentralPoly::r_power(1, Rational(1, 4) * pr(T.pairs[0].first, T.pairs[1].second) *
                                      pr(T.pairs[0].second, T.pairs[1].first)));
    CHECK(terms[0].denom ==
          std::vector<SqDiffFactor>{{{1, 'z'}, {2, 'z'}, 1}, {{1, 'w'}, {2, 'w'}, 1}});
    CHECK(terms[1].denom ==
          std::vector<SqDiffFactor>{{{1, 'z'}, {2, 'w'}, 1}, {{1, 'w'}, {2, 'z'}, 1}});
}

TEST_CASE("fibre-sum identity links the two coefficient systems")
{
    // The trace along a cycle expands over both traversal directions, so
    // the diagram weights pin down the coefficients per inverse-pair
    // class {sigma, sigma^-1}; only involutions are resolved individually.
    RandomSource rnd(13);
    for (int n = 2; n <= 5; ++n) {
        auto T = rnd.pair_sequence(n, 2);
        std::map<std::string, Rational> fibre_sums;
        for (const auto& D : enumerate_diagrams(n)) {
            Rational gamma_d = 1;
            for (const auto& e : D.edges)
                gamma_d *= edge_weight(e, T, EdgeWeightKind::Q).coeff * 2;
            fibre_sums[diagram_to_derangement(D).cycle_notation()] += gamma_d * pow2(-n);
        }
        for (const auto& sigma : enumerate_derangements(n)) {
            std::vector<int> inv_image(n);
            for (int i = 1; i <= n; ++i)
                inv_image[sigma.apply(i) - 1] = i;
            auto inv = Derangement::from_image(inv_image);
            CHECK(gamma_sigma_T(sigma, T) == gamma_sigma_T(inv, T)); // trace reversal
            if (inv == sigma) {
                CHECK(fibre_sums[sigma.cycle_notation()] == gamma_sigma_T(sigma, T));
            } else {
                CHECK(fibre_sums[sigma.cycle_notation()] +
                          fibre_sums[inv.cycle_notation()] ==
                      gamma_sigma_T(sigma, T) + gamma_sigma_T(inv, T));
            }
        }
    }
}

TEST_CASE("point evaluation")
{
    auto T = virasoro_sequence(2);
    auto val = evaluate_terms(theorem1_terms(T), z_points({Rational(1), Rational(0)}));
    CHECK(val == CentralPoly::r_power(1, Rational(1, 2)));
    CHECK(val.eval(2) == 1);

    CHECK(evaluate_terms(theorem1_terms(virasoro_sequence(1)), z_points({Rational(3)}))
              .is_zero());

    // n=4 at z=(3,2,1,0), r=1: sum of the nine terms computed by hand
    auto v4 = evaluate_terms(theorem1_terms(virasoro_sequence(4)),
                             z_points({Rational(3), Rational(2), Rational(1), Rational(0)}));
    CHECK(v4.eval(1) == Rational(36049, 82944));

    CHECK_THROWS_AS(
        evaluate_terms(theorem1_terms(T), z_points({Rational(1), Rational(1)})), PoleError);
    CHECK_THROWS_AS(evaluate_terms(theorem1_terms(T), z_points({Rational(1)})),
                    std::invalid_argument);
}

TEST_CASE("diagonal consistency at random points")
{
    RandomSource rnd(42);
    for (int n = 2; n <= 4; ++n) {
        auto T = rnd.pair_sequence(n, 2);
        auto th = theorem1_terms(T);
        auto p2 = prop2_terms(T);
        for (int trial = 0; trial < 20; ++trial) {
            auto vals = rnd.distinct_rationals(n);
            std::map<VarTag, Rational> assign;
            for (int i = 0; i < n; ++i) {
                assign[{i + 1, 'z'}] = vals[i];
                assign[{i + 1, 'w'}] = vals[i]; // w_i := z_i
            }
            CHECK(evaluate_terms(p2, assign) == evaluate_terms(th, assign));
        }
    }
}

TEST_CASE("symmetry under relabeling pairs and points together")
{
    RandomSource rnd(77);
    for (int n : {3, 4}) {
        auto T = rnd.pair_sequence(n, 2);
        auto vals = rnd.distinct_rationals(n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(perm.begin(), perm.end(), std::mt19937(trial));
            PairSequence Tp{T.space, {}};
            std::map<VarTag, Rational> assign, assign_p;
            for (int i = 0; i < n; ++i) {
                Tp.pairs.push_back(T.pairs[perm[i]]);
                assign[{i + 1, 'z'}] = vals[i];
                assign_p[{i + 1, 'z'}] = vals[perm[i]];
            }
            CHECK(evaluate_terms(theorem1_terms(T), assign) ==
                  evaluate_terms(theorem1_terms(Tp), assign_p));
        }
    }
}

TEST_CASE("iota expansion of a single squared difference")
{
    CorrelatorTerm term{CentralPoly(Rational(1)), {{{1, 'z'}, {2, 'z'}, 1}}, "", 0};
    auto s = iota_expand({term}, {{1, 'z'}, {2, 'z'}}, 8);
    CHECK(s.coeff({-2, 0}).value() == CentralPoly(Rational(1)));
    CHECK(s.coeff({-3, 1}).value() == CentralPoly(Rational(2)));
    CHECK(s.coeff({-4, 2}).value() == CentralPoly(Rational(3)));
    CHECK(s.coeff({-2, 1}).value().is_zero()); // wrong total degree
    CHECK(!s.coeff({-9, 7}).has_value());      // beyond the bound: unknown

    // reversed domain order expands toward the other region
    auto s2 = iota_expand({term}, {{2, 'z'}, {1, 'z'}}, 8);
    CHECK(s2.coeff({-2, 0}).value() == CentralPoly(Rational(1)));
    CHECK(s2.coeff({0, -2}).value().is_zero());

    CHECK_THROWS_AS(iota_expand({term}, {{1, 'z'}}, 4), std::invalid_argument);
}

TEST_CASE("iota expansion of quartic factors and the n=2 leading coefficient")
{
    RandomSource rnd(10);
    auto T = rnd.pair_sequence(2, 2);
    auto pr = [&](const Vec& x, const Vec& y) { return pairing(x, y, T.space); };
    Rational gamma = Rational(1, 4) * (pr(T.pairs[0].first, T.pairs[1].first) *
                                           pr(T.pairs[0].second, T.pairs[1].second) +
                                       pr(T.pairs[0].first, T.pairs[1].second) *
                                           pr(T.pairs[0].second, T.pairs[1].first));

    auto s = iota_expand(theorem1_terms(T), {{1, 'z'}, {2, 'z'}}, 6);
    CHECK(s.coeff({-4, 0}).value() == CentralPoly::r_power(1, gamma));
    CHECK(s.coeff({-5, 1}).value() == CentralPoly::r_power(1, 4 * gamma));

    std::vector<VarTag> dom{{1, 'z'}, {1, 'w'}, {2, 'z'}, {2, 'w'}};
    auto sp = iota_expand(prop2_terms(T), dom, 6);
    CHECK(sp.coeff({-2, -2, 0, 0}).value() == CentralPoly::r_power(1, gamma));
}

TEST_CASE("virasoro specialization coefficients up to n=4")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& term : theorem1_terms(virasoro_sequence(n)))
            CHECK(term.coeff == CentralPoly::r_power(term.r_power, pow2(-term.r_power)));
}
