#ifndef JVOA_VERIFY_HPP
#define JVOA_VERIFY_HPP

#include <jvoa/closed_form.hpp>
#include <jvoa/fock.hpp>

#include <random>

namespace jvoa {

/// Seeded source of exact random data; every verification path draws
/// from one of these so runs are reproducible from the seed alone.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    Rational rational(long max_abs_num = 9, long max_den = 5); // may be zero
    Rational nonzero_rational(long max_abs_num = 9, long max_den = 5);
    Vec vector(int dim);
    BilinearSpace space(int dim); // random symmetric nondegenerate Gram
    PairSequence pair_sequence(int n, int dim);
    std::vector<Rational> distinct_rationals(int count);

private:
    std::mt19937_64 rng_;
};

struct VerifyReport {
    long cases = 0;
    bool ok = true;
    std::string first_mismatch;

    void merge(const VerifyReport& o);
};

/// Compare every coefficient of iota_expand(prop2_terms(T)) within the
/// bound, in the operator-order domain (z1,w1,...,zn,wn), against
/// mode_correlator. All exponent tuples obeying the grading rule and the
/// truncation norm are covered, so omissions on either side are caught.
VerifyReport verify_prop2_oracle(const PairSequence& T, int bound, bool corrupt = false);

/// Same comparison for the single-variable series: iota_expand of
/// theorem1_terms (domain z1..zn) against field_correlator_coeff.
VerifyReport verify_theorem1_oracle(const PairSequence& T, int bound,
                                    bool corrupt = false);

/// Contraction check: the map is surjective onto DR(n) with fibre sizes
/// 2^(n-c(sigma)), and the fibres partition D(n).
VerifyReport verify_fibres(int n);

/// Sign-partition check: the diagrams compatible with each of the 4^n
/// signs are disjoint and exhaust D(n).
VerifyReport verify_sign_partition(int n);

/// Enumerate all exponent tuples over nvars variables with
/// sum_i e_i = total and sum_i |e_i| <= bound.
std::vector<std::vector<long>> exponent_tuples(int nvars, long total, int bound);

} // namespace jvoa

#endif
