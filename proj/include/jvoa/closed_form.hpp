#ifndef JVOA_CLOSED_FORM_HPP
#define JVOA_CLOSED_FORM_HPP

#include <jvoa/central_poly.hpp>
#include <jvoa/combinatorics.hpp>
#include <jvoa/tensor.hpp>

#include <map>
#include <optional>
#include <stdexcept>

namespace jvoa {

/// The input data: the space and the sequence T = (a_1,b_1)...(a_n,b_n).
/// z_i is the variable of a_i and w_i the variable of b_i.
struct PairSequence {
    BilinearSpace space;
    std::vector<std::pair<Vec, Vec>> pairs;

    int n() const { return static_cast<int>(pairs.size()); }
    void validate() const; // all vectors must have the space's dimension
};

/// d=1, (e,e)=1, all pairs (e,e): the Virasoro specialization data.
PairSequence virasoro_sequence(int n);

/// A formal variable z_i or w_i. Ordered z_1 < w_1 < z_2 < w_2 < ...
struct VarTag {
    int pair;  // 1..n
    char kind; // 'z' or 'w'
    auto key() const { return std::pair<int, int>(pair, kind == 'w' ? 1 : 0); }
    auto operator<=>(const VarTag& o) const { return key() <=> o.key(); }
    bool operator==(const VarTag& o) const { return key() == o.key(); }
    std::string name() const { return kind + std::to_string(pair); }
};

/// One squared-difference denominator factor 1/(left-right)^(2*mult),
/// canonicalized with left < right (the square makes the order immaterial).
struct SqDiffFactor {
    VarTag left;
    VarTag right;
    int mult = 1;
    auto operator<=>(const SqDiffFactor&) const = default;
};

/// One summand of the derangement sum or the diagram sum: a coefficient
/// in Q[r] over a product of squared differences. "cycles" and "r_power"
/// carry the display metadata of the indexing permutation.
struct CorrelatorTerm {
    CentralPoly coeff;
    std::vector<SqDiffFactor> denom; // sorted, multiplicities merged
    std::string cycles;
    int r_power = 0;
};

class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma(sigma,T) = 2^(-s-n) prod_cycles Tr(L_{a,b} ... along the cycle).
Rational gamma_sigma_T(const Derangement& sigma, const PairSequence& T);

/// The derangement sum: one term per sigma in DR(n), coefficient
/// gamma_sigma_T * r^c(sigma) over prod (z_i - z_sigma(i))^2. Zero terms
/// dropped; ordered by cycle type then cycle notation.
std::vector<CorrelatorTerm> theorem1_terms(const PairSequence& T);

struct EdgeWeight {
    Rational coeff; // 1 for K, (u,v)/2 for Q
    SqDiffFactor factor;
};
enum class EdgeWeightKind { K, Q };
EdgeWeight edge_weight(const Edge& e, const PairSequence& T, EdgeWeightKind kind);

/// The diagram sum: one term per D, coefficient
/// Gamma(D) * 2^(-n) * r^c(sigma_D) over prod K(e). Zero terms dropped.
std::vector<CorrelatorTerm> prop2_terms(const PairSequence& T);

/// Exact point evaluation; r stays symbolic (specialize via eval()).
/// Coincident values among used variables raise PoleError.
CentralPoly evaluate_terms(const std::vector<CorrelatorTerm>& terms,
                           const std::map<VarTag, Rational>& assignment);

/// Truncated multivariate iota-expansion. A coefficient is stored only
/// for exponent tuples e with sum_i |e_i| <= bound; tuples beyond the
/// bound are unknown, not zero.
struct LaurentSeries {
    std::vector<VarTag> domain; // expansion region |v_1| > |v_2| > ...
    int bound = 0;
    std::map<std::vector<long>, CentralPoly> coeffs;

    static long norm(const std::vector<long>& exps);
    /// nullopt when the tuple lies beyond the truncation bound.
    std::optional<CentralPoly> coeff(const std::vector<long>& exps) const;
};

/// Expand every factor 1/(u-v)^2 as sum_{k>=1} k u^(-k-1) v^(k-1) with u
/// the variable earlier in the domain (and symmetrically otherwise),
/// multiply exactly, truncate to the bound.
LaurentSeries iota_expand(const std::vector<CorrelatorTerm>& terms,
                          const std::vector<VarTag>& domain, int bound);

} // namespace jvoa

#endif
