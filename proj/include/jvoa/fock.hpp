#ifndef JVOA_FOCK_HPP
#define JVOA_FOCK_HPP

#include <jvoa/central_poly.hpp>
#include <jvoa/closed_form.hpp>

#include <map>
#include <string>
#include <vector>

namespace jvoa {

/// Quadratic generator L_{e_i,e_j}(m,n), stored in the canonical
/// orientation (i,m) <= (j,n) via the symmetry L_{a,b}(m,n) = L_{b,a}(n,m).
struct QuadGenerator {
    int i;
    long m;
    int j;
    long n;

    static QuadGenerator make(int i, long m, int j, long n);
    bool is_creation() const { return m <= -1 && n <= -1; } // lies in B_-
    long degree() const { return -(m + n); }
    auto operator<=>(const QuadGenerator&) const = default;
    std::string str() const;
};

/// PBW monomial: multiset of creation generators (B_- is abelian),
/// kept sorted. Empty monomial = vacuum.
using Monomial = std::vector<QuadGenerator>;

/// Element of the induced module M_r: finitely many monomials with
/// coefficients in Q[r]. Zero coefficients are never stored.
struct FockState {
    std::map<Monomial, CentralPoly> terms;

    static FockState vacuum();
    bool is_zero() const { return terms.empty(); }
    void add(const Monomial& mono, const CentralPoly& c);
    FockState& operator+=(const FockState& o);
    FockState scaled(const CentralPoly& c) const;
    long max_degree() const; // 0 for the zero state and the vacuum
    bool operator==(const FockState&) const = default;
};

/// Element of L = B (+) Cc: generator part plus the coefficient of c.
struct QuadElement {
    std::vector<std::pair<Rational, QuadGenerator>> quad;
    Rational central = 0;

    void add(const Rational& c, const QuadGenerator& g);
    void canonicalize(); // combine like generators, drop zeros, sort
    bool operator==(const QuadElement&) const = default;
    std::string str() const;
};

/// e_i(m) e_j(n) rewritten through the normal-ordered generator:
/// 2 L_{e_i,e_j}(m,n) plus the central correction m (e_i,e_j) delta_{m+n} c
/// when the ordered product had to be swapped (m >= n).
QuadElement normal_order_pair(int i, long m, int j, long n, const BilinearSpace& space);

/// The rescaled bracket [.,.]_new = (1/c)[.,.] on quadratic generators:
/// four delta terms, each re-expressed via normal_order_pair.
QuadElement bracket_new(const QuadGenerator& g, const QuadGenerator& h,
                        const BilinearSpace& space);

/// Module action of one generator: creation generators multiply into the
/// monomials; everything else commutes through via bracket_new and dies
/// on the vacuum, with c acting as the scalar r.
FockState apply_generator(const QuadGenerator& g, const FockState& psi,
                          const BilinearSpace& space);
FockState apply_element(const QuadElement& x, const FockState& psi,
                        const BilinearSpace& space);

/// The mode operator L_{a,b}(l) = sum_k L_{a,b}(-k+l-1, k), truncated to
/// the finitely many k that act nonzero on psi (window from the exact
/// degree of each monomial).
FockState apply_field_mode(const Vec& a, const Vec& b, long l, const FockState& psi,
                           const BilinearSpace& space);

/// Coefficient of the vacuum monomial (the <1', .> pairing).
CentralPoly vacuum_coeff(const FockState& psi);

/// <1', prod_i L_{a_i,b_i}(m_i,n_i) 1>, applied right to left; the
/// coefficient of prod z_i^(-m_i-1) w_i^(-n_i-1) in the two-variable
/// correlator series.
CentralPoly mode_correlator(const PairSequence& T,
                            const std::vector<std::pair<long, long>>& modes);

/// <1', prod_i L_{a_i,b_i}(l_i) 1>; the coefficient of prod z_i^(-l_i-1)
/// in the single-variable correlator series.
CentralPoly field_correlator_coeff(const PairSequence& T, const std::vector<long>& ls);

struct Prop1Report {
    long cases = 0;
    bool ok = true;
    std::string first_mismatch;
};

/// Compares bracket_new against the coefficient-extracted right hand
/// sides of the closed commutator formulas for all basis quadruples and
/// mode quadruples with |mode| <= window.
Prop1Report check_prop1(const BilinearSpace& space, long window);

/// omega = sum_{k,l} (G^-1)_{kl} L_{e_k,e_l}(-1,-1) . 1
FockState virasoro_state(const BilinearSpace& space);

} // namespace jvoa

#endif
