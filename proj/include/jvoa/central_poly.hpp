#ifndef JVOA_CENTRAL_POLY_HPP
#define JVOA_CENTRAL_POLY_HPP

#include <jvoa/rational.hpp>
#include <vector>

namespace jvoa {

/// Univariate polynomial in the formal central parameter r, exact
/// rational coefficients, lowest power first. The zero polynomial is
/// the empty coefficient list; there is never a trailing zero.
class CentralPoly {
public:
    CentralPoly() = default;
    CentralPoly(const Rational& constant);
    explicit CentralPoly(std::vector<Rational> coeffs);

    static CentralPoly r_power(int k, const Rational& scale = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    CentralPoly& operator+=(const CentralPoly& o);
    CentralPoly& operator-=(const CentralPoly& o);
    CentralPoly& operator*=(const CentralPoly& o);
    friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
    friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
    friend CentralPoly operator*(CentralPoly a, const CentralPoly& b) { return a *= b; }
    CentralPoly operator-() const;

    bool operator==(const CentralPoly&) const = default;

    Rational eval(const Rational& r0) const; // exact Horner

    std::string str() const; // e.g. "1/4*r^2 + 1/2*r"

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

} // namespace jvoa

#endif
