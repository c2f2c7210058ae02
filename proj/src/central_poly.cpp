#include <jvoa/central_poly.hpp>

#include <algorithm>

namespace jvoa {

CentralPoly::CentralPoly(const Rational& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

CentralPoly::CentralPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

CentralPoly CentralPoly::r_power(int k, const Rational& scale)
{
    CentralPoly p;
    if (scale == 0)
        return p;
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = scale;
    return p;
}

Rational CentralPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[k];
}

void CentralPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

CentralPoly& CentralPoly::operator*=(const CentralPoly& o)
{
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

CentralPoly CentralPoly::operator-() const
{
    CentralPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Rational CentralPoly::eval(const Rational& r0) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * r0 + *it;
    return acc;
}

std::string CentralPoly::str() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        if (coeffs_[k] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (k == 0)
            out += to_string(coeffs_[k]);
        else {
            if (coeffs_[k] != 1)
                out += to_string(coeffs_[k]) + "*";
            out += (k == 1) ? "r" : "r^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace jvoa
