#include <jvoa/tensor.hpp>

namespace jvoa {

TensorElement jordan_generator(const Vec& a, const Vec& b)
{
    return TensorElement{{{Rational(1), a, b}, {Rational(1), b, a}}};
}

TensorElement tensor_product(const TensorElement& x, const TensorElement& y,
                             const BilinearSpace& space)
{
    TensorElement out;
    for (const auto& xt : x.terms) {
        for (const auto& yt : y.terms) {
            Rational c = xt.coeff * yt.coeff * pairing(xt.right, yt.left, space);
            if (c != 0)
                out.terms.push_back({c, xt.left, yt.right});
        }
    }
    return out;
}

TensorElement jordan_product(const TensorElement& x, const TensorElement& y,
                             const BilinearSpace& space)
{
    TensorElement xy = tensor_product(x, y, space);
    TensorElement yx = tensor_product(y, x, space);
    TensorElement out = tensor_add(xy, yx);
    return tensor_scale(out, Rational(1, 2));
}

Rational trace(const TensorElement& x, const BilinearSpace& space)
{
    Rational out = 0;
    for (const auto& t : x.terms)
        out += t.coeff * pairing(t.left, t.right, space);
    return out;
}

TensorElement tensor_add(const TensorElement& x, const TensorElement& y)
{
    TensorElement out = x;
    out.terms.insert(out.terms.end(), y.terms.begin(), y.terms.end());
    return out;
}

TensorElement tensor_scale(const TensorElement& x, const Rational& c)
{
    TensorElement out;
    if (c == 0)
        return out;
    out.terms = x.terms;
    for (auto& t : out.terms)
        t.coeff *= c;
    return out;
}

Mat coordinate_matrix(const TensorElement& x, int dim)
{
    Mat m(dim, Vec(dim, Rational(0)));
    for (const auto& t : x.terms)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m[i][j] += t.coeff * t.left[i] * t.right[j];
    return m;
}

} // namespace jvoa
