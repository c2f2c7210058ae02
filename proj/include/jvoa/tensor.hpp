#ifndef JVOA_TENSOR_HPP
#define JVOA_TENSOR_HPP

#include <jvoa/bilinear.hpp>

namespace jvoa {

/// Element of the tensor algebra on h (x) h, kept as a weighted sum of
/// rank-one terms coeff * (left (x) right). The representation is not
/// canonical; equality checks go through coordinate_matrix or trace
/// pairings. Products use the rank-one rule (a(x)b)(u(x)v) = (b,u) a(x)v,
/// so a trace over a length-t cycle costs O(t d) pairings instead of a
/// d^2 matrix chain.
struct TensorElement {
    struct Term {
        Rational coeff;
        Vec left;
        Vec right;
    };
    std::vector<Term> terms;
};

/// L_{a,b} = a(x)b + b(x)a, the symmetric-tensor generator.
TensorElement jordan_generator(const Vec& a, const Vec& b);

TensorElement tensor_product(const TensorElement& x, const TensorElement& y,
                             const BilinearSpace& space);

/// x o y = (xy + yx)/2
TensorElement jordan_product(const TensorElement& x, const TensorElement& y,
                             const BilinearSpace& space);

/// Tr extends Tr(a(x)b) = (a,b) linearly.
Rational trace(const TensorElement& x, const BilinearSpace& space);

TensorElement tensor_add(const TensorElement& x, const TensorElement& y);
TensorElement tensor_scale(const TensorElement& x, const Rational& c);

/// d x d coordinate array of x; equality-test helper.
Mat coordinate_matrix(const TensorElement& x, int dim);

} // namespace jvoa

#endif
