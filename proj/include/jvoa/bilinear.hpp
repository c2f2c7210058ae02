#ifndef JVOA_BILINEAR_HPP
#define JVOA_BILINEAR_HPP

#include <jvoa/rational.hpp>
#include <vector>

namespace jvoa {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Rational mat_det(Mat m);
Mat mat_inverse(const Mat& m); // throws std::invalid_argument on singular input

/// Finite dimensional space with a non-degenerate symmetric bilinear
/// form, given by its Gram matrix in a fixed basis. Symmetry and
/// non-degeneracy are checked at construction.
struct BilinearSpace {
    int dim;
    Mat gram;

    BilinearSpace(int d, Mat g);
    static BilinearSpace orthonormal(int d);

    Mat gram_inverse() const;
};

Rational pairing(const Vec& a, const Vec& b, const BilinearSpace& space);

inline Vec basis_vector(int d, int k)
{
    Vec v(d, Rational(0));
    v[k] = 1;
    return v;
}

} // namespace jvoa

#endif
