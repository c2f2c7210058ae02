#include <jvoa/bilinear.hpp>

#include <stdexcept>

namespace jvoa {

Rational mat_det(Mat m)
{
    const std::size_t d = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && m[pivot][col] == 0)
            ++pivot;
        if (pivot == d)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < d; ++row) {
            if (m[row][col] == 0)
                continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t k = col; k < d; ++k)
                m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Mat mat_inverse(const Mat& m)
{
    const std::size_t d = m.size();
    Mat a = m;
    Mat inv(d, Vec(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && a[pivot][col] == 0)
            ++pivot;
        if (pivot == d)
            throw std::invalid_argument("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (std::size_t k = 0; k < d; ++k) {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        for (std::size_t row = 0; row < d; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            Rational f = a[row][col];
            for (std::size_t k = 0; k < d; ++k) {
                a[row][k] -= f * a[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

BilinearSpace::BilinearSpace(int d, Mat g) : dim(d), gram(std::move(g))
{
    if (d <= 0)
        throw std::invalid_argument("dimension must be positive");
    if (gram.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("gram matrix has wrong size");
    for (const auto& row : gram)
        if (row.size() != static_cast<std::size_t>(d))
            throw std::invalid_argument("gram matrix has wrong size");
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("gram matrix is not symmetric");
    if (mat_det(gram) == 0)
        throw std::invalid_argument("gram matrix is degenerate");
}

BilinearSpace BilinearSpace::orthonormal(int d)
{
    Mat g(d, Vec(d, Rational(0)));
    for (int i = 0; i < d; ++i)
        g[i][i] = 1;
    return BilinearSpace(d, std::move(g));
}

Mat BilinearSpace::gram_inverse() const
{
    return mat_inverse(gram);
}

Rational pairing(const Vec& a, const Vec& b, const BilinearSpace& space)
{
    if (a.size() != static_cast<std::size_t>(space.dim) ||
        b.size() != static_cast<std::size_t>(space.dim))
        throw std::invalid_argument("vector dimension mismatch");
    Rational out = 0;
    for (int i = 0; i < space.dim; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < space.dim; ++j)
            out += a[i] * space.gram[i][j] * b[j];
    }
    return out;
}

} // namespace jvoa
