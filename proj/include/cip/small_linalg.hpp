#pragma once
#include <array>

#include "cip/errors.hpp"

namespace cip {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

// LU factorization with partial pivoting of a 4x4 system. det is the
// determinant of the original matrix (pivot sign accounted for).
struct Lu4 {
    Mat4 lu{};
    std::array<int, 4> piv{};
    double det = 0.0;
};

Lu4 lu_factor(const Mat4& m);
Vec4 lu_solve(const Lu4& f, const Vec4& rhs);

double det4(const Mat4& m);

}  // namespace cip
