#include "cip/small_linalg.hpp"

#include <cmath>

namespace cip {

Lu4 lu_factor(const Mat4& m) {
    Lu4 f;
    f.lu = m;
    double sign = 1.0;
    for (int i = 0; i < 4; ++i) f.piv[i] = i;

    for (int col = 0; col < 4; ++col) {
        int p = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(f.lu[r][col]) > std::abs(f.lu[p][col])) p = r;
        if (p != col) {
            std::swap(f.lu[p], f.lu[col]);
            std::swap(f.piv[p], f.piv[col]);
            sign = -sign;
        }
        double pivot = f.lu[col][col];
        if (pivot == 0.0) {
            f.det = 0.0;
            return f;
        }
        for (int r = col + 1; r < 4; ++r) {
            double factor = f.lu[r][col] / pivot;
            f.lu[r][col] = factor;
            for (int c = col + 1; c < 4; ++c) f.lu[r][c] -= factor * f.lu[col][c];
        }
    }
    f.det = sign * f.lu[0][0] * f.lu[1][1] * f.lu[2][2] * f.lu[3][3];
    return f;
}

Vec4 lu_solve(const Lu4& f, const Vec4& rhs) {
    if (f.det == 0.0) throw numerical_error("lu_solve: singular 4x4 system");
    Vec4 y{};
    for (int i = 0; i < 4; ++i) {
        y[i] = rhs[f.piv[i]];
        for (int j = 0; j < i; ++j) y[i] -= f.lu[i][j] * y[j];
    }
    Vec4 x{};
    for (int i = 3; i >= 0; --i) {
        x[i] = y[i];
        for (int j = i + 1; j < 4; ++j) x[i] -= f.lu[i][j] * x[j];
        x[i] /= f.lu[i][i];
    }
    return x;
}

double det4(const Mat4& m) { return lu_factor(m).det; }

}  // namespace cip
