#pragma once

// Independent reference computations. Nothing here calls the kinematics
// implementation; matrices are built straight from the textbook formulas.

#include <array>
#include <cmath>

#include "lorcat/vecmat.hpp"

namespace lorcat::oracle {

using M4 = std::array<std::array<double, 4>, 4>;

/// Boost matrix from (γ − 1)/v², branching at v = 0.
inline M4 boost(const Vec3& v, double c) {
    const double v2 = v.x * v.x + v.y * v.y + v.z * v.z;
    const double g = 1.0 / std::sqrt(1.0 - v2 / (c * c));
    const double vv[3] = {v.x, v.y, v.z};
    M4 m{};
    m[0][0] = g;
    for (int i = 0; i < 3; ++i) {
        m[0][i + 1] = -g * vv[i] / (c * c);
        m[i + 1][0] = -g * vv[i];
        for (int j = 0; j < 3; ++j) m[i + 1][j + 1] = (i == j) + (v2 > 0 ? (g - 1.0) * vv[i] * vv[j] / v2 : 0.0);
    }
    return m;
}

inline M4 mul(const M4& a, const M4& b) {
    M4 p{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) p[r][c] += a[r][k] * b[k][c];
    return p;
}

/// Velocity of the boost factor of R·B(w), read from the top row.
inline Vec3 top_row_velocity(const M4& m, double c) {
    return {-c * c * m[0][1] / m[0][0], -c * c * m[0][2] / m[0][0], -c * c * m[0][3] / m[0][0]};
}

/// Spatial rotation R of m = R·B(w).
inline Mat3 rotation_part(const M4& m, double c) {
    const Vec3 w = top_row_velocity(m, c);
    const M4 r = mul(m, boost(-w, c));
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = r[i + 1][j + 1];
    return out;
}

inline Mat4 to_mat4(const M4& m) {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = m[r][c];
    return out;
}

/// Wigner angle of two perpendicular boosts: cos θ = (γ₁ + γ₂)/(1 + γ₁γ₂).
inline double perpendicular_wigner_angle(double speed1, double speed2, double c) {
    const double g1 = 1.0 / std::sqrt(1.0 - speed1 * speed1 / (c * c));
    const double g2 = 1.0 / std::sqrt(1.0 - speed2 * speed2 / (c * c));
    return std::acos((g1 + g2) / (1.0 + g1 * g2));
}

}  // namespace lorcat::oracle
