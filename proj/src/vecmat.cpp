#include "lorcat/vecmat.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <string>

#include "lorcat/errors.hpp"

namespace lorcat {

namespace {
std::atomic<double> g_tolerance{1e-9};
}  // namespace

double tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvariantError("tolerance must be positive and finite");
    }
    g_tolerance.store(tol, std::memory_order_relaxed);
}

double max_abs(const Vec3& a) { return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)}); }

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

// ---------------------------------------------------------------- Mat3

Mat3 Mat3::transpose() const {
    Mat3 t;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double Mat3::det() const {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Vec3 Mat3::apply(const Vec3& v) const {
    const auto& a = *this;
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 p;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
            p(r, c) = s;
        }
    return p;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 d;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) d(i, j) = a(i, j) - b(i, j);
    return d;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

double rotation_defect(const Mat3& m) {
    return std::max(max_abs_diff(m.transpose() * m, Mat3::identity()), std::abs(m.det() - 1.0));
}

bool is_rotation(const Mat3& m, double tol) {
    return max_abs_diff(m.transpose() * m, Mat3::identity()) < tol && std::abs(m.det() - 1.0) <= tol;
}

Mat3 rotation_from_axis_angle(const Vec3& axis, double angle, double tol) {
    const double len = norm(axis);
    if (!(len > tol)) throw ZeroAxisError("rotation axis has zero length");
    if (!std::isfinite(angle) || !axis.is_finite()) throw NonFiniteError("rotation axis/angle must be finite");
    const Vec3 n = axis / len;
    const double s = std::sin(angle);
    const double c = std::cos(angle);
    const double k = 1.0 - c;
    return Mat3({c + k * n.x * n.x, k * n.x * n.y - s * n.z, k * n.x * n.z + s * n.y,
                 k * n.y * n.x + s * n.z, c + k * n.y * n.y, k * n.y * n.z - s * n.x,
                 k * n.z * n.x - s * n.y, k * n.z * n.y + s * n.x, c + k * n.z * n.z});
}

double rotation_angle(const Mat3& r) {
    // atan2 of (|axial vector|, trace part) stays accurate near 0 and π.
    const Vec3 axial{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
    const double trace = r(0, 0) + r(1, 1) + r(2, 2);
    return std::atan2(0.5 * norm(axial), 0.5 * (trace - 1.0));
}

// ---------------------------------------------------------------- Event

double max_abs_diff(const Event& a, const Event& b) {
    return std::max(std::abs(a.t - b.t), max_abs(a.x - b.x));
}

std::ostream& operator<<(std::ostream& os, const Event& e) { return os << '(' << e.t << ", " << e.x << ')'; }

// ---------------------------------------------------------------- Mat4

Mat4 Mat4::from_rotation(const Mat3& r) {
    Mat4 m = identity();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = r(i, j);
    return m;
}

Mat3 Mat4::spatial_block() const {
    Mat3 s;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s(i, j) = (*this)(i + 1, j + 1);
    return s;
}

Mat4 Mat4::transpose() const {
    Mat4 t;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Mat4::is_finite() const noexcept {
    return std::all_of(m_.begin(), m_.end(), [](double v) { return std::isfinite(v); });
}

Event Mat4::apply(const Event& e) const {
    const auto& a = *this;
    const double in[4] = {e.t, e.x.x, e.x.y, e.x.z};
    double out[4];
    for (std::size_t r = 0; r < 4; ++r)
        out[r] = a(r, 0) * in[0] + a(r, 1) * in[1] + a(r, 2) * in[2] + a(r, 3) * in[3];
    return {out[0], {out[1], out[2], out[3]}};
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 s;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) s(i, j) = a(i, j) + b(i, j);
    return s;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 s;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) s(i, j) = a(i, j) - b(i, j);
    return s;
}

Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = s * a(i, j);
    return r;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 p;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c) + a(r, 3) * b(3, c);
    return p;
}

namespace {

// 2x2 minors of rows (0,1) and rows (2,3), indexed by column pair.
struct Minors {
    double s0, s1, s2, s3, s4, s5;  // top rows
    double c5, c4, c3, c2, c1, c0;  // bottom rows
};

Minors minors_of(const Mat4& a) {
    return {a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1), a(0, 0) * a(1, 2) - a(1, 0) * a(0, 2),
            a(0, 0) * a(1, 3) - a(1, 0) * a(0, 3), a(0, 1) * a(1, 2) - a(1, 1) * a(0, 2),
            a(0, 1) * a(1, 3) - a(1, 1) * a(0, 3), a(0, 2) * a(1, 3) - a(1, 2) * a(0, 3),
            a(2, 2) * a(3, 3) - a(3, 2) * a(2, 3), a(2, 1) * a(3, 3) - a(3, 1) * a(2, 3),
            a(2, 1) * a(3, 2) - a(3, 1) * a(2, 2), a(2, 0) * a(3, 3) - a(3, 0) * a(2, 3),
            a(2, 0) * a(3, 2) - a(3, 0) * a(2, 2), a(2, 0) * a(3, 1) - a(3, 0) * a(2, 1)};
}

double det_from(const Minors& k) {
    return k.s0 * k.c5 - k.s1 * k.c4 + k.s2 * k.c3 + k.s3 * k.c2 - k.s4 * k.c1 + k.s5 * k.c0;
}

}  // namespace

double Mat4::det() const { return det_from(minors_of(*this)); }

Mat4 mat4_invert(const Mat4& a, double tol) {
    const Minors k = minors_of(a);
    const double det = det_from(k);
    if (!(std::abs(det) > tol)) {
        throw SingularMatrixError("matrix is singular (|det| = " + std::to_string(std::abs(det)) + ")");
    }
    const double inv = 1.0 / det;
    Mat4 b;
    b(0, 0) = (a(1, 1) * k.c5 - a(1, 2) * k.c4 + a(1, 3) * k.c3) * inv;
    b(0, 1) = (-a(0, 1) * k.c5 + a(0, 2) * k.c4 - a(0, 3) * k.c3) * inv;
    b(0, 2) = (a(3, 1) * k.s5 - a(3, 2) * k.s4 + a(3, 3) * k.s3) * inv;
    b(0, 3) = (-a(2, 1) * k.s5 + a(2, 2) * k.s4 - a(2, 3) * k.s3) * inv;

    b(1, 0) = (-a(1, 0) * k.c5 + a(1, 2) * k.c2 - a(1, 3) * k.c1) * inv;
    b(1, 1) = (a(0, 0) * k.c5 - a(0, 2) * k.c2 + a(0, 3) * k.c1) * inv;
    b(1, 2) = (-a(3, 0) * k.s5 + a(3, 2) * k.s2 - a(3, 3) * k.s1) * inv;
    b(1, 3) = (a(2, 0) * k.s5 - a(2, 2) * k.s2 + a(2, 3) * k.s1) * inv;

    b(2, 0) = (a(1, 0) * k.c4 - a(1, 1) * k.c2 + a(1, 3) * k.c0) * inv;
    b(2, 1) = (-a(0, 0) * k.c4 + a(0, 1) * k.c2 - a(0, 3) * k.c0) * inv;
    b(2, 2) = (a(3, 0) * k.s4 - a(3, 1) * k.s2 + a(3, 3) * k.s0) * inv;
    b(2, 3) = (-a(2, 0) * k.s4 + a(2, 1) * k.s2 - a(2, 3) * k.s0) * inv;

    b(3, 0) = (-a(1, 0) * k.c3 + a(1, 1) * k.c1 - a(1, 2) * k.c0) * inv;
    b(3, 1) = (a(0, 0) * k.c3 - a(0, 1) * k.c1 + a(0, 2) * k.c0) * inv;
    b(3, 2) = (-a(3, 0) * k.s3 + a(3, 1) * k.s1 - a(3, 2) * k.s0) * inv;
    b(3, 3) = (a(2, 0) * k.s3 - a(2, 1) * k.s1 + a(2, 2) * k.s0) * inv;
    return b;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 16; ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

std::ostream& operator<<(std::ostream& os, const Mat4& m) {
    for (std::size_t r = 0; r < 4; ++r) {
        os << (r == 0 ? "[[" : " [");
        for (std::size_t c = 0; c < 4; ++c) os << (c ? ", " : "") << m(r, c);
        os << (r == 3 ? "]]" : "]\n");
    }
    return os;
}

}  // namespace lorcat
