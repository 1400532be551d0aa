#pragma once

// Small fixed-size linear algebra for spacetime kinematics.
//
// Sign conventions live here and nowhere else: 4-vectors and 4x4 transforms
// use (t, x, y, z) order, and the Minkowski form is eta = diag(c^2, -1, -1, -1).
// Row 0 of a Mat4 is the time row; the lower-right 3x3 block is space-space.

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace lorcat {

/// Global absolute tolerance; defaults to 1e-9. Set once at startup.
double tolerance() noexcept;
void set_tolerance(double tol);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

    bool is_finite() const noexcept { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
double max_abs(const Vec3& a);

std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// Row-major 3x3 matrix.
class Mat3 {
public:
    constexpr Mat3() = default;
    explicit constexpr Mat3(const std::array<double, 9>& entries) : m_(entries) {}

    static constexpr Mat3 identity() { return Mat3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }

    constexpr double operator()(std::size_t r, std::size_t c) const { return m_[r * 3 + c]; }
    constexpr double& operator()(std::size_t r, std::size_t c) { return m_[r * 3 + c]; }

    const std::array<double, 9>& entries() const noexcept { return m_; }

    Mat3 transpose() const;
    double det() const;
    Vec3 apply(const Vec3& v) const;

    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend Mat3 operator-(const Mat3& a, const Mat3& b);
    friend bool operator==(const Mat3&, const Mat3&) = default;

private:
    std::array<double, 9> m_{};
};

double max_abs_diff(const Mat3& a, const Mat3& b);

/// ‖MᵀM − I‖∞ < tol and |det M − 1| ≤ tol.
bool is_rotation(const Mat3& m, double tol = tolerance());
/// max(‖MᵀM − I‖∞, |det M − 1|); zero for an exact proper rotation.
double rotation_defect(const Mat3& m);

/// Rodrigues rotation about `axis` (normalised internally) by `angle` radians.
/// Throws ZeroAxisError when ‖axis‖ ≤ tol.
Mat3 rotation_from_axis_angle(const Vec3& axis, double angle, double tol = tolerance());

/// Rotation angle in [0, π] recovered from the trace.
double rotation_angle(const Mat3& r);

/// Spacetime displacement (Δt, Δx).
struct Event {
    double t = 0.0;
    Vec3 x;

    Event& operator+=(const Event& o) { t += o.t; x += o.x; return *this; }
    friend Event operator+(Event a, const Event& b) { return a += b; }
    friend Event operator-(const Event& a, const Event& b) { return {a.t - b.t, a.x - b.x}; }
    friend Event operator*(double s, const Event& e) { return {s * e.t, s * e.x}; }
    friend bool operator==(const Event&, const Event&) = default;

    bool is_finite() const noexcept { return std::isfinite(t) && x.is_finite(); }
};

double max_abs_diff(const Event& a, const Event& b);
std::ostream& operator<<(std::ostream& os, const Event& e);

/// Row-major 4x4 matrix in (t, x, y, z) order.
class Mat4 {
public:
    constexpr Mat4() = default;
    explicit constexpr Mat4(const std::array<double, 16>& entries) : m_(entries) {}

    static constexpr Mat4 identity() {
        return Mat4({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    }
    /// Embeds a spatial rotation with a trivial time row and column.
    static Mat4 from_rotation(const Mat3& r);

    constexpr double operator()(std::size_t r, std::size_t c) const { return m_[r * 4 + c]; }
    constexpr double& operator()(std::size_t r, std::size_t c) { return m_[r * 4 + c]; }

    const std::array<double, 16>& entries() const noexcept { return m_; }

    Mat3 spatial_block() const;
    Mat4 transpose() const;
    double det() const;
    bool is_finite() const noexcept;

    Event apply(const Event& e) const;

    friend Mat4 operator+(const Mat4& a, const Mat4& b);
    friend Mat4 operator-(const Mat4& a, const Mat4& b);
    friend Mat4 operator*(double s, const Mat4& a);
    friend bool operator==(const Mat4&, const Mat4&) = default;

private:
    std::array<double, 16> m_{};
};

Mat4 mat4_mul(const Mat4& a, const Mat4& b);
inline Mat4 operator*(const Mat4& a, const Mat4& b) { return mat4_mul(a, b); }
inline Event operator*(const Mat4& m, const Event& e) { return m.apply(e); }

/// Cofactor inverse. Throws SingularMatrixError when |det| ≤ tol.
Mat4 mat4_invert(const Mat4& m, double tol = tolerance());

/// Entrywise max-norm of the difference.
double max_abs_diff(const Mat4& a, const Mat4& b);

std::ostream& operator<<(std::ostream& os, const Mat4& m);

}  // namespace lorcat
