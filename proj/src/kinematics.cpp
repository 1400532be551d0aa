#include "lorcat/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lorcat/errors.hpp"

namespace lorcat {

LightSpeed::LightSpeed(double c) : c_(c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        std::ostringstream msg;
        msg << "light speed must be positive and finite, got " << c;
        throw SuperluminalError(msg.str());
    }
}

const char* to_string(Regime r) noexcept { return r == Regime::classical ? "galilean" : "lorentz"; }

Velocity Velocity::classical(const Vec3& v) {
    if (!v.is_finite()) throw NonFiniteError("velocity must be finite");
    return {v, Regime::classical};
}

Velocity Velocity::relativistic(const Vec3& v, LightSpeed c) {
    require_subluminal(v, c);
    return {v, Regime::relativistic};
}

void require_subluminal(const Vec3& v, LightSpeed c) {
    if (!v.is_finite()) throw NonFiniteError("velocity must be finite");
    const double beta2 = dot(v, v) / c.squared();
    if (!(beta2 < 1.0)) {
        std::ostringstream msg;
        msg << "superluminal velocity: |v| = " << norm(v) << " >= c = " << c.value();
        throw SuperluminalError(msg.str());
    }
}

Mat4 BoostDecomposition::reassemble(LightSpeed c) const {
    return Mat4::from_rotation(rotation) * boost_matrix(velocity.vec(), c);
}

double lorentz_factor(const Vec3& v, LightSpeed c) {
    require_subluminal(v, c);
    const double beta = norm(v) / c.value();
    return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

Event galilean_apply(const Velocity& v, const Event& e) { return {e.t, e.x - v.vec() * e.t}; }

Mat4 galilean_matrix(const Vec3& v) {
    Mat4 m = Mat4::identity();
    m(1, 0) = -v.x;
    m(2, 0) = -v.y;
    m(3, 0) = -v.z;
    return m;
}

Mat4 galilean_matrix(const Velocity& v) { return galilean_matrix(v.vec()); }

namespace {

// (γ − 1)/‖v‖² rewritten as γ²/(c²(γ + 1)); finite at v = 0.
double projector_coefficient(double gamma, LightSpeed c) { return gamma * gamma / (c.squared() * (gamma + 1.0)); }

}  // namespace

Event boost_apply(const Velocity& vel, LightSpeed c, const Event& e) {
    const Vec3& v = vel.vec();
    const double gamma = lorentz_factor(v, c);
    const double vx = dot(v, e.x);
    const double k = projector_coefficient(gamma, c);
    return {gamma * (e.t - vx / c.squared()), e.x + v * (k * vx) - v * (gamma * e.t)};
}

Mat4 boost_matrix(const Vec3& v, LightSpeed c) {
    const double gamma = lorentz_factor(v, c);
    const double k = projector_coefficient(gamma, c);
    Mat4 m;
    m(0, 0) = gamma;
    for (std::size_t i = 0; i < 3; ++i) {
        m(0, i + 1) = -gamma * v[i] / c.squared();
        m(i + 1, 0) = -gamma * v[i];
        for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + k * v[i] * v[j];
    }
    return m;
}

Mat4 boost_matrix(const Velocity& v, LightSpeed c) { return boost_matrix(v.vec(), c); }

Velocity classical_add(const Velocity& u, const Velocity& v) { return Velocity::classical(u.vec() + v.vec()); }

Vec3 einstein_add(const Vec3& u, const Vec3& v, LightSpeed c) {
    require_subluminal(u, c);
    const double gv = lorentz_factor(v, c);
    const double uv = dot(u, v);
    const Vec3 num = v + u / gv + v * (gv / (c.squared() * (1.0 + gv)) * uv);
    return num / (1.0 + uv / c.squared());
}

Velocity einstein_add(const Velocity& u, const Velocity& v, LightSpeed c) {
    const Vec3 w = einstein_add(u.vec(), v.vec(), c);
    // Rounding can push |w| onto c for inputs within an ulp of the boundary.
    const double speed = norm(w);
    if (speed >= c.value()) return Velocity::relativistic(w * (std::nextafter(c.value(), 0.0) / speed), c);
    return Velocity::relativistic(w, c);
}

namespace {

// The textbook gyrogroup sum a ⊞ b, which is einstein_add with arguments reversed.
Vec3 gyro_sum(const Vec3& a, const Vec3& b, LightSpeed c) { return einstein_add(b, a, c); }

}  // namespace

Mat3 gyration(const Vec3& u, const Vec3& v, LightSpeed c) {
    require_subluminal(u, c);
    require_subluminal(v, c);
    // gyr[u, v] w = −(u ⊞ v) ⊞ (u ⊞ (v ⊞ w)); linear in w, so probe with a basis
    // scaled well inside the light sphere.
    const Vec3 neg_sum = -gyro_sum(u, v, c);
    const double probe = 0.5 * c.value();
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        Vec3 w;
        w[i] = probe;
        const Vec3 image = gyro_sum(neg_sum, gyro_sum(u, gyro_sum(v, w, c), c), c) / probe;
        for (std::size_t row = 0; row < 3; ++row) r(row, i) = image[row];
    }
    return r;
}

Mat3 gyration(const Velocity& u, const Velocity& v, LightSpeed c) { return gyration(u.vec(), v.vec(), c); }

namespace {

// Rescales into (ct, x) coordinates: D = S M S⁻¹ with S = diag(c, 1, 1, 1).
Mat4 dimensionless(const Mat4& m, LightSpeed c) {
    Mat4 d = m;
    for (std::size_t j = 1; j < 4; ++j) {
        d(0, j) *= c.value();
        d(j, 0) /= c.value();
    }
    return d;
}

}  // namespace

double lorentz_defect(const Mat4& m, LightSpeed c) {
    if (!m.is_finite()) return std::numeric_limits<double>::infinity();
    const Mat4 d = dimensionless(m, c);
    constexpr double g[4] = {1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) s += d(k, i) * g[k] * d(k, j);
            worst = std::max(worst, std::abs(s - (i == j ? g[i] : 0.0)));
        }
    return worst;
}

bool is_lorentz(const Mat4& m, LightSpeed c, double tol) { return lorentz_defect(m, c) < tol; }

Mat4 lorentz_inverse(const Mat4& m, LightSpeed c) {
    // (η⁻¹Mᵀη)ᵢⱼ = Mⱼᵢ ηⱼⱼ / ηᵢᵢ
    const double eta[4] = {c.squared(), -1.0, -1.0, -1.0};
    Mat4 inv;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) inv(i, j) = m(j, i) * eta[j] / eta[i];
    return inv;
}

Vec3 boost_velocity_of(const Mat4& m, LightSpeed c) {
    const double scale = -c.squared() / m(0, 0);
    return {m(0, 1) * scale, m(0, 2) * scale, m(0, 3) * scale};
}

BoostDecomposition decompose_lorentz(const Mat4& m, LightSpeed c, double tol) {
    const double defect = lorentz_defect(m, c);
    if (!(defect < tol)) {
        std::ostringstream msg;
        msg << "not a Lorentz transform (Minkowski defect " << defect << ")";
        throw NotLorentzError(msg.str());
    }
    if (!(m(0, 0) > 0.0)) throw NonOrthochronousError("Lorentz transform reverses time orientation");
    if (!(m.det() > 0.0)) throw NotLorentzError("Lorentz transform is improper (det < 0)");

    const Vec3 w = boost_velocity_of(m, c);
    BoostDecomposition out;
    out.velocity = Velocity::relativistic(w, c);
    out.rotation = (m * boost_matrix(-w, c)).spatial_block();
    return out;
}

double interval(const Event& e, LightSpeed c) { return c.squared() * e.t * e.t - dot(e.x, e.x); }

}  // namespace lorcat
