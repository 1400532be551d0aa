#pragma once

// Galilean and Lorentz boosts, Einstein velocity addition and the Thomas
// rotation (gyration), plus polar decomposition of proper orthochronous
// Lorentz transforms into rotation · boost.

#include "lorcat/vecmat.hpp"

namespace lorcat {

/// Speed of light; strictly positive and finite.
class LightSpeed {
public:
    constexpr LightSpeed() = default;
    explicit LightSpeed(double c);

    constexpr double value() const noexcept { return c_; }
    constexpr double squared() const noexcept { return c_ * c_; }

    friend constexpr bool operator==(const LightSpeed&, const LightSpeed&) = default;

private:
    double c_ = 1.0;
};

enum class Regime { classical, relativistic };

const char* to_string(Regime r) noexcept;

/// A 3-velocity tagged with the regime it was validated for.
class Velocity {
public:
    constexpr Velocity() = default;

    /// Any finite vector.
    static Velocity classical(const Vec3& v);
    /// Throws SuperluminalError unless ‖v‖ < c.
    static Velocity relativistic(const Vec3& v, LightSpeed c);

    constexpr const Vec3& vec() const noexcept { return v_; }
    constexpr Regime regime() const noexcept { return regime_; }
    double speed() const { return norm(v_); }

    Velocity operator-() const {
        Velocity n = *this;
        n.v_ = -v_;
        return n;
    }

private:
    constexpr Velocity(const Vec3& v, Regime r) : v_(v), regime_(r) {}

    Vec3 v_;
    Regime regime_ = Regime::classical;
};

/// Rotation · boost factorisation of a proper orthochronous Lorentz transform.
struct BoostDecomposition {
    Mat3 rotation = Mat3::identity();
    Velocity velocity;

    /// rotation-as-Mat4 · boost_matrix(velocity, c)
    Mat4 reassemble(LightSpeed c) const;
};

/// Throws SuperluminalError when ‖v‖ ≥ c.
void require_subluminal(const Vec3& v, LightSpeed c);

double lorentz_factor(const Vec3& v, LightSpeed c);
inline double lorentz_factor(const Velocity& v, LightSpeed c) { return lorentz_factor(v.vec(), c); }

/// (t, x − v t)
Event galilean_apply(const Velocity& v, const Event& e);
Mat4 galilean_matrix(const Velocity& v);
Mat4 galilean_matrix(const Vec3& v);

Event boost_apply(const Velocity& v, LightSpeed c, const Event& e);
Mat4 boost_matrix(const Velocity& v, LightSpeed c);
Mat4 boost_matrix(const Vec3& v, LightSpeed c);

Velocity classical_add(const Velocity& u, const Velocity& v);

/// u ⊕ v: velocity of C relative to A when B moves with v relative to A and
/// C moves with u relative to B, so that B(u)·B(v) = R · B(u ⊕ v).
Velocity einstein_add(const Velocity& u, const Velocity& v, LightSpeed c);
Vec3 einstein_add(const Vec3& u, const Vec3& v, LightSpeed c);

/// Thomas rotation R with B(u)·B(v) = R · B(u ⊕ v).
Mat3 gyration(const Velocity& u, const Velocity& v, LightSpeed c);
Mat3 gyration(const Vec3& u, const Vec3& v, LightSpeed c);

/// max‖Sᵀ(MᵀηM − η)S‖∞ with S = diag(1/c, 1, 1, 1); dimensionless Minkowski defect.
double lorentz_defect(const Mat4& m, LightSpeed c);
bool is_lorentz(const Mat4& m, LightSpeed c, double tol = tolerance());

/// η⁻¹ Mᵀ η: the group inverse of a Lorentz transform.
Mat4 lorentz_inverse(const Mat4& m, LightSpeed c);

/// Velocity read off the top row: wᵢ = −c² M₀ᵢ / M₀₀. Unaffected by left rotations.
Vec3 boost_velocity_of(const Mat4& m, LightSpeed c);

/// Throws NotLorentzError / NonOrthochronousError on invalid input.
BoostDecomposition decompose_lorentz(const Mat4& m, LightSpeed c, double tol = tolerance());

/// c²t² − ‖x‖²
double interval(const Event& e, LightSpeed c);

}  // namespace lorcat
