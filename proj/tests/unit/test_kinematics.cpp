#include <doctest.h>

#include <cmath>

#include "lorcat/errors.hpp"
#include "lorcat/kinematics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lorcat;

namespace {

const LightSpeed kOne{};

Velocity rel(const Vec3& v, LightSpeed c = kOne) { return Velocity::relativistic(v, c); }
Velocity cls(const Vec3& v) { return Velocity::classical(v); }

double mink_defect_raw(const Mat4& m, double c) {
    // ‖MᵀηM − η‖∞ in (t, x) coordinates with η = diag(c², −1, −1, −1).
    const double eta[4] = {c * c, -1, -1, -1};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m(k, i) * eta[k] * m(k, j);
            worst = std::max(worst, std::abs(s - (i == j ? eta[i] : 0.0)));
        }
    return worst;
}

}  // namespace

TEST_CASE("light speed and velocity validation") {
    CHECK_THROWS_AS(LightSpeed(0.0), SuperluminalError);
    CHECK_THROWS_AS(LightSpeed(-1.0), SuperluminalError);
    CHECK_THROWS_AS(rel({1, 0, 0}), SuperluminalError);      // boundary ‖v‖ = c
    CHECK_THROWS_AS(rel({0.8, 0.7, 0}), SuperluminalError);
    CHECK_NOTHROW(rel({0.999999, 0, 0}));
    CHECK_NOTHROW(cls({1e6, 0, 0}));
    CHECK_THROWS_AS(cls({NAN, 0, 0}), NonFiniteError);
}

TEST_CASE("lorentz_factor") {
    CHECK(lorentz_factor(rel({}), kOne) == 1.0);
    CHECK(lorentz_factor(rel({0.6, 0, 0}), kOne) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(lorentz_factor(rel({0, 0.8, 0}), kOne) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(lorentz_factor(Vec3{0, 0, 6}, LightSpeed(10)) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK_THROWS_AS(lorentz_factor(Vec3{2, 0, 0}, kOne), SuperluminalError);
}

TEST_CASE("galilean_apply") {
    const Event e{2, {5, 0, 0}};
    CHECK(galilean_apply(cls({}), e) == e);
    CHECK(galilean_apply(cls({1, 0, 0}), e) == Event{2, {3, 0, 0}});
    CHECK(galilean_apply(cls({0, 2, 0}), Event{1, {1, 1, 1}}) == Event{1, {1, -1, 1}});
}

TEST_CASE("boost_apply") {
    const Event e{0.3, {1, -2, 0.5}};
    CHECK(boost_apply(rel({}), kOne, e) == e);

    const Event a = boost_apply(rel({0.6, 0, 0}), kOne, Event{1, {}});
    CHECK(max_abs_diff(a, Event{1.25, {-0.75, 0, 0}}) < 1e-15);

    const Event b = boost_apply(rel({0.6, 0, 0}), kOne, Event{0, {0, 1, 0}});
    CHECK(max_abs_diff(b, Event{0, {0, 1, 0}}) < 1e-15);

    CHECK_THROWS_AS(boost_apply(rel({0.9, 0, 0}), LightSpeed(0.5), e), SuperluminalError);
}

TEST_CASE("boost_matrix agrees with boost_apply and the textbook matrix") {
    testing::Gen gen(21);
    for (int i = 0; i < 200; ++i) {
        const double c = gen.uniform(0.5, 3.0);
        const LightSpeed lc(c);
        const Vec3 v = gen.velocity(0.99 * c);
        const Event e = gen.event(2.0);
        const Mat4 m = boost_matrix(v, lc);
        REQUIRE(max_abs_diff(m * e, boost_apply(rel(v, lc), lc, e)) < 1e-12);
        REQUIRE(max_abs_diff(m, oracle::to_mat4(oracle::boost(v, c))) < 1e-12);
        REQUIRE(mink_defect_raw(m, c) < 1e-9 * c * c);
    }
    CHECK(boost_matrix(Vec3{}, kOne) == Mat4::identity());

    // First column: image of (1, 0̄) is (γ, −γv).
    const Vec3 v{0.2, -0.4, 0.1};
    const Event col = boost_matrix(v, kOne) * Event{1, {}};
    const double g = lorentz_factor(v, kOne);
    CHECK(max_abs_diff(col, Event{g, v * -g}) < 1e-15);
}

TEST_CASE("galilean_matrix") {
    CHECK(galilean_matrix(Vec3{}) == Mat4::identity());
    const Vec3 u{1.5, -2, 0.25}, v{0.5, 3, -1};
    CHECK(max_abs_diff(galilean_matrix(u) * galilean_matrix(v), galilean_matrix(u + v)) < 1e-12);

    // Entrywise convergence of boosts to Galilean matrices as c grows.
    const Vec3 w{1, 0.5, -0.25};
    double previous = INFINITY;
    for (double c : {10.0, 100.0, 1000.0, 10000.0}) {
        const double d = max_abs_diff(boost_matrix(w, LightSpeed(c)), galilean_matrix(w));
        CHECK(d < previous);
        previous = d;
    }
    CHECK(previous < 1e-7);
}

TEST_CASE("time-space entries of boost - galilean shrink like 1/c^2") {
    const Vec3 v{1, 0, 0};
    std::vector<double> cs, dev;
    for (double c : {10.0, 100.0, 1000.0, 10000.0, 100000.0}) {
        const Mat4 d = boost_matrix(v, LightSpeed(c)) - galilean_matrix(v);
        cs.push_back(std::log(c));
        dev.push_back(std::log(std::abs(d(0, 1))));
    }
    const double slope = (dev.back() - dev.front()) / (cs.back() - cs.front());
    CHECK(slope >= -2.2);
    CHECK(slope <= -1.8);
}

TEST_CASE("classical_add") {
    const Velocity u = cls({1, 2, 3});
    CHECK(classical_add(u, cls({})).vec() == u.vec());
    CHECK(classical_add(cls({1, 0, 0}), cls({0, 1, 0})).vec() == Vec3{1, 1, 0});
    CHECK(classical_add(u, -u).vec() == Vec3{});
}

TEST_CASE("einstein_add matches the matrix-composition oracle") {
    const Vec3 u{0.5, 0, 0};
    CHECK(einstein_add(rel(u), rel({}), kOne).vec() == u);
    CHECK(max_abs(einstein_add(rel({0.3, -0.4, 0.2}), rel({-0.3, 0.4, -0.2}), kOne).vec()) < 1e-15);

    const Vec3 parallel = einstein_add(rel(u), rel(u), kOne).vec();
    CHECK(max_abs(parallel - Vec3{0.8, 0, 0}) < 1e-12);

    const Vec3 a{0.5, 0, 0}, b{0, 0.5, 0};
    const Vec3 ab = einstein_add(rel(a), rel(b), kOne).vec();
    const Vec3 ba = einstein_add(rel(b), rel(a), kOne).vec();
    const Vec3 ab_oracle = oracle::top_row_velocity(oracle::mul(oracle::boost(a, 1), oracle::boost(b, 1)), 1);
    const Vec3 ba_oracle = oracle::top_row_velocity(oracle::mul(oracle::boost(b, 1), oracle::boost(a, 1)), 1);
    CHECK(max_abs(ab - ab_oracle) < 1e-12);
    CHECK(max_abs(ba - ba_oracle) < 1e-12);
    CHECK(max_abs(ab - ba) > 0.05);  // non-commutative

    testing::Gen gen(22);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 x = gen.velocity(0.99), y = gen.velocity(0.99);
        const Vec3 w = einstein_add(rel(x), rel(y), kOne).vec();
        REQUIRE(norm(w) < 1.0);
        REQUIRE(max_abs(w - oracle::top_row_velocity(oracle::mul(oracle::boost(x, 1), oracle::boost(y, 1)), 1)) <
                1e-10);
    }
    // Extreme inputs stay subluminal.
    const Vec3 fast{0.99, 0, 0};
    CHECK(norm(einstein_add(rel(fast), rel(fast), kOne).vec()) < 1.0);
    CHECK(norm(einstein_add(rel({0.99, 0, 0}), rel({0, 0.99, 0}), kOne).vec()) < 1.0);
}

TEST_CASE("gyration") {
    SUBCASE("collinear boosts compose without rotation") {
        const Mat3 r = gyration(Vec3{0.3, 0.1, 0}, Vec3{0.6, 0.2, 0}, kOne);
        CHECK(max_abs_diff(r, Mat3::identity()) < 1e-14);
    }
    SUBCASE("v and -v") {
        const Vec3 v{0.4, -0.5, 0.6};
        CHECK(max_abs_diff(gyration(v, -v, kOne), Mat3::identity()) < 1e-12);
    }
    SUBCASE("small perpendicular boosts rotate by about -beta^2/2 about z") {
        // Angles from the matrix-composition oracle B(u)B(v)B(u⊕v)⁻¹.
        const double betas[3] = {0.01, 0.02, 0.05};
        for (double b : betas) {
            const Vec3 u{b, 0, 0}, v{0, b, 0};
            const Mat3 want = oracle::rotation_part(oracle::mul(oracle::boost(u, 1), oracle::boost(v, 1)), 1);
            const Mat3 r = gyration(u, v, kOne);
            CHECK(max_abs_diff(r, want) < 1e-14);
            const double angle = std::atan2(r(1, 0), r(0, 0));
            CHECK(angle / (b * b) == doctest::Approx(-0.5).epsilon(0.01));
        }
        // Frozen oracle values of the signed angle.
        CHECK(std::atan2(gyration(Vec3{0.01, 0, 0}, Vec3{0, 0.01, 0}, kOne)(1, 0),
                         gyration(Vec3{0.01, 0, 0}, Vec3{0, 0.01, 0}, kOne)(0, 0)) ==
              doctest::Approx(-5.000250014584269e-05).epsilon(1e-10));
        CHECK(std::atan2(gyration(Vec3{0.05, 0, 0}, Vec3{0, 0.05, 0}, kOne)(1, 0),
                         gyration(Vec3{0.05, 0, 0}, Vec3{0, 0.05, 0}, kOne)(0, 0)) ==
              doctest::Approx(-1.2515647823142866e-03).epsilon(1e-10));
    }
    SUBCASE("perpendicular Wigner angle closed form") {
        const Mat3 r = gyration(Vec3{0, 0.5, 0}, Vec3{-0.5, 0, 0}, kOne);
        CHECK(rotation_angle(r) == doctest::Approx(oracle::perpendicular_wigner_angle(0.5, 0.5, 1)).epsilon(1e-12));
    }
    SUBCASE("composition law on random pairs") {
        testing::Gen gen(23);
        for (int i = 0; i < 1000; ++i) {
            const Vec3 u = gen.velocity(0.99), v = gen.velocity(0.99);
            const Mat3 r = gyration(u, v, kOne);
            REQUIRE(is_rotation(r));
            const Mat4 lhs = Mat4::from_rotation(r) * boost_matrix(einstein_add(u, v, kOne), kOne);
            REQUIRE(max_abs_diff(lhs, boost_matrix(u, kOne) * boost_matrix(v, kOne)) < 1e-9);
        }
    }
}

TEST_CASE("decompose_lorentz") {
    const Vec3 v{0.3, 0.2, -0.6};
    const BoostDecomposition pure = decompose_lorentz(boost_matrix(v, kOne), kOne);
    CHECK(max_abs_diff(pure.rotation, Mat3::identity()) < 1e-12);
    CHECK(max_abs(pure.velocity.vec() - v) < 1e-12);

    const Mat3 r = rotation_from_axis_angle({1, -1, 2}, 0.7);
    const BoostDecomposition rot = decompose_lorentz(Mat4::from_rotation(r), kOne);
    CHECK(max_abs_diff(rot.rotation, r) < 1e-15);
    CHECK(max_abs(rot.velocity.vec()) == 0.0);

    testing::Gen gen(24);
    for (int i = 0; i < 300; ++i) {
        const Vec3 a = gen.velocity(0.95), b = gen.velocity(0.95);
        const BoostDecomposition d = decompose_lorentz(boost_matrix(a, kOne) * boost_matrix(b, kOne), kOne);
        REQUIRE(max_abs_diff(d.rotation, gyration(a, b, kOne)) < 1e-9);
        REQUIRE(max_abs(d.velocity.vec() - einstein_add(a, b, kOne)) < 1e-10);
        REQUIRE(max_abs_diff(d.reassemble(kOne), boost_matrix(a, kOne) * boost_matrix(b, kOne)) < 1e-9);
    }

    Mat4 broken = boost_matrix(v, kOne);
    broken(1, 2) += 1e-3;
    CHECK_THROWS_AS(decompose_lorentz(broken, kOne), NotLorentzError);

    Mat4 flipped = boost_matrix(v, kOne);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) flipped(i, j) = -flipped(i, j);
    CHECK_THROWS_AS(decompose_lorentz(flipped, kOne), NonOrthochronousError);
}

TEST_CASE("lorentz_defect is scale free in c") {
    const LightSpeed c(3e8);
    const Mat4 m = boost_matrix(Vec3{1e8, -2e7, 5e6}, c);
    CHECK(lorentz_defect(m, c) < 1e-12);
    CHECK(is_lorentz(lorentz_inverse(m, c) * m, c));
    // Compare in (ct, x) units: time-space entries carry factors of c.
    const Mat4 p = lorentz_inverse(m, c) * m;
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double scale = 1.0;
            if (i == 0 && j != 0) scale = c.value();
            if (i != 0 && j == 0) scale = 1.0 / c.value();
            worst = std::max(worst, std::abs(p(i, j) * scale - (i == j ? 1.0 : 0.0)));
        }
    CHECK(worst < 1e-9);
}

TEST_CASE("interval") {
    CHECK(interval(Event{}, kOne) == 0.0);
    CHECK(interval(Event{1, {1, 0, 0}}, kOne) == 0.0);
    CHECK(interval(Event{2, {1, 0, 0}}, LightSpeed(3)) == 35.0);

    testing::Gen gen(25);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 v = gen.velocity(0.99);
        const Event e = gen.event(5.0);
        const double before = interval(e, kOne);
        const double after = interval(boost_apply(rel(v), kOne, e), kOne);
        const double scale = e.t * e.t + dot(e.x, e.x);
        REQUIRE(std::abs(after - before) <= 1e-9 * scale);
        REQUIRE(galilean_apply(cls(v), e).t == e.t);
    }
}

TEST_CASE("linearity") {
    testing::Gen gen(26);
    for (int i = 0; i < 200; ++i) {
        const Vec3 v = gen.velocity(0.9);
        const Event e1 = gen.event(), e2 = gen.event();
        const double alpha = gen.uniform(-3, 3);
        const Event lhs = boost_apply(rel(v), kOne, alpha * e1 + e2);
        const Event rhs = alpha * boost_apply(rel(v), kOne, e1) + boost_apply(rel(v), kOne, e2);
        REQUIRE(max_abs_diff(lhs, rhs) < 1e-9);
        const Event glhs = galilean_apply(cls(v), alpha * e1 + e2);
        const Event grhs = alpha * galilean_apply(cls(v), e1) + galilean_apply(cls(v), e2);
        REQUIRE(max_abs_diff(glhs, grhs) < 1e-12);
    }
}
