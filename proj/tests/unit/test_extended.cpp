#include <doctest.h>

#include "lorcat/errors.hpp"
#include "lorcat/extended.hpp"

using namespace lorcat;

namespace {

FrameSpace space() {
    return FrameSpaceBuilder(Regime::relativistic).add("lab", {}).add("rocket", {0.6, 0, 0}).build();
}

}  // namespace

TEST_CASE("boosts need a shared origin") {
    const FrameSpace s = space();
    const ExtendedObject a{"lab", {}}, b{"rocket", {}}, far{"rocket", {1, 0, 0}};
    const ExtendedMorphism f = extended_boost(s, a, b);
    CHECK(f.kind == ExtendedKind::boost);
    CHECK(max_abs_diff(f.matrix, hom(s, "lab", "rocket").matrix) < 1e-15);
    CHECK_THROWS_AS(extended_boost(s, a, far), InvariantError);
}

TEST_CASE("rotations are automorphisms and hom-sets grow") {
    const FrameSpace s = space();
    const ExtendedObject a{"lab", {}}, b{"rocket", {}};
    const Mat3 r = rotation_from_axis_angle({0, 0, 1}, 0.5);
    const ExtendedMorphism rot = extended_rotation(a, r);
    CHECK(rot.source == a);
    CHECK(rot.target == a);
    CHECK(rot.kind == ExtendedKind::rotation);

    const auto [plain, turned] = extended_hom_count_witness(s, a, b, r);
    CHECK(plain.source == turned.source);
    CHECK(plain.target == turned.target);
    CHECK(max_abs_diff(plain.matrix, turned.matrix) > 0.1);

    Mat3 bad = Mat3::identity();
    bad(0, 0) = 2;
    CHECK_THROWS_AS(extended_rotation(a, bad), InvariantError);
}

TEST_CASE("translations move the origin and compose additively") {
    const ExtendedObject a{"lab", {1, 2, 3}};
    const ExtendedMorphism t1 = extended_translation(a, {1, 0, 0});
    CHECK(t1.target.origin == Vec3{2, 2, 3});
    const ExtendedMorphism t2 = extended_translation(t1.target, {0, -2, 0});
    const ExtendedMorphism t = extended_compose(t2, t1);
    CHECK(t.kind == ExtendedKind::translation);
    CHECK(t.translation == Vec3{1, -2, 0});
    CHECK(t.target.origin == Vec3{2, 0, 3});
    CHECK_THROWS_AS(extended_compose(t1, t2), NonComposableError);
}

TEST_CASE("identity laws and mixed composites") {
    const FrameSpace s = space();
    const ExtendedObject a{"lab", {}}, b{"rocket", {}};
    const ExtendedMorphism f = extended_boost(s, a, b);
    const ExtendedMorphism left = extended_compose(extended_identity(b), f);
    const ExtendedMorphism right = extended_compose(f, extended_identity(a));
    CHECK(left.matrix == f.matrix);
    CHECK(right.matrix == f.matrix);
    CHECK(left.kind == ExtendedKind::boost);

    const Mat3 r = rotation_from_axis_angle({1, 0, 0}, 0.3);
    const ExtendedMorphism rr = extended_compose(extended_rotation(a, r), extended_rotation(a, r));
    CHECK(rr.kind == ExtendedKind::rotation);
    CHECK(max_abs_diff(rr.matrix, Mat4::from_rotation(rotation_from_axis_angle({1, 0, 0}, 0.6))) < 1e-12);
    CHECK(extended_compose(f, extended_rotation(a, r)).kind == ExtendedKind::composite);
}
