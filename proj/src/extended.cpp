#include "lorcat/extended.hpp"

#include "lorcat/errors.hpp"

namespace lorcat {

const char* to_string(ExtendedKind k) noexcept {
    switch (k) {
        case ExtendedKind::identity: return "identity";
        case ExtendedKind::boost: return "boost";
        case ExtendedKind::rotation: return "rotation";
        case ExtendedKind::translation: return "translation";
        case ExtendedKind::composite: return "composite";
    }
    return "?";
}

ExtendedMorphism extended_identity(const ExtendedObject& a) { return {a, a, ExtendedKind::identity, Mat4::identity(), {}}; }

ExtendedMorphism extended_boost(const FrameSpace& space, const ExtendedObject& a, const ExtendedObject& b) {
    if (!(a.origin == b.origin)) throw InvariantError("a boost does not move the origin; use a translation");
    return {a, b, ExtendedKind::boost, hom(space, a.frame, b.frame).matrix, {}};
}

ExtendedMorphism extended_rotation(const ExtendedObject& a, const Mat3& r) {
    if (!is_rotation(r)) throw InvariantError("not a proper rotation");
    return {a, a, ExtendedKind::rotation, Mat4::from_rotation(r), {}};
}

ExtendedMorphism extended_translation(const ExtendedObject& a, const Vec3& shift) {
    if (!shift.is_finite()) throw NonFiniteError("translation must be finite");
    return {a, {a.frame, a.origin + shift}, ExtendedKind::translation, Mat4::identity(), shift};
}

namespace {

bool same_object(const ExtendedObject& x, const ExtendedObject& y, double tol) {
    return x.frame == y.frame && max_abs(x.origin - y.origin) <= tol;
}

}  // namespace

ExtendedMorphism extended_compose(const ExtendedMorphism& g, const ExtendedMorphism& f, double tol) {
    if (!same_object(g.source, f.target, tol)) throw NonComposableError("extended morphisms are not composable");
    if (f.kind == ExtendedKind::identity) return g;
    if (g.kind == ExtendedKind::identity) return f;

    ExtendedMorphism out{f.source, g.target, ExtendedKind::composite, g.matrix * f.matrix,
                         g.translation + f.translation};
    if (f.kind == g.kind && (f.kind == ExtendedKind::rotation || f.kind == ExtendedKind::translation)) {
        out.kind = f.kind;
    }
    return out;
}

std::pair<ExtendedMorphism, ExtendedMorphism> extended_hom_count_witness(const FrameSpace& space,
                                                                         const ExtendedObject& a,
                                                                         const ExtendedObject& b,
                                                                         const Mat3& rotation) {
    const ExtendedMorphism boost = extended_boost(space, a, b);
    return {extended_compose(boost, extended_identity(a)), extended_compose(boost, extended_rotation(a, rotation))};
}

}  // namespace lorcat
