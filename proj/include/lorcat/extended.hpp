#pragma once

// Frames paired with an origin point. Rotations are automorphisms of an
// object, translations move its origin, and boosts change the frame. Hom-sets
// are no longer singletons once rotations are admitted.

#include <string>
#include <utility>

#include "lorcat/frames.hpp"

namespace lorcat {

struct ExtendedObject {
    std::string frame;
    Vec3 origin;

    friend bool operator==(const ExtendedObject&, const ExtendedObject&) = default;
};

enum class ExtendedKind { identity, boost, rotation, translation, composite };

const char* to_string(ExtendedKind k) noexcept;

struct ExtendedMorphism {
    ExtendedObject source;
    ExtendedObject target;
    ExtendedKind kind = ExtendedKind::identity;
    Mat4 matrix = Mat4::identity();
    /// Accumulated origin shift; target.origin = source.origin + translation.
    Vec3 translation;
};

ExtendedMorphism extended_identity(const ExtendedObject& a);
/// The unique frame morphism between a and b; both must share the origin point.
ExtendedMorphism extended_boost(const FrameSpace& space, const ExtendedObject& a, const ExtendedObject& b);
ExtendedMorphism extended_rotation(const ExtendedObject& a, const Mat3& r);
ExtendedMorphism extended_translation(const ExtendedObject& a, const Vec3& shift);

/// g ∘ f. Throws NonComposableError when endpoints differ.
ExtendedMorphism extended_compose(const ExtendedMorphism& g, const ExtendedMorphism& f, double tol = tolerance());

/// Returns (Λ ∘ id_a, Λ ∘ R) for the boost Λ: a → b. Both are morphisms a → b.
std::pair<ExtendedMorphism, ExtendedMorphism> extended_hom_count_witness(const FrameSpace& space,
                                                                         const ExtendedObject& a,
                                                                         const ExtendedObject& b,
                                                                         const Mat3& rotation);

}  // namespace lorcat
