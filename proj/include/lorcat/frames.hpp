#pragma once

// The categories Gal and Lor. Objects are inertial frames, each anchored by
// its transform from a distinguished anchor frame; the unique morphism a → b
// is L_b · L_a⁻¹, so every hom-set is a singleton.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lorcat/kinematics.hpp"
#include "lorcat/vecmat.hpp"

namespace lorcat {

struct Frame {
    std::string id;
    /// Declared kinematics of the morphism anchor → this frame.
    BoostDecomposition anchor;
    /// Stored anchor transform used for all morphism arithmetic.
    Mat4 matrix;
};

class FrameSpace {
public:
    Regime regime() const noexcept { return regime_; }
    LightSpeed c() const noexcept { return c_; }
    const std::string& anchor_id() const noexcept { return frames_[anchor_].id; }
    std::span<const Frame> frames() const noexcept { return frames_; }
    std::size_t size() const noexcept { return frames_.size(); }

    bool contains(std::string_view id) const;
    /// Throws UnknownFrameError.
    const Frame& frame(std::string_view id) const;
    std::size_t index_of(std::string_view id) const;
    std::vector<std::string> ids() const;

    /// Copy whose stored matrix for `id` is offset by `delta`; declared
    /// kinematics are left as they were. Used for fault injection.
    FrameSpace with_perturbed_anchor(std::string_view id, const Mat4& delta) const;

    /// Group inverse of a transform in this regime: η⁻¹Mᵀη for Lorentz,
    /// Γ(−v) with v read from the time column for Galilean.
    Mat4 group_inverse(const Mat4& m) const;

private:
    friend class FrameSpaceBuilder;
    FrameSpace() = default;

    Regime regime_ = Regime::relativistic;
    LightSpeed c_;
    std::vector<Frame> frames_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t anchor_ = 0;
};

/// Assembles and validates a FrameSpace. The first frame added is the anchor
/// unless `anchor()` names another; the anchor must be at rest and unrotated.
class FrameSpaceBuilder {
public:
    explicit FrameSpaceBuilder(Regime regime, LightSpeed c = LightSpeed{});

    FrameSpaceBuilder& anchor(std::string id);
    FrameSpaceBuilder& add(std::string id, const Vec3& velocity, const Mat3& rotation = Mat3::identity());
    /// Adds `delta` to the stored matrix of an already-added frame.
    FrameSpaceBuilder& perturb(std::string_view id, const Mat4& delta);

    /// Throws InvariantError / SuperluminalError naming the offending frame.
    FrameSpace build() const;

private:
    struct Pending {
        std::string id;
        Vec3 velocity;
        Mat3 rotation;
        std::optional<Mat4> delta;
    };

    Regime regime_;
    LightSpeed c_;
    std::optional<std::string> anchor_;
    std::vector<Pending> pending_;
};

/// A morphism of Gal or Lor. Both are represented by their 4x4 matrix.
struct Morphism {
    std::string source;
    std::string target;
    Regime regime = Regime::relativistic;
    LightSpeed c;
    Mat4 matrix = Mat4::identity();

    /// Gal: the boost velocity (−time column). Lor: top-row boost velocity.
    Vec3 velocity() const;
    /// Lor: checked polar decomposition. Gal: (I, velocity).
    BoostDecomposition decomposition(double tol = tolerance()) const;
};

Morphism identity_morphism(const FrameSpace& space, std::string_view id);
/// The unique morphism a → b. Throws UnknownFrameError.
Morphism hom(const FrameSpace& space, std::string_view a, std::string_view b);
/// g ∘ f. Throws NonComposableError unless source(g) = target(f).
Morphism compose(const Morphism& g, const Morphism& f);
Morphism inverse(const Morphism& f);

struct LawResult {
    std::string law;
    double worst = 0.0;
    std::string where;
};

struct AxiomReport {
    std::vector<LawResult> laws;
    double worst = 0.0;
    std::string worst_location;
    bool pass = true;
};

/// Samples frame tuples and measures identity, associativity, singleton-hom
/// closure, inverse and anchor-consistency deviations.
AxiomReport check_category_axioms(const FrameSpace& space, std::size_t samples, std::uint64_t seed,
                                  double tol = tolerance());

}  // namespace lorcat
