#pragma once

// The limit functor L: Lor → Gal, its left adjoint M: Gal → Lor, and the
// numerical c → ∞ convergence scan.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorcat/diagrams.hpp"
#include "lorcat/frames.hpp"

namespace lorcat {

enum class FunctorDirection { limit_L, embed_M };

/// Identity on frame ids; on morphisms F(f) is the unique hom between the images.
struct FunctorMap {
    FunctorDirection direction = FunctorDirection::limit_L;
    FrameSpace source;
    FrameSpace target;
};

/// Classical space with the same ids; each frame keeps its boost velocity and
/// drops any anchor rotation.
FrameSpace pair_spaces(const FrameSpace& lor_space);

/// L as a FunctorMap from `lor_space` to pair_spaces(lor_space).
FunctorMap limit_functor(const FrameSpace& lor_space);

/// M: same ids, velocities reused, rotations I. Throws SuperluminalEmbeddingError.
FunctorMap M_functor(const FrameSpace& gal_space, LightSpeed c);

/// Image of a morphism under F. Throws UnknownFrameError.
Morphism apply_functor(const FunctorMap& f, const Morphism& m);
Morphism L_on_morphism(const Morphism& f, const FrameSpace& paired);

struct FunctorReport {
    /// Endpoint mismatches between F(g∘f) and F(g)∘F(f), or F(id) and id.
    std::size_t structural_violations = 0;
    /// Numeric ‖F(g∘f) − F(g)∘F(f)‖∞ and ‖F(id) − id‖∞ (floating point only).
    double composition_deviation = 0.0;
    double identity_deviation = 0.0;
    /// Every hom-set has exactly one element on both sides and F maps it onto the other.
    bool full_and_faithful = false;
    std::size_t pairs_checked = 0;
    bool pass = false;
};

FunctorReport check_functor_laws(const FunctorMap& f, std::size_t samples, std::uint64_t seed,
                                 double tol = tolerance());

/// For each frame that is a limit of `d` in the source, its image is a limit of
/// the image diagram in the target.
bool check_limit_preservation(const FunctorMap& f, const Diagram& d, double tol = tolerance());

struct AdjunctionReport {
    bool bijection = false;
    double naturality_residual = 0.0;
    double unit_counit_residual = 0.0;
    double comma_residual = 0.0;
    std::size_t comma_objects = 0;
    bool pass = false;
};

/// Checks M ⊣ L: Lor(M A, B) ≅ Gal(A, L B), naturality squares, triangle
/// identities, and initiality of (M A, η_A) in sampled comma categories (A ⇒ L).
AdjunctionReport check_adjunction(const FunctorMap& M, const FunctorMap& L, std::size_t samples,
                                  std::uint64_t seed, double tol = tolerance());

struct ConvergenceRow {
    double c = 0.0;
    double morphism_deviation = 0.0;
    double addition_deviation = 0.0;
    double gyration_deviation = 0.0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    /// Least-squares log-log slopes; empty when fewer than two usable rows.
    std::optional<double> morphism_slope;
    std::optional<double> addition_slope;
    std::optional<double> gyration_slope;
};

/// Companion velocity: v rotated a quarter turn about an axis perpendicular to v.
Vec3 companion_velocity(const Vec3& v);

/// Throws SuperluminalError when ‖v‖ ≥ min(c_values) and InvariantError when
/// c_values is not strictly increasing.
ConvergenceTable limit_scan(const Vec3& v, const Event& e, const std::vector<double>& c_values);

/// Least squares slope of log y against log x, ignoring y below 1e2·ε.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lorcat
