#pragma once

// Finite index categories presented by generators and relations, diagrams
// into Gal/Lor, cones, and the limit checker.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorcat/frames.hpp"

namespace lorcat {

struct IndexArrow {
    std::string id;
    std::string source;
    std::string target;
};

/// Two arrow paths declared equal. Paths list arrow ids in application order:
/// {"f", "g"} means g ∘ f. An empty side denotes the identity and is only
/// allowed when the other side is a loop.
struct IndexRelation {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
};

/// A morphism class, represented by its shortest path (arrow indices).
struct IndexMorphism {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> path;
};

inline constexpr std::size_t kDefaultClassCap = 64;

class IndexCategory {
public:
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<IndexArrow>& arrows() const noexcept { return arrows_; }
    const std::vector<IndexRelation>& relations() const noexcept { return relations_; }
    const std::vector<IndexMorphism>& morphisms() const noexcept { return morphisms_; }
    std::size_t path_bound() const noexcept { return path_bound_; }

    std::size_t object_index(std::string_view id) const;
    /// Class of the identity on object `obj`.
    std::size_t identity(std::size_t obj) const { return identities_[obj]; }
    /// Class of g ∘ f; nullopt when the composite exceeds the path bound.
    std::optional<std::size_t> compose(std::size_t g, std::size_t f) const;
    /// Arrow indices of a relation side.
    const std::vector<std::size_t>& relation_path(std::size_t relation, bool lhs) const;
    /// Domain object of a relation (both sides share it).
    std::size_t relation_source(std::size_t relation) const { return relation_sources_[relation]; }

private:
    friend IndexCategory build_index(std::vector<std::string>, std::vector<IndexArrow>, std::vector<IndexRelation>,
                                     std::size_t, std::size_t);

    std::vector<std::string> objects_;
    std::vector<IndexArrow> arrows_;
    std::vector<IndexRelation> relations_;
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> relation_paths_;
    std::vector<std::size_t> relation_sources_;
    std::vector<IndexMorphism> morphisms_;
    std::vector<std::size_t> identities_;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> class_of_path_;
    std::size_t path_bound_ = 1;
};

/// Throws DanglingEndpointError for undeclared objects/arrows, InvariantError
/// for ill-formed relations, IndexExplosionError when classes exceed `class_cap`.
IndexCategory build_index(std::vector<std::string> objects, std::vector<IndexArrow> arrows,
                          std::vector<IndexRelation> relations, std::size_t path_bound,
                          std::size_t class_cap = kDefaultClassCap);

struct Diagram {
    std::string name;
    IndexCategory index;
    /// index object id → frame id
    std::map<std::string, std::string> object_map;

    /// Frame id of the image of an index object.
    const std::string& image(std::size_t obj) const;
};

/// Throws UnknownFrameError / InvariantError if the object map is incomplete.
void validate_diagram(const FrameSpace& space, const Diagram& d);

/// D applied to a path: the composite of the homs of its arrows.
Morphism diagram_path_image(const FrameSpace& space, const Diagram& d, std::size_t source,
                            const std::vector<std::size_t>& path);
Morphism diagram_image(const FrameSpace& space, const Diagram& d, std::size_t morphism);

/// Worst ‖D(lhs) − D(rhs)‖∞ over the declared relations.
double relation_residual(const FrameSpace& space, const Diagram& d);

struct Cone {
    std::string vertex;
    /// index object id → leg vertex → D(object)
    std::map<std::string, Morphism> legs;
};

Cone cone_from_vertex(const FrameSpace& space, const Diagram& d, std::string_view vertex);

struct ConeCheck {
    bool is_cone = false;
    double worst_deviation = 0.0;
};

/// For every index morphism f: I → J, ‖D(f) ∘ leg_I − leg_J‖∞ < tol.
ConeCheck is_cone(const FrameSpace& space, const Diagram& d, const Cone& cone, double tol = tolerance());

struct CompetitorResidual {
    std::string competitor;
    double residual = 0.0;
};

struct LimitReport {
    bool is_cone = false;
    bool is_limit = false;
    double worst_deviation = 0.0;
    std::vector<CompetitorResidual> residuals;
};

/// Factors the cone at every competitor vertex through `cone` via the unique
/// morphism competitor → vertex and measures the triangle residuals.
LimitReport is_limit(const FrameSpace& space, const Diagram& d, const Cone& cone,
                     const std::vector<std::string>& competitors, double tol = tolerance());

struct PrivilegeReport {
    bool ok = true;
    double worst_residual = 0.0;
    std::string worst_vertex;
};

/// Every frame of the space is checked as a limit with all frames competing.
PrivilegeReport check_no_privileged_frame(const FrameSpace& space, const Diagram& d, double tol = tolerance());
bool no_privileged_frame(const FrameSpace& space, const Diagram& d, double tol = tolerance());

}  // namespace lorcat
