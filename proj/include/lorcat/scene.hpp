#pragma once

// Scene files: UTF-8 JSON describing a frame space, diagrams and checks.
//
//   {
//     "regime": "lorentz" | "galilean",
//     "c": 1.0, "tolerance": 1e-9, "anchor": "lab",
//     "frames": [{"id": "lab", "velocity": [0, 0, 0],
//                 "rotation": {"axis": [0, 0, 1], "angle": 0.1},
//                 "matrix_perturbation": [[...4 rows of 4...]]}],
//     "diagrams": [{"name": "d", "objects": ["I", "J"],
//                   "arrows": [{"id": "f", "source": "I", "target": "J"}],
//                   "relations": [{"lhs": ["f"], "rhs": ["f"]}],
//                   "path_bound": 4, "class_cap": 64,
//                   "map": {"I": "lab", "J": "B"}}],
//     "checks": ["axioms", "limits", "no_privileged_frame", "functor", "adjunction"]
//   }
//
// `anchor` defaults to the first frame. `matrix_perturbation` is a fault
// injection hook: it is added to the stored anchor transform only.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorcat/diagrams.hpp"
#include "lorcat/errors.hpp"
#include "lorcat/frames.hpp"

namespace lorcat {

/// Malformed scene. `locus()` is "line N" for syntax errors or a JSON pointer
/// such as "/frames/2/velocity" for field errors.
class ParseError : public Error {
public:
    ParseError(std::string locus, const std::string& what)
        : Error(locus + ": " + what), locus_(std::move(locus)) {}
    const std::string& locus() const noexcept { return locus_; }

private:
    std::string locus_;
};

struct FrameOverrides {
    std::optional<double> c;
    std::optional<double> tolerance;
};

struct Scene {
    Regime regime = Regime::relativistic;
    LightSpeed c;
    double tolerance = 1e-9;
    FrameSpace space;
    std::vector<Diagram> diagrams;
    /// nullopt when the scene does not list checks (all applicable checks run).
    std::optional<std::vector<std::string>> checks;
};

/// Throws ParseError on malformed input, InvariantError / SuperluminalError
/// when the frames violate the space invariants.
Scene parse_scene_text(std::string_view text, const FrameOverrides& overrides = {});
Scene parse_scene(const std::string& path, const FrameOverrides& overrides = {});

}  // namespace lorcat
