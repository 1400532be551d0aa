#include "lorcat/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "lorcat/errors.hpp"

namespace lorcat {

// ---------------------------------------------------------------- FrameSpace

bool FrameSpace::contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

std::size_t FrameSpace::index_of(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) throw UnknownFrameError("unknown frame id '" + std::string(id) + "'");
    return it->second;
}

const Frame& FrameSpace::frame(std::string_view id) const { return frames_[index_of(id)]; }

std::vector<std::string> FrameSpace::ids() const {
    std::vector<std::string> out;
    out.reserve(frames_.size());
    for (const auto& f : frames_) out.push_back(f.id);
    return out;
}

FrameSpace FrameSpace::with_perturbed_anchor(std::string_view id, const Mat4& delta) const {
    FrameSpace copy = *this;
    Frame& f = copy.frames_[index_of(id)];
    f.matrix = f.matrix + delta;
    return copy;
}

Mat4 FrameSpace::group_inverse(const Mat4& m) const {
    if (regime_ == Regime::relativistic) return lorentz_inverse(m, c_);
    return galilean_matrix(Vec3{m(1, 0), m(2, 0), m(3, 0)});
}

// ---------------------------------------------------------------- builder

FrameSpaceBuilder::FrameSpaceBuilder(Regime regime, LightSpeed c) : regime_(regime), c_(c) {}

FrameSpaceBuilder& FrameSpaceBuilder::anchor(std::string id) {
    anchor_ = std::move(id);
    return *this;
}

FrameSpaceBuilder& FrameSpaceBuilder::add(std::string id, const Vec3& velocity, const Mat3& rotation) {
    pending_.push_back({std::move(id), velocity, rotation, std::nullopt});
    return *this;
}

FrameSpaceBuilder& FrameSpaceBuilder::perturb(std::string_view id, const Mat4& delta) {
    auto it = std::find_if(pending_.begin(), pending_.end(), [&](const Pending& p) { return p.id == id; });
    if (it == pending_.end()) throw UnknownFrameError("cannot perturb unknown frame '" + std::string(id) + "'");
    it->delta = it->delta ? *it->delta + delta : delta;
    return *this;
}

FrameSpace FrameSpaceBuilder::build() const {
    if (pending_.empty()) throw InvariantError("frame space must contain at least one frame");

    FrameSpace space;
    space.regime_ = regime_;
    space.c_ = c_;
    const double tol = tolerance();

    for (const Pending& p : pending_) {
        auto fail = [&](const std::string& what) { return InvariantError("frame '" + p.id + "': " + what); };
        if (p.id.empty()) throw InvariantError("frame id must not be empty");
        if (space.index_.count(p.id)) throw fail("duplicate frame id");
        if (!p.velocity.is_finite()) throw fail("velocity must be finite");

        Frame f;
        f.id = p.id;
        if (regime_ == Regime::classical) {
            if (max_abs_diff(p.rotation, Mat3::identity()) != 0.0) {
                throw fail("galilean frames carry no rotation");
            }
            f.anchor.velocity = Velocity::classical(p.velocity);
            f.matrix = galilean_matrix(p.velocity);
        } else {
            try {
                f.anchor.velocity = Velocity::relativistic(p.velocity, c_);
            } catch (const SuperluminalError& e) {
                throw SuperluminalError("frame '" + p.id + "': " + e.what());
            }
            if (!is_rotation(p.rotation, tol)) throw fail("rotation is not a proper rotation");
            f.anchor.rotation = p.rotation;
            f.matrix = f.anchor.reassemble(c_);
        }
        if (p.delta) f.matrix = f.matrix + *p.delta;
        if (!f.matrix.is_finite()) throw fail("anchor transform must be finite");

        space.index_.emplace(f.id, space.frames_.size());
        space.frames_.push_back(std::move(f));
    }

    const std::string anchor_id = anchor_.value_or(pending_.front().id);
    const auto it = space.index_.find(anchor_id);
    if (it == space.index_.end()) throw UnknownFrameError("anchor frame '" + anchor_id + "' is not declared");
    space.anchor_ = it->second;
    const Frame& a = space.frames_[space.anchor_];
    if (!(a.anchor.velocity.vec() == Vec3{}) || max_abs_diff(a.anchor.rotation, Mat3::identity()) != 0.0) {
        throw InvariantError("anchor frame '" + anchor_id + "' must be at rest with no rotation");
    }
    return space;
}

// ---------------------------------------------------------------- morphisms

Vec3 Morphism::velocity() const {
    if (regime == Regime::classical) return {-matrix(1, 0), -matrix(2, 0), -matrix(3, 0)};
    return boost_velocity_of(matrix, c);
}

BoostDecomposition Morphism::decomposition(double tol) const {
    if (regime == Regime::classical) return {Mat3::identity(), Velocity::classical(velocity())};
    return decompose_lorentz(matrix, c, tol);
}

Morphism identity_morphism(const FrameSpace& space, std::string_view id) {
    const Frame& f = space.frame(id);
    return {f.id, f.id, space.regime(), space.c(), Mat4::identity()};
}

Morphism hom(const FrameSpace& space, std::string_view a, std::string_view b) {
    const Frame& fa = space.frame(a);
    const Frame& fb = space.frame(b);
    return {fa.id, fb.id, space.regime(), space.c(), fb.matrix * space.group_inverse(fa.matrix)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.source != f.target) {
        throw NonComposableError("cannot compose " + g.source + "->" + g.target + " after " + f.source + "->" +
                                 f.target);
    }
    if (g.regime != f.regime || (g.regime == Regime::relativistic && !(g.c == f.c))) throw NonComposableError("morphisms live in different categories");
    return {f.source, g.target, f.regime, f.c, g.matrix * f.matrix};
}

Morphism inverse(const Morphism& f) {
    Mat4 inv = f.regime == Regime::relativistic
                   ? lorentz_inverse(f.matrix, f.c)
                   : galilean_matrix(Vec3{f.matrix(1, 0), f.matrix(2, 0), f.matrix(3, 0)});
    return {f.target, f.source, f.regime, f.c, inv};
}

// ---------------------------------------------------------------- axioms

namespace {

class LawTracker {
public:
    explicit LawTracker(std::string law) : result_{std::move(law), 0.0, {}} {}

    void observe(double deviation, const std::vector<std::string_view>& frames) {
        if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
        if (!result_.where.empty() && deviation <= result_.worst) return;
        result_.worst = deviation;
        std::ostringstream where;
        where << (frames.size() == 1 ? "frame " : "frames (");
        for (std::size_t i = 0; i < frames.size(); ++i) where << (i ? ", " : "") << frames[i];
        if (frames.size() != 1) where << ')';
        result_.where = where.str();
    }

    const LawResult& result() const { return result_; }

private:
    LawResult result_;
};

}  // namespace

AxiomReport check_category_axioms(const FrameSpace& space, std::size_t samples, std::uint64_t seed, double tol) {
    const auto frames = space.frames();
    const std::size_t n = frames.size();
    std::mt19937_64 rng(seed);
    auto pick = [&]() -> std::string_view { return frames[rng() % n].id; };

    LawTracker anchors("anchor_consistency");
    for (const Frame& f : frames) {
        const Mat4 declared = space.regime() == Regime::relativistic ? f.anchor.reassemble(space.c())
                                                                      : galilean_matrix(f.anchor.velocity);
        anchors.observe(max_abs_diff(declared, f.matrix), {f.id});
    }

    LawTracker identity("identity"), associativity("associativity"), closure("closure"), inverses("inverse");
    for (const Frame& f : frames) {
        identity.observe(max_abs_diff(hom(space, f.id, f.id).matrix, Mat4::identity()), {f.id});
    }
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = pick(), b = pick(), c = pick(), d = pick();
        const Morphism f = hom(space, a, b), g = hom(space, b, c), h = hom(space, c, d);

        identity.observe(max_abs_diff(compose(hom(space, b, b), f).matrix, f.matrix), {a, b});
        identity.observe(max_abs_diff(compose(f, hom(space, a, a)).matrix, f.matrix), {a, b});
        associativity.observe(
            max_abs_diff(compose(h, compose(g, f)).matrix, compose(compose(h, g), f).matrix), {a, b, c, d});
        closure.observe(max_abs_diff(compose(g, f).matrix, hom(space, a, c).matrix), {a, b, c});
        inverses.observe(max_abs_diff(compose(inverse(f), f).matrix, Mat4::identity()), {a, b});
    }

    AxiomReport report;
    for (const LawTracker* t : {&anchors, &identity, &associativity, &closure, &inverses}) {
        const LawResult& r = t->result();
        report.laws.push_back(r);
        if (report.worst_location.empty() || r.worst > report.worst) {
            report.worst = r.worst;
            report.worst_location = r.law + " at " + r.where;
        }
    }
    report.pass = report.worst < tol;
    return report;
}

}  // namespace lorcat
