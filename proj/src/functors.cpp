#include "lorcat/functors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lorcat/errors.hpp"

namespace lorcat {

namespace {

FrameSpace rebuild(const FrameSpace& from, Regime regime, LightSpeed c, bool keep_rotation) {
    FrameSpaceBuilder b(regime, c);
    b.anchor(from.anchor_id());
    for (const Frame& f : from.frames()) {
        b.add(f.id, f.anchor.velocity.vec(), keep_rotation ? f.anchor.rotation : Mat3::identity());
    }
    return b.build();
}

bool same_ids(const FrameSpace& a, const FrameSpace& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.frames().begin(), a.frames().end(), [&](const Frame& f) { return b.contains(f.id); });
}

double finite_or_inf(double x) { return std::isnan(x) ? std::numeric_limits<double>::infinity() : x; }

}  // namespace

FrameSpace pair_spaces(const FrameSpace& lor_space) {
    if (lor_space.regime() != Regime::relativistic) throw InvariantError("pair_spaces expects a relativistic space");
    return rebuild(lor_space, Regime::classical, LightSpeed{}, false);
}

FunctorMap limit_functor(const FrameSpace& lor_space) {
    return {FunctorDirection::limit_L, lor_space, pair_spaces(lor_space)};
}

FunctorMap M_functor(const FrameSpace& gal_space, LightSpeed c) {
    if (gal_space.regime() != Regime::classical) throw InvariantError("M expects a classical space");
    for (const Frame& f : gal_space.frames()) {
        if (!(dot(f.anchor.velocity.vec(), f.anchor.velocity.vec()) < c.squared())) {
            throw SuperluminalEmbeddingError("frame '" + f.id + "' moves at or above c and has no image under M");
        }
    }
    return {FunctorDirection::embed_M, gal_space, rebuild(gal_space, Regime::relativistic, c, false)};
}

Morphism apply_functor(const FunctorMap& f, const Morphism& m) {
    if (!f.source.contains(m.source) || !f.source.contains(m.target)) {
        throw UnknownFrameError("morphism endpoints are not objects of the functor's source");
    }
    return hom(f.target, m.source, m.target);
}

Morphism L_on_morphism(const Morphism& f, const FrameSpace& paired) { return hom(paired, f.source, f.target); }

FunctorReport check_functor_laws(const FunctorMap& F, std::size_t samples, std::uint64_t seed, double tol) {
    FunctorReport r;
    const auto frames = F.source.frames();
    if (frames.empty() || !same_ids(F.source, F.target)) return r;

    auto endpoints_differ = [](const Morphism& x, const Morphism& y) {
        return x.source != y.source || x.target != y.target;
    };

    for (const Frame& a : frames) {
        const Morphism image = apply_functor(F, identity_morphism(F.source, a.id));
        const Morphism id = identity_morphism(F.target, a.id);
        r.structural_violations += endpoints_differ(image, id);
        r.identity_deviation = std::max(r.identity_deviation, finite_or_inf(max_abs_diff(image.matrix, id.matrix)));
    }

    std::mt19937_64 rng(seed);
    const std::size_t n = frames.size();
    for (std::size_t s = 0; s < samples; ++s) {
        const std::string& a = frames[rng() % n].id;
        const std::string& b = frames[rng() % n].id;
        const std::string& c = frames[rng() % n].id;
        const Morphism f = hom(F.source, a, b);
        const Morphism g = hom(F.source, b, c);
        const Morphism lhs = apply_functor(F, compose(g, f));
        const Morphism rhs = compose(apply_functor(F, g), apply_functor(F, f));
        r.structural_violations += endpoints_differ(lhs, rhs);
        r.composition_deviation = std::max(r.composition_deviation, finite_or_inf(max_abs_diff(lhs.matrix, rhs.matrix)));
        ++r.pairs_checked;
    }

    // Singleton homs on both sides; F(hom(a, b)) must land in hom(F a, F b).
    r.full_and_faithful = true;
    for (const Frame& a : frames)
        for (const Frame& b : frames) {
            const Morphism image = apply_functor(F, hom(F.source, a.id, b.id));
            r.full_and_faithful = r.full_and_faithful && !endpoints_differ(image, hom(F.target, a.id, b.id));
        }

    r.pass = r.structural_violations == 0 && r.full_and_faithful && r.identity_deviation < tol &&
             r.composition_deviation < tol;
    return r;
}

bool check_limit_preservation(const FunctorMap& F, const Diagram& d, double tol) {
    validate_diagram(F.source, d);
    validate_diagram(F.target, d);
    const std::vector<std::string> source_ids = F.source.ids();
    const std::vector<std::string> target_ids = F.target.ids();
    for (const std::string& v : source_ids) {
        if (!is_limit(F.source, d, cone_from_vertex(F.source, d, v), source_ids, tol).is_limit) continue;
        if (!is_limit(F.target, d, cone_from_vertex(F.target, d, v), target_ids, tol).is_limit) return false;
    }
    return true;
}

AdjunctionReport check_adjunction(const FunctorMap& M, const FunctorMap& L, std::size_t samples, std::uint64_t seed,
                                  double tol) {
    AdjunctionReport r;
    const FrameSpace& gal = M.source;
    const FrameSpace& lor = M.target;
    if (M.direction != FunctorDirection::embed_M || L.direction != FunctorDirection::limit_L) return r;
    if (!same_ids(gal, lor) || !same_ids(lor, L.source) || !same_ids(gal, L.target)) return r;

    const FrameSpace& gal_image = L.target;
    auto unit = [&](const std::string& a) { return hom(gal_image, a, a); };      // A → L M A
    auto counit = [&](const std::string& b) { return hom(L.source, b, b); };     // M L B → B
    auto phi = [&](const Morphism& f) { return compose(apply_functor(L, f), unit(f.source)); };

    // Lor(M A, B) and Gal(A, L B) are singletons; φ must send one onto the other.
    r.bijection = true;
    for (const Frame& a : gal.frames())
        for (const Frame& b : lor.frames()) {
            const Morphism image = phi(hom(L.source, a.id, b.id));
            r.bijection = r.bijection && image.source == a.id && image.target == b.id;
        }

    const auto frames = gal.frames();
    const std::size_t n = frames.size();
    std::mt19937_64 rng(seed);
    auto pick = [&]() -> const std::string& { return frames[rng() % n].id; };

    for (std::size_t s = 0; s < samples; ++s) {
        const std::string &a0 = pick(), &a = pick(), &b = pick(), &b1 = pick();
        const Morphism g = hom(gal, a0, a);
        const Morphism h = hom(L.source, b, b1);
        const Morphism f = hom(L.source, a, b);
        // φ(h ∘ f ∘ M g) = L h ∘ φ f ∘ g
        const Morphism lhs = phi(compose(h, compose(f, apply_functor(M, g))));
        Morphism rhs = compose(apply_functor(L, h), compose(phi(f), g));
        r.naturality_residual = std::max(r.naturality_residual, finite_or_inf(max_abs_diff(lhs.matrix, rhs.matrix)));
    }

    for (const Frame& x : frames) {
        // L ε_B ∘ η_{L B} = id and ε_{M A} ∘ M η_A = id
        const Morphism t1 = compose(apply_functor(L, counit(x.id)), unit(x.id));
        const Morphism t2 = compose(counit(x.id), apply_functor(M, hom(gal, x.id, x.id)));
        r.unit_counit_residual = std::max({r.unit_counit_residual, finite_or_inf(max_abs_diff(t1.matrix, Mat4::identity())),
                                           finite_or_inf(max_abs_diff(t2.matrix, Mat4::identity()))});
    }

    // Comma category (A ⇒ L): objects (B, g: A → L B). The candidate initial
    // object is (M A, η_A); its only morphism to (B, g) is the unique hom M A → B.
    const std::size_t comma_size = std::min<std::size_t>(4, n);
    for (const Frame& a : frames) {
        for (std::size_t k = 0; k < comma_size; ++k) {
            const std::string& b = pick();
            const Morphism g = hom(gal_image, a.id, b);
            const Morphism mediator = hom(L.source, a.id, b);
            const Morphism routed = compose(apply_functor(L, mediator), unit(a.id));
            r.comma_residual = std::max(r.comma_residual, finite_or_inf(max_abs_diff(routed.matrix, g.matrix)));
            ++r.comma_objects;
        }
    }

    r.pass = r.bijection && r.naturality_residual < tol && r.unit_counit_residual < tol && r.comma_residual < tol;
    return r;
}

Vec3 companion_velocity(const Vec3& v) {
    if (v == Vec3{}) return {};
    // Quarter turn about n ⊥ v maps v to n × v.
    const Vec3 a{std::abs(v.x), std::abs(v.y), std::abs(v.z)};
    Vec3 e;
    if (a.x <= a.y && a.x <= a.z) e.x = 1.0;
    else if (a.y <= a.z) e.y = 1.0;
    else e.z = 1.0;
    const Vec3 n = cross(v, e);
    return cross(n / norm(n), v);
}

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    constexpr double floor = 1e2 * std::numeric_limits<double>::epsilon();
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i] > 0.0 && y[i] >= floor && std::isfinite(y[i])) pts.emplace_back(std::log(x[i]), std::log(y[i]));
    }
    if (pts.size() < 2) return std::nullopt;
    double mx = 0.0, my = 0.0;
    for (const auto& [px, py] : pts) {
        mx += px;
        my += py;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [px, py] : pts) {
        sxx += (px - mx) * (px - mx);
        sxy += (px - mx) * (py - my);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

ConvergenceTable limit_scan(const Vec3& v, const Event& e, const std::vector<double>& c_values) {
    if (c_values.empty()) throw InvariantError("limit scan needs at least one c value");
    for (std::size_t i = 1; i < c_values.size(); ++i) {
        if (!(c_values[i] > c_values[i - 1])) throw InvariantError("c values must be strictly increasing");
    }
    const Vec3 w = companion_velocity(v);
    ConvergenceTable table;
    table.rows.resize(c_values.size());
    // Rows are independent.
    for (std::size_t i = 0; i < c_values.size(); ++i) {
        const LightSpeed c(c_values[i]);
        const Velocity vel = Velocity::relativistic(v, c);
        ConvergenceRow& row = table.rows[i];
        row.c = c.value();
        row.morphism_deviation = max_abs_diff(boost_apply(vel, c, e), galilean_apply(vel, e));
        row.addition_deviation = norm(einstein_add(v, w, c) - (v + w));
        row.gyration_deviation = max_abs_diff(gyration(v, w, c), Mat3::identity());
    }
    std::vector<double> cs, md, ad, gd;
    for (const auto& row : table.rows) {
        cs.push_back(row.c);
        md.push_back(row.morphism_deviation);
        ad.push_back(row.addition_deviation);
        gd.push_back(row.gyration_deviation);
    }
    table.morphism_slope = loglog_slope(cs, md);
    table.addition_slope = loglog_slope(cs, ad);
    table.gyration_slope = loglog_slope(cs, gd);
    return table;
}

}  // namespace lorcat
