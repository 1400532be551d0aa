#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lorcat/diagrams.hpp"
#include "lorcat/errors.hpp"
#include "lorcat/frames.hpp"

namespace lorcat::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    Vec3 unit_vector() {
        for (;;) {
            const Vec3 v{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            const double n = norm(v);
            if (n > 1e-3 && n <= 1.0) return v / n;
        }
    }

    /// Uniform direction, speed uniform in [0, max_speed].
    Vec3 velocity(double max_speed) { return unit_vector() * uniform(0.0, max_speed); }

    Event event(double scale = 1.0) {
        return {uniform(-scale, scale), {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}};
    }

    Mat4 matrix(double lo = -1.0, double hi = 1.0) {
        Mat4 m;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = uniform(lo, hi);
        return m;
    }

    /// Random frame space: anchor at rest plus up to `max_frames - 1` frames.
    FrameSpace space(Regime regime, std::size_t max_frames, double max_speed, bool rotations = true,
                     LightSpeed c = LightSpeed{}) {
        const std::size_t n = 1 + below(max_frames);
        FrameSpaceBuilder b(regime, c);
        b.add("F0", {});
        for (std::size_t i = 1; i < n; ++i) {
            const Vec3 v = velocity(max_speed);
            Mat3 r = Mat3::identity();
            if (regime == Regime::relativistic && rotations && below(2) == 0) {
                r = rotation_from_axis_angle(unit_vector(), uniform(-3.1, 3.1));
            }
            b.add("F" + std::to_string(i), v, r);
        }
        return b.build();
    }

    /// Random presentation with ≤ max_objects objects and ≤ max_arrows arrows,
    /// mapped onto random frames of `space`. Retries presentations whose
    /// bounded path set exceeds the class cap.
    Diagram diagram(const FrameSpace& space, std::size_t max_objects, std::size_t max_arrows,
                    std::size_t path_bound = 4, std::size_t class_cap = 4096) {
        for (;;) {
            const std::size_t n_obj = 1 + below(max_objects);
            const std::size_t n_arr = below(max_arrows + 1);
            std::vector<std::string> objects;
            for (std::size_t i = 0; i < n_obj; ++i) objects.push_back("I" + std::to_string(i));
            std::vector<IndexArrow> arrows;
            for (std::size_t a = 0; a < n_arr; ++a) {
                arrows.push_back({"a" + std::to_string(a), objects[below(n_obj)], objects[below(n_obj)]});
            }
            // Relations between composable pairs with matching endpoints.
            std::vector<IndexRelation> relations;
            for (std::size_t x = 0; x < arrows.size(); ++x)
                for (std::size_t y = 0; y < arrows.size(); ++y)
                    if (x != y && arrows[x].source == arrows[y].source && arrows[x].target == arrows[y].target &&
                        below(3) == 0) {
                        relations.push_back({{arrows[x].id}, {arrows[y].id}});
                    }
            try {
                Diagram d;
                d.name = "random";
                d.index = build_index(objects, arrows, relations, path_bound, class_cap);
                const auto ids = space.ids();
                for (const auto& o : objects) d.object_map[o] = ids[below(ids.size())];
                return d;
            } catch (const IndexExplosionError&) {
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace lorcat::testing
