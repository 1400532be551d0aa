#include "lorcat/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "lorcat/errors.hpp"

namespace lorcat {

namespace {

// Raw bounded paths are enumerated before quotienting; this caps the work.
constexpr std::size_t kRawPathLimit = 1'000'000;

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

bool shorter_path(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::size_t IndexCategory::object_index(std::string_view id) const {
    const auto it = std::find(objects_.begin(), objects_.end(), id);
    if (it == objects_.end()) throw DanglingEndpointError("unknown index object '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - objects_.begin());
}

std::optional<std::size_t> IndexCategory::compose(std::size_t g, std::size_t f) const {
    const IndexMorphism& mf = morphisms_.at(f);
    const IndexMorphism& mg = morphisms_.at(g);
    if (mf.target != mg.source) throw NonComposableError("index morphisms are not composable");
    std::vector<std::size_t> path = mf.path;
    path.insert(path.end(), mg.path.begin(), mg.path.end());
    const auto it = class_of_path_.find({mf.source, path});
    if (it == class_of_path_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::size_t>& IndexCategory::relation_path(std::size_t relation, bool lhs) const {
    const auto& p = relation_paths_.at(relation);
    return lhs ? p.first : p.second;
}

IndexCategory build_index(std::vector<std::string> objects, std::vector<IndexArrow> arrows,
                          std::vector<IndexRelation> relations, std::size_t path_bound, std::size_t class_cap) {
    if (path_bound < 1) throw InvariantError("path bound must be at least 1");

    IndexCategory cat;
    cat.path_bound_ = path_bound;
    cat.objects_ = std::move(objects);
    for (std::size_t i = 0; i < cat.objects_.size(); ++i) {
        if (std::find(cat.objects_.begin(), cat.objects_.begin() + i, cat.objects_[i]) != cat.objects_.begin() + i) {
            throw InvariantError("duplicate index object '" + cat.objects_[i] + "'");
        }
    }

    std::vector<std::size_t> arrow_src, arrow_tgt;
    std::unordered_map<std::string, std::size_t> arrow_index;
    for (const IndexArrow& a : arrows) {
        auto endpoint = [&](const std::string& obj) {
            const auto it = std::find(cat.objects_.begin(), cat.objects_.end(), obj);
            if (it == cat.objects_.end()) {
                throw DanglingEndpointError("arrow '" + a.id + "' refers to undeclared object '" + obj + "'");
            }
            return static_cast<std::size_t>(it - cat.objects_.begin());
        };
        if (!arrow_index.emplace(a.id, arrow_src.size()).second) {
            throw InvariantError("duplicate arrow id '" + a.id + "'");
        }
        arrow_src.push_back(endpoint(a.source));
        arrow_tgt.push_back(endpoint(a.target));
    }
    cat.arrows_ = std::move(arrows);

    // Relations: resolve ids, check composability and matching endpoints.
    struct Side {
        std::vector<std::size_t> path;
        std::optional<std::pair<std::size_t, std::size_t>> ends;
    };
    auto resolve = [&](const std::vector<std::string>& ids) {
        Side s;
        for (const std::string& id : ids) {
            const auto it = arrow_index.find(id);
            if (it == arrow_index.end()) throw DanglingEndpointError("relation refers to unknown arrow '" + id + "'");
            if (!s.path.empty() && arrow_tgt[s.path.back()] != arrow_src[it->second]) {
                throw InvariantError("relation path is not composable at arrow '" + id + "'");
            }
            s.path.push_back(it->second);
        }
        if (!s.path.empty()) s.ends = std::make_pair(arrow_src[s.path.front()], arrow_tgt[s.path.back()]);
        return s;
    };
    for (const IndexRelation& r : relations) {
        Side l = resolve(r.lhs), rr = resolve(r.rhs);
        if (!l.ends && !rr.ends) throw InvariantError("relation with two empty sides");
        const auto ends = l.ends ? *l.ends : *rr.ends;
        const bool ok = (l.ends && rr.ends) ? *l.ends == *rr.ends : ends.first == ends.second;
        if (!ok) throw InvariantError("relation equates paths with different endpoints");
        cat.relation_paths_.emplace_back(std::move(l.path), std::move(rr.path));
        cat.relation_sources_.push_back(ends.first);
    }
    cat.relations_ = std::move(relations);

    // Enumerate every path of length ≤ bound.
    struct RawPath {
        std::size_t source, target;
        std::vector<std::size_t> arrows;
    };
    std::vector<RawPath> paths;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> lookup;
    for (std::size_t o = 0; o < cat.objects_.size(); ++o) paths.push_back({o, o, {}});
    for (std::size_t begin = 0, len = 0; len < path_bound; ++len) {
        const std::size_t end = paths.size();
        for (std::size_t p = begin; p < end; ++p) {
            for (std::size_t a = 0; a < arrow_src.size(); ++a) {
                if (arrow_src[a] != paths[p].target) continue;
                RawPath next{paths[p].source, arrow_tgt[a], paths[p].arrows};
                next.arrows.push_back(a);
                paths.push_back(std::move(next));
                if (paths.size() > kRawPathLimit) {
                    throw IndexExplosionError("index presentation has too many bounded paths");
                }
            }
        }
        begin = end;
    }
    for (std::size_t i = 0; i < paths.size(); ++i) lookup.emplace(std::make_pair(paths[i].source, paths[i].arrows), i);

    // Quotient by one-step rewrites that stay within the bound.
    UnionFind uf(paths.size());
    auto rewrite = [&](std::size_t p, const std::vector<std::size_t>& from, const std::vector<std::size_t>& to,
                       std::size_t rel_obj) {
        const auto& arr = paths[p].arrows;
        if (arr.size() - std::min(arr.size(), from.size()) + to.size() > path_bound) return;
        for (std::size_t i = 0; i + from.size() <= arr.size(); ++i) {
            if (!std::equal(from.begin(), from.end(), arr.begin() + static_cast<std::ptrdiff_t>(i))) continue;
            if (from.empty()) {
                // Identity side: the object at position i must be the relation's loop object.
                const std::size_t here = i == 0 ? paths[p].source : arrow_tgt[arr[i - 1]];
                if (here != rel_obj) continue;
            }
            std::vector<std::size_t> out(arr.begin(), arr.begin() + static_cast<std::ptrdiff_t>(i));
            out.insert(out.end(), to.begin(), to.end());
            out.insert(out.end(), arr.begin() + static_cast<std::ptrdiff_t>(i + from.size()), arr.end());
            const auto it = lookup.find({paths[p].source, out});
            if (it != lookup.end()) uf.unite(p, it->second);
        }
    };
    for (std::size_t p = 0; p < paths.size(); ++p) {
        for (std::size_t r = 0; r < cat.relation_paths_.size(); ++r) {
            const auto& [l, rr] = cat.relation_paths_[r];
            rewrite(p, l, rr, cat.relation_sources_[r]);
            rewrite(p, rr, l, cat.relation_sources_[r]);
        }
    }

    // Paths are generated shortest-first, so the root's first member is the
    // shortest; pick the lexicographically least among equal lengths.
    std::map<std::size_t, std::size_t> root_to_class;
    std::vector<std::size_t> class_of(paths.size());
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const std::size_t root = uf.find(p);
        auto [it, inserted] = root_to_class.emplace(root, cat.morphisms_.size());
        if (inserted) {
            if (cat.morphisms_.size() >= class_cap) {
                throw IndexExplosionError("index category exceeds " + std::to_string(class_cap) +
                                          " morphism classes");
            }
            cat.morphisms_.push_back({paths[p].source, paths[p].target, paths[p].arrows});
        } else if (shorter_path(paths[p].arrows, cat.morphisms_[it->second].path)) {
            cat.morphisms_[it->second].path = paths[p].arrows;
        }
        class_of[p] = it->second;
    }
    for (std::size_t p = 0; p < paths.size(); ++p) {
        cat.class_of_path_.emplace(std::make_pair(paths[p].source, paths[p].arrows), class_of[p]);
    }
    cat.identities_.resize(cat.objects_.size());
    for (std::size_t o = 0; o < cat.objects_.size(); ++o) cat.identities_[o] = class_of[o];
    return cat;
}

// ---------------------------------------------------------------- diagrams

const std::string& Diagram::image(std::size_t obj) const {
    const auto it = object_map.find(index.objects().at(obj));
    if (it == object_map.end()) throw InvariantError("diagram does not map index object '" + index.objects()[obj] + "'");
    return it->second;
}

void validate_diagram(const FrameSpace& space, const Diagram& d) {
    for (std::size_t o = 0; o < d.index.objects().size(); ++o) space.frame(d.image(o));
    for (const auto& [obj, frame] : d.object_map) {
        d.index.object_index(obj);
        (void)frame;
    }
}

Morphism diagram_path_image(const FrameSpace& space, const Diagram& d, std::size_t source,
                            const std::vector<std::size_t>& path) {
    Morphism m = identity_morphism(space, d.image(source));
    for (std::size_t a : path) {
        const IndexArrow& arrow = d.index.arrows()[a];
        const std::size_t s = d.index.object_index(arrow.source);
        const std::size_t t = d.index.object_index(arrow.target);
        m = compose(hom(space, d.image(s), d.image(t)), m);
    }
    return m;
}

Morphism diagram_image(const FrameSpace& space, const Diagram& d, std::size_t morphism) {
    const IndexMorphism& m = d.index.morphisms().at(morphism);
    return diagram_path_image(space, d, m.source, m.path);
}

double relation_residual(const FrameSpace& space, const Diagram& d) {
    double worst = 0.0;
    for (std::size_t r = 0; r < d.index.relations().size(); ++r) {
        const std::size_t src = d.index.relation_source(r);
        const Morphism l = diagram_path_image(space, d, src, d.index.relation_path(r, true));
        const Morphism rr = diagram_path_image(space, d, src, d.index.relation_path(r, false));
        worst = std::max(worst, max_abs_diff(l.matrix, rr.matrix));
    }
    return worst;
}

Cone cone_from_vertex(const FrameSpace& space, const Diagram& d, std::string_view vertex) {
    Cone cone{std::string(space.frame(vertex).id), {}};
    for (std::size_t o = 0; o < d.index.objects().size(); ++o) {
        cone.legs.emplace(d.index.objects()[o], hom(space, vertex, d.image(o)));
    }
    return cone;
}

namespace {

double nan_to_inf(double x) { return std::isnan(x) ? std::numeric_limits<double>::infinity() : x; }

}  // namespace

ConeCheck is_cone(const FrameSpace& space, const Diagram& d, const Cone& cone, double tol) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const auto& objects = d.index.objects();
    for (std::size_t o = 0; o < objects.size(); ++o) {
        const auto it = cone.legs.find(objects[o]);
        if (it == cone.legs.end() || it->second.source != cone.vertex || it->second.target != d.image(o)) {
            return {false, inf};
        }
    }
    double worst = 0.0;
    for (std::size_t m = 0; m < d.index.morphisms().size(); ++m) {
        const IndexMorphism& im = d.index.morphisms()[m];
        const Morphism& leg_i = cone.legs.at(objects[im.source]);
        const Morphism& leg_j = cone.legs.at(objects[im.target]);
        const Morphism via = compose(diagram_image(space, d, m), leg_i);
        worst = std::max(worst, nan_to_inf(max_abs_diff(via.matrix, leg_j.matrix)));
    }
    return {worst < tol, worst};
}

LimitReport is_limit(const FrameSpace& space, const Diagram& d, const Cone& cone,
                     const std::vector<std::string>& competitors, double tol) {
    LimitReport report;
    const ConeCheck cc = is_cone(space, d, cone, tol);
    report.is_cone = cc.is_cone;
    report.worst_deviation = cc.worst_deviation;

    for (const std::string& b : competitors) {
        const Cone other = cone_from_vertex(space, d, b);
        const Morphism mediator = hom(space, b, cone.vertex);
        double residual = 0.0;
        for (const auto& [obj, leg] : cone.legs) {
            const Morphism factored = compose(leg, mediator);
            residual = std::max(residual, nan_to_inf(max_abs_diff(factored.matrix, other.legs.at(obj).matrix)));
        }
        report.residuals.push_back({b, residual});
        report.worst_deviation = std::max(report.worst_deviation, residual);
    }
    report.is_limit = report.is_cone && report.worst_deviation < tol;
    return report;
}

PrivilegeReport check_no_privileged_frame(const FrameSpace& space, const Diagram& d, double tol) {
    PrivilegeReport report;
    const std::vector<std::string> everyone = space.ids();
    for (const std::string& v : everyone) {
        const LimitReport lr = is_limit(space, d, cone_from_vertex(space, d, v), everyone, tol);
        if (report.worst_vertex.empty() || lr.worst_deviation > report.worst_residual) {
            report.worst_residual = lr.worst_deviation;
            report.worst_vertex = v;
        }
        report.ok = report.ok && lr.is_limit;
    }
    return report;
}

bool no_privileged_frame(const FrameSpace& space, const Diagram& d, double tol) {
    return check_no_privileged_frame(space, d, tol).ok;
}

}  // namespace lorcat
