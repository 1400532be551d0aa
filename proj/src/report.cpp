#include "lorcat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "lorcat/functors.hpp"

namespace lorcat {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

// With no declared diagrams, checks run on the star from the anchor to every frame.
std::vector<Diagram> effective_diagrams(const Scene& scene) {
    if (!scene.diagrams.empty()) return scene.diagrams;
    const FrameSpace& space = scene.space;
    std::vector<std::string> objects;
    std::vector<IndexArrow> arrows;
    Diagram d;
    d.name = "frames";
    for (const Frame& f : space.frames()) {
        objects.push_back(f.id);
        d.object_map[f.id] = f.id;
        if (f.id != space.anchor_id()) arrows.push_back({space.anchor_id() + "->" + f.id, space.anchor_id(), f.id});
    }
    d.index = build_index(std::move(objects), std::move(arrows), {}, 1, std::max<std::size_t>(kDefaultClassCap, 2 * space.size()));
    return {std::move(d)};
}

void run_axioms(const Scene& scene, const CheckOptions& opt, std::vector<CheckResult>& out) {
    const AxiomReport ax = check_category_axioms(scene.space, opt.samples, opt.seed, scene.tolerance);
    for (const LawResult& law : ax.laws) {
        out.push_back({"axioms." + law.law, law.worst < scene.tolerance, law.worst, "worst at " + law.where});
    }
}

void run_limits(const Scene& scene, const std::vector<Diagram>& diagrams, std::vector<CheckResult>& out) {
    const FrameSpace& space = scene.space;
    const std::vector<std::string> everyone = space.ids();
    for (const Diagram& d : diagrams) {
        const double rel = relation_residual(space, d);
        const LimitReport lr = is_limit(space, d, cone_from_vertex(space, d, space.anchor_id()), everyone, scene.tolerance);
        std::string where;
        double worst_competitor = -1.0;
        for (const auto& r : lr.residuals) {
            if (r.residual > worst_competitor) {
                worst_competitor = r.residual;
                where = r.competitor;
            }
        }
        const double residual = std::max(rel, lr.worst_deviation);
        std::ostringstream details;
        details << "vertex " << space.anchor_id() << ", " << d.index.morphisms().size() << " index morphisms, relation residual "
                << fmt(rel) << ", is_cone " << (lr.is_cone ? "true" : "false") << ", worst competitor " << where;
        out.push_back({"limits." + d.name, lr.is_limit && rel < scene.tolerance, residual, details.str()});
    }
}

void run_privilege(const Scene& scene, const std::vector<Diagram>& diagrams, std::vector<CheckResult>& out) {
    bool ok = true;
    double worst = 0.0;
    std::string where;
    for (const Diagram& d : diagrams) {
        const PrivilegeReport pr = check_no_privileged_frame(scene.space, d, scene.tolerance);
        ok = ok && pr.ok;
        if (where.empty() || pr.worst_residual > worst) {
            worst = pr.worst_residual;
            where = "diagram " + d.name + ", vertex " + pr.worst_vertex;
        }
    }
    out.push_back({"no_privileged_frame", ok, worst, "every frame checked as a limit; worst at " + where});
}

void run_functor(const Scene& scene, const CheckOptions& opt, const std::vector<Diagram>& diagrams,
                 std::vector<CheckResult>& out) {
    if (scene.regime != Regime::relativistic) {
        out.push_back({"functor", true, 0.0, "skipped: galilean scene"});
        return;
    }
    const FunctorMap L = limit_functor(scene.space);
    const FunctorReport fr = check_functor_laws(L, opt.samples, opt.seed, scene.tolerance);
    bool preserved = true;
    for (const Diagram& d : diagrams) preserved = preserved && check_limit_preservation(L, d, scene.tolerance);
    std::ostringstream details;
    details << "structural violations " << fr.structural_violations << ", full_and_faithful "
            << (fr.full_and_faithful ? "true" : "false") << ", limits preserved " << (preserved ? "true" : "false");
    out.push_back({"functor", fr.pass && preserved, std::max(fr.composition_deviation, fr.identity_deviation),
                   details.str()});
}

void run_adjunction(const Scene& scene, const CheckOptions& opt, std::vector<CheckResult>& out) {
    if (scene.regime != Regime::relativistic) {
        out.push_back({"adjunction", true, 0.0, "skipped: galilean scene"});
        return;
    }
    const FunctorMap L = limit_functor(scene.space);
    const FunctorMap M = M_functor(L.target, scene.c);
    const AdjunctionReport ar = check_adjunction(M, L, opt.samples, opt.seed, scene.tolerance);
    std::ostringstream details;
    details << "bijection " << (ar.bijection ? "true" : "false") << ", naturality " << fmt(ar.naturality_residual)
            << ", triangles " << fmt(ar.unit_counit_residual) << ", comma objects " << ar.comma_objects;
    out.push_back({"adjunction", ar.pass,
                   std::max({ar.naturality_residual, ar.unit_counit_residual, ar.comma_residual}), details.str()});
}

}  // namespace

Report run_checks(const Scene& scene, const CheckOptions& options) {
    const std::vector<std::string> wanted = scene.checks.value_or(kCheckFamilies);
    for (const std::string& w : wanted) {
        if (std::find(kCheckFamilies.begin(), kCheckFamilies.end(), w) == kCheckFamilies.end()) {
            throw InvariantError("unknown check '" + w + "'");
        }
    }
    auto wants = [&](const char* name) { return std::find(wanted.begin(), wanted.end(), name) != wanted.end(); };

    Report report;
    if (wanted.empty()) return report;
    const std::vector<Diagram> diagrams = effective_diagrams(scene);
    if (wants("axioms")) run_axioms(scene, options, report.checks);
    if (wants("limits")) run_limits(scene, diagrams, report.checks);
    if (wants("no_privileged_frame")) run_privilege(scene, diagrams, report.checks);
    if (wants("functor")) run_functor(scene, options, diagrams, report.checks);
    if (wants("adjunction")) run_adjunction(scene, options, report.checks);

    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.pass; });
    return report;
}

std::string report_json(const Report& report, const CheckOptions& options) {
    nlohmann::ordered_json j;
    j["pass"] = report.pass;
    j["seed"] = options.seed;
    j["samples"] = options.samples;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["residual"] = c.residual;
        jc["details"] = c.details;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string report_text(const Report& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name << " residual " << fmt(c.residual)
           << "  (" << c.details << ")\n";
    }
    os << (report.pass ? "all checks passed" : "check failures present") << " (" << report.checks.size()
       << " checks)\n";
    return os.str();
}

}  // namespace lorcat
