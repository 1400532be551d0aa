#include "lorcat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorcat/functors.hpp"
#include "lorcat/report.hpp"
#include "lorcat/scene.hpp"

namespace lorcat {

namespace {

using ojson = nlohmann::ordered_json;

struct GlobalFlags {
    std::string scene;
    bool json = false;
    std::optional<double> tol;
    std::optional<double> c;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
};

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << (x == 0.0 ? 0.0 : x);
    return os.str();
}

std::string vec_str(const Vec3& v) { return "(" + num(v.x) + ", " + num(v.y) + ", " + num(v.z) + ")"; }

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string("--") + what, "not a number: '" + item + "'");
        }
    }
    return out;
}

Vec3 parse_vec3(const std::string& text, const char* what) {
    const auto v = parse_list(text, what);
    if (v.size() != 3) throw CLI::ValidationError(std::string("--") + what, "expected vx,vy,vz");
    return {v[0], v[1], v[2]};
}

Event parse_event(const std::string& text) {
    const auto v = parse_list(text, "event");
    if (v.size() != 4) throw CLI::ValidationError("--event", "expected t,x,y,z");
    return {v[0], {v[1], v[2], v[3]}};
}

Scene load(const GlobalFlags& g) {
    if (g.scene.empty()) throw CLI::RequiredError("--scene");
    FrameOverrides over;
    over.c = g.c;
    over.tolerance = g.tol;
    Scene scene = parse_scene(g.scene, over);
    set_tolerance(scene.tolerance);
    return scene;
}

// Relativistic velocities are reported in units of c.
Vec3 in_report_units(const Scene& s, const Vec3& v) {
    return s.regime == Regime::relativistic ? v / s.c.value() : v;
}
const char* velocity_unit(const Scene& s) { return s.regime == Regime::relativistic ? "c" : "length/time"; }

double unsigned_zero(double x) { return x == 0.0 ? 0.0 : x; }
ojson vec_json(const Vec3& v) { return ojson::array({unsigned_zero(v.x), unsigned_zero(v.y), unsigned_zero(v.z)}); }
ojson event_json(const Event& e) { return ojson::array({e.t, e.x.x, e.x.y, e.x.z}); }

Vec3 rotation_axis(const Mat3& r) {
    const Vec3 axial{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
    const double n = norm(axial);
    return n > 0.0 ? axial / n : Vec3{};
}

int cmd_transform(const GlobalFlags& g, const std::string& frame_id, const std::string& event_text,
                  std::ostream& out) {
    const Scene scene = load(g);
    const Event e = parse_event(event_text);
    const Morphism m = hom(scene.space, scene.space.anchor_id(), frame_id);
    const Event image = m.matrix * e;
    if (g.json) {
        ojson j;
        j["regime"] = to_string(scene.regime);
        j["from"] = scene.space.anchor_id();
        j["to"] = m.target;
        j["event"] = event_json(e);
        j["image"] = event_json(image);
        out << j.dump(2) << '\n';
        return kExitPass;
    }
    out << "regime " << to_string(scene.regime) << ", c = " << num(scene.c.value()) << '\n'
        << "event in " << m.source << ": (" << num(e.t) << ", " << vec_str(e.x) << ")\n"
        << "event in " << m.target << ": (" << num(image.t) << ", " << vec_str(image.x) << ")\n";
    return kExitPass;
}

int cmd_compose(const GlobalFlags& g, const std::vector<std::string>& ids, std::ostream& out) {
    const Scene scene = load(g);
    const FrameSpace& sp = scene.space;
    const Morphism ab = hom(sp, ids[0], ids[1]);
    const Morphism bc = hom(sp, ids[1], ids[2]);
    const Morphism ac = compose(bc, ab);
    const double residual = max_abs_diff(ac.matrix, hom(sp, ids[0], ids[2]).matrix);

    const BoostDecomposition dab = ab.decomposition(), dbc = bc.decomposition(), dac = ac.decomposition();
    auto describe = [&](const BoostDecomposition& d) {
        ojson j;
        j["velocity"] = vec_json(in_report_units(scene, d.velocity.vec()));
        j["rotation_angle"] = rotation_angle(d.rotation);
        j["rotation_axis"] = vec_json(rotation_axis(d.rotation));
        return j;
    };

    if (g.json) {
        ojson j;
        j["regime"] = to_string(scene.regime);
        j["velocity_unit"] = velocity_unit(scene);
        j["frames"] = ids;
        j["first"] = describe(dab);
        j["second"] = describe(dbc);
        j["composite"] = describe(dac);
        j["wigner_angle"] = rotation_angle(dac.rotation);
        j["residual"] = residual;
        out << j.dump(2) << '\n';
        return kExitPass;
    }

    const char* unit = velocity_unit(scene);
    auto line = [&](const std::string& label, const BoostDecomposition& d) {
        out << label << ": velocity " << vec_str(in_report_units(scene, d.velocity.vec())) << " [" << unit
            << "], rotation " << num(rotation_angle(d.rotation)) << " rad\n";
    };
    line("hom(" + ids[0] + ", " + ids[1] + ")", dab);
    line("hom(" + ids[1] + ", " + ids[2] + ")", dbc);
    if (scene.regime == Regime::classical) {
        out << "velocity addition: " << vec_str(dbc.velocity.vec()) << " + " << vec_str(dab.velocity.vec()) << " = "
            << vec_str(dac.velocity.vec()) << '\n';
    } else {
        line("composite " + ids[0] + " -> " + ids[2], dac);
        out << "wigner angle: " << num(rotation_angle(dac.rotation)) << " rad about "
            << vec_str(rotation_axis(dac.rotation)) << '\n';
    }
    out << "residual vs hom(" << ids[0] << ", " << ids[2] << "): " << num(residual) << '\n';
    return kExitPass;
}

int cmd_check(const GlobalFlags& g, std::ostream& out) {
    const Scene scene = load(g);
    const CheckOptions opt{g.seed, g.samples};
    const Report report = run_checks(scene, opt);
    out << (g.json ? report_json(report, opt) : report_text(report));
    return report.pass ? kExitPass : kExitCheckFailure;
}

int cmd_cscan(const GlobalFlags& g, const std::string& velocity_text, const std::string& c_text,
              const std::string& event_text, std::ostream& out) {
    const Vec3 v = parse_vec3(velocity_text, "velocity");
    const std::vector<double> cs = parse_list(c_text, "c-values");
    const Event e = parse_event(event_text);
    const ConvergenceTable table = limit_scan(v, e, cs);

    constexpr double lo = -2.2, hi = -1.8;
    auto in_range = [&](const std::optional<double>& s) { return !s || (*s >= lo && *s <= hi); };
    const bool ok = in_range(table.morphism_slope) && in_range(table.addition_slope) && in_range(table.gyration_slope);

    if (g.json) {
        ojson j;
        j["velocity"] = vec_json(v);
        j["event"] = event_json(e);
        j["rows"] = ojson::array();
        for (const auto& r : table.rows) {
            j["rows"].push_back({{"c", r.c},
                                 {"morphism_deviation", r.morphism_deviation},
                                 {"addition_deviation", r.addition_deviation},
                                 {"gyration_deviation", r.gyration_deviation}});
        }
        auto slope = [](const std::optional<double>& s) { return s ? ojson(*s) : ojson(nullptr); };
        j["slopes"] = {{"morphism", slope(table.morphism_slope)},
                       {"addition", slope(table.addition_slope)},
                       {"gyration", slope(table.gyration_slope)}};
        j["slopes_in_range"] = ok;
        out << j.dump(2) << '\n';
        return ok ? kExitPass : kExitCheckFailure;
    }

    out << std::setw(14) << "c" << std::setw(22) << "morphism_dev" << std::setw(22) << "addition_dev"
        << std::setw(22) << "gyration_dev" << '\n';
    for (const auto& r : table.rows) {
        out << std::setw(14) << num(r.c) << std::setw(22) << num(r.morphism_deviation) << std::setw(22)
            << num(r.addition_deviation) << std::setw(22) << num(r.gyration_deviation) << '\n';
    }
    auto slope_line = [&](const char* name, const std::optional<double>& s) {
        out << "slope " << name << ": " << (s ? num(*s) : std::string("n/a"))
            << (in_range(s) ? "" : "  [outside -2.2..-1.8]") << '\n';
    };
    slope_line("morphism", table.morphism_slope);
    slope_line("addition", table.addition_slope);
    slope_line("gyration", table.gyration_slope);
    return ok ? kExitPass : kExitCheckFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inertial frames as categories: Galilean and Lorentz kinematics checks", "lorcat"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--scene", g.scene, "Scene file (JSON)");
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--tol", g.tol, "Absolute tolerance")->envname("LORCAT_TOL")->check(CLI::PositiveNumber);
    app.add_option("--c", g.c, "Override the speed of light")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized suites");
    app.add_option("--samples", g.samples, "Sample count for randomized suites");

    std::string frame_id, event_text = "1,0,0,0";
    auto* transform = app.add_subcommand("transform", "Map an event from the anchor frame into a frame");
    transform->add_option("--frame", frame_id, "Target frame id")->required();
    transform->add_option("--event", event_text, "Event t,x,y,z in the anchor frame");

    std::vector<std::string> ids;
    auto* composecmd = app.add_subcommand("compose", "Compose hom(a,b) and hom(b,c) and decompose the result");
    composecmd->add_option("frames", ids, "Frame ids a b c")->required()->expected(3);

    auto* check = app.add_subcommand("check", "Run the scene's category, limit and functor checks");

    std::string velocity_text, c_text = "10,100,1000,10000,100000", scan_event = "1,1,0,0";
    auto* cscan = app.add_subcommand("cscan", "Scan deviations from classical kinematics as c grows");
    cscan->add_option("--velocity", velocity_text, "Velocity vx,vy,vz")->required();
    cscan->add_option("--c-values", c_text, "Increasing list of c values");
    cscan->add_option("--event", scan_event, "Event t,x,y,z");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "lorcat: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*transform) return cmd_transform(g, frame_id, event_text, out);
        if (*composecmd) return cmd_compose(g, ids, out);
        if (*check) return cmd_check(g, out);
        if (*cscan) return cmd_cscan(g, velocity_text, c_text, scan_event, out);
    } catch (const CLI::Error& e) {
        err << "lorcat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "lorcat: parse error at " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "lorcat: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lorcat
