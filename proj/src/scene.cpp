#include "lorcat/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lorcat {

namespace {

using nlohmann::json;

class Reader {
public:
    [[noreturn]] static void fail(const std::string& ptr, const std::string& what) { throw ParseError(ptr, what); }

    static const json& field(const json& obj, const std::string& ptr, const char* key) {
        if (!obj.is_object()) fail(ptr, "expected an object");
        const auto it = obj.find(key);
        if (it == obj.end()) fail(ptr + "/" + key, "missing required field");
        return *it;
    }

    static double number(const json& j, const std::string& ptr) {
        if (!j.is_number()) fail(ptr, "expected a number");
        const double v = j.get<double>();
        if (!std::isfinite(v)) fail(ptr, "expected a finite number");
        return v;
    }

    static std::string string(const json& j, const std::string& ptr) {
        if (!j.is_string()) fail(ptr, "expected a string");
        return j.get<std::string>();
    }

    static Vec3 vec3(const json& j, const std::string& ptr) {
        if (!j.is_array() || j.size() != 3) fail(ptr, "expected an array of 3 numbers");
        return {number(j[0], ptr + "/0"), number(j[1], ptr + "/1"), number(j[2], ptr + "/2")};
    }

    static Mat4 mat4(const json& j, const std::string& ptr) {
        if (!j.is_array() || j.size() != 4) fail(ptr, "expected 4 rows of 4 numbers");
        Mat4 m;
        for (std::size_t r = 0; r < 4; ++r) {
            const std::string row_ptr = ptr + "/" + std::to_string(r);
            if (!j[r].is_array() || j[r].size() != 4) fail(row_ptr, "expected 4 numbers");
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = number(j[r][c], row_ptr + "/" + std::to_string(c));
        }
        return m;
    }

    static std::vector<std::string> strings(const json& j, const std::string& ptr) {
        if (!j.is_array()) fail(ptr, "expected an array of strings");
        std::vector<std::string> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], ptr + "/" + std::to_string(i)));
        return out;
    }

    static std::size_t count(const json& j, const std::string& ptr) {
        if (!j.is_number_integer() || j.get<long long>() < 0) fail(ptr, "expected a non-negative integer");
        return j.get<std::size_t>();
    }
};

std::string line_of(std::string_view text, std::size_t byte) {
    const std::size_t upto = std::min(byte, text.size());
    std::size_t line = 1;
    for (std::size_t i = 0; i < upto; ++i) line += text[i] == '\n';
    return "line " + std::to_string(line);
}

Diagram read_diagram(const json& j, const std::string& ptr, std::size_t position) {
    using R = Reader;
    Diagram d;
    d.name = j.contains("name") ? R::string(j["name"], ptr + "/name") : "diagram" + std::to_string(position);

    const std::vector<std::string> objects = R::strings(R::field(j, ptr, "objects"), ptr + "/objects");
    std::vector<IndexArrow> arrows;
    if (j.contains("arrows")) {
        const json& ja = j["arrows"];
        if (!ja.is_array()) R::fail(ptr + "/arrows", "expected an array");
        for (std::size_t i = 0; i < ja.size(); ++i) {
            const std::string ap = ptr + "/arrows/" + std::to_string(i);
            arrows.push_back({R::string(R::field(ja[i], ap, "id"), ap + "/id"),
                              R::string(R::field(ja[i], ap, "source"), ap + "/source"),
                              R::string(R::field(ja[i], ap, "target"), ap + "/target")});
        }
    }
    std::vector<IndexRelation> relations;
    if (j.contains("relations")) {
        const json& jr = j["relations"];
        if (!jr.is_array()) R::fail(ptr + "/relations", "expected an array");
        for (std::size_t i = 0; i < jr.size(); ++i) {
            const std::string rp = ptr + "/relations/" + std::to_string(i);
            relations.push_back({R::strings(R::field(jr[i], rp, "lhs"), rp + "/lhs"),
                                 R::strings(R::field(jr[i], rp, "rhs"), rp + "/rhs")});
        }
    }
    const std::size_t bound = j.contains("path_bound") ? R::count(j["path_bound"], ptr + "/path_bound") : 4;
    const std::size_t cap = j.contains("class_cap") ? R::count(j["class_cap"], ptr + "/class_cap") : kDefaultClassCap;
    try {
        d.index = build_index(objects, std::move(arrows), std::move(relations), bound, cap);
    } catch (const Error& e) {
        R::fail(ptr, e.what());
    }

    const json& map = R::field(j, ptr, "map");
    if (!map.is_object()) R::fail(ptr + "/map", "expected an object");
    for (const auto& [obj, frame] : map.items()) d.object_map[obj] = R::string(frame, ptr + "/map/" + obj);
    return d;
}

}  // namespace

Scene parse_scene_text(std::string_view text, const FrameOverrides& overrides) {
    using R = Reader;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
    if (!doc.is_object()) R::fail("", "scene must be a JSON object");

    Regime regime_value = Regime::relativistic;
    const std::string regime = R::string(R::field(doc, "", "regime"), "/regime");
    if (regime == "lorentz") regime_value = Regime::relativistic;
    else if (regime == "galilean") regime_value = Regime::classical;
    else R::fail("/regime", "expected \"galilean\" or \"lorentz\", got \"" + regime + "\"");

    double c = doc.contains("c") ? R::number(doc["c"], "/c") : 1.0;
    if (overrides.c) c = *overrides.c;
    if (!(c > 0.0)) R::fail("/c", "speed of light must be positive");
    const LightSpeed light(c);

    double tol = doc.contains("tolerance") ? R::number(doc["tolerance"], "/tolerance") : 1e-9;
    if (overrides.tolerance) tol = *overrides.tolerance;
    if (!(tol > 0.0)) R::fail("/tolerance", "tolerance must be positive");

    FrameSpaceBuilder builder(regime_value, light);
    if (doc.contains("anchor")) builder.anchor(R::string(doc["anchor"], "/anchor"));
    const json& frames = R::field(doc, "", "frames");
    if (!frames.is_array() || frames.empty()) R::fail("/frames", "expected a non-empty array");
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const std::string fp = "/frames/" + std::to_string(i);
        const json& jf = frames[i];
        const std::string id = R::string(R::field(jf, fp, "id"), fp + "/id");
        const Vec3 v = R::vec3(R::field(jf, fp, "velocity"), fp + "/velocity");
        Mat3 rotation = Mat3::identity();
        if (jf.contains("rotation")) {
            const json& jr = jf["rotation"];
            const Vec3 axis = R::vec3(R::field(jr, fp + "/rotation", "axis"), fp + "/rotation/axis");
            const double angle = R::number(R::field(jr, fp + "/rotation", "angle"), fp + "/rotation/angle");
            try {
                rotation = rotation_from_axis_angle(axis, angle);
            } catch (const Error& e) {
                R::fail(fp + "/rotation", e.what());
            }
        }
        builder.add(id, v, rotation);
        if (jf.contains("matrix_perturbation")) {
            builder.perturb(id, R::mat4(jf["matrix_perturbation"], fp + "/matrix_perturbation"));
        }
    }
    Scene scene{regime_value, light, tol, builder.build(), {}, std::nullopt};

    if (doc.contains("diagrams")) {
        const json& jd = doc["diagrams"];
        if (!jd.is_array()) R::fail("/diagrams", "expected an array");
        for (std::size_t i = 0; i < jd.size(); ++i) {
            const std::string dp = "/diagrams/" + std::to_string(i);
            Diagram d = read_diagram(jd[i], dp, i);
            try {
                validate_diagram(scene.space, d);
            } catch (const Error& e) {
                R::fail(dp + "/map", e.what());
            }
            scene.diagrams.push_back(std::move(d));
        }
    }

    if (doc.contains("checks")) scene.checks = R::strings(doc["checks"], "/checks");
    return scene;
}

Scene parse_scene(const std::string& path, const FrameOverrides& overrides) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open scene file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene_text(buf.str(), overrides);
}

}  // namespace lorcat
