#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>
#include <tuple>

#include "lorcat/cli.hpp"
#include "lorcat/errors.hpp"
#include "lorcat/functors.hpp"
#include "lorcat/kinematics.hpp"
#include "lorcat/report.hpp"
#include "lorcat/scene.hpp"

namespace py = pybind11;
using namespace lorcat;

namespace {

using Vec = std::array<double, 3>;
using Ev = std::array<double, 4>;
using Rows4 = std::array<std::array<double, 4>, 4>;
using Rows3 = std::array<std::array<double, 3>, 3>;

Vec3 vec(const Vec& v) { return {v[0], v[1], v[2]}; }
Vec out(const Vec3& v) { return {v.x, v.y, v.z}; }
Event event(const Ev& e) { return {e[0], {e[1], e[2], e[3]}}; }
Ev out(const Event& e) { return {e.t, e.x.x, e.x.y, e.x.z}; }

Rows4 out(const Mat4& m) {
    Rows4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r[i][j] = m(i, j);
    return r;
}

Rows3 out(const Mat3& m) {
    Rows3 r{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r[i][j] = m(i, j);
    return r;
}

}  // namespace

PYBIND11_MODULE(lorcat, m) {
    m.doc() = "Galilean and Lorentz frame categories: boosts, velocity addition, Thomas rotation and scene checks";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<SuperluminalError>(m, "SuperluminalError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def("lorentz_factor", [](const Vec& v, double c) { return lorentz_factor(vec(v), LightSpeed(c)); },
          py::arg("v"), py::arg("c") = 1.0);
    m.def("boost_matrix", [](const Vec& v, double c) { return out(boost_matrix(vec(v), LightSpeed(c))); },
          py::arg("v"), py::arg("c") = 1.0);
    m.def("galilean_matrix", [](const Vec& v) { return out(galilean_matrix(vec(v))); }, py::arg("v"));
    m.def(
        "boost_apply",
        [](const Vec& v, const Ev& e, double c) {
            const LightSpeed lc(c);
            return out(boost_apply(Velocity::relativistic(vec(v), lc), lc, event(e)));
        },
        py::arg("v"), py::arg("event"), py::arg("c") = 1.0);
    m.def(
        "galilean_apply",
        [](const Vec& v, const Ev& e) { return out(galilean_apply(Velocity::classical(vec(v)), event(e))); },
        py::arg("v"), py::arg("event"));
    m.def("einstein_add", [](const Vec& u, const Vec& v, double c) { return out(einstein_add(vec(u), vec(v), LightSpeed(c))); },
          py::arg("u"), py::arg("v"), py::arg("c") = 1.0);
    m.def("gyration", [](const Vec& u, const Vec& v, double c) { return out(gyration(vec(u), vec(v), LightSpeed(c))); },
          py::arg("u"), py::arg("v"), py::arg("c") = 1.0);
    m.def("interval", [](const Ev& e, double c) { return interval(event(e), LightSpeed(c)); }, py::arg("event"),
          py::arg("c") = 1.0);

    m.def(
        "limit_scan",
        [](const Vec& v, const Ev& e, const std::vector<double>& cs) {
            const ConvergenceTable t = limit_scan(vec(v), event(e), cs);
            py::list rows;
            for (const auto& r : t.rows) {
                py::dict d;
                d["c"] = r.c;
                d["morphism_deviation"] = r.morphism_deviation;
                d["addition_deviation"] = r.addition_deviation;
                d["gyration_deviation"] = r.gyration_deviation;
                rows.append(d);
            }
            py::dict result;
            result["rows"] = rows;
            result["morphism_slope"] = t.morphism_slope;
            result["addition_slope"] = t.addition_slope;
            result["gyration_slope"] = t.gyration_slope;
            return result;
        },
        py::arg("v"), py::arg("event") = Ev{1, 1, 0, 0},
        py::arg("c_values") = std::vector<double>{10, 1e2, 1e3, 1e4, 1e5});

    m.def(
        "check_scene",
        [](const std::string& path, std::uint64_t seed, std::size_t samples) {
            const Scene scene = parse_scene(path);
            const CheckOptions options{seed, samples};
            const std::string json = report_json(run_checks(scene, options), options);
            return py::module_::import("json").attr("loads")(json);
        },
        py::arg("path"), py::arg("seed") = 0, py::arg("samples") = 1000);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream o, e;
            const int code = run_cli(args, o, e);
            return std::make_tuple(code, o.str(), e.str());
        },
        py::arg("args"));
}
