#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <sgroth/cli.hpp>
#include <sgroth/errors.hpp>
#include <sgroth/grothendieck.hpp>
#include <sgroth/verify.hpp>

namespace py = pybind11;
using namespace sgroth;

namespace
{

using Parts = std::vector<int>;

// Coefficients cross the boundary as Python ints, keyed by part tuples.
py::dict to_dict(const CoeffMap &coeffs)
{
    py::dict out;
    const auto as_int = py::module_::import("builtins").attr("int");
    for (const auto &[lam, c] : coeffs) {
        out[py::tuple(py::cast(lam.parts()))] = as_int(c.str());
    }
    return out;
}

TruncationProfile profile(int deg, std::optional<int> vars)
{
    return TruncationProfile(deg, vars.value_or(std::max(deg, 1)));
}

SkewShape shape_of(const Parts &outer, const Parts &inner)
{
    return SkewShape(Partition(outer), Partition(inner));
}

py::tuple signed_count(const SignedCount &s)
{
    return py::make_tuple(py::module_::import("builtins").attr("int")(s.value.str()), s.sign_exponent);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Skew Schur, stable and dual stable Grothendieck polynomials";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def("conjugate", [](const Parts &p) { return conjugate(Partition(p)).parts(); }, py::arg("parts"));
    m.def("staircase", [](int n) { return staircase(n).parts(); }, py::arg("n"));
    m.def(
        "subpartitions",
        [](const Parts &p) {
            std::vector<Parts> out;
            for (const auto &mu : subpartitions(Partition(p))) {
                out.push_back(mu.parts());
            }
            return out;
        },
        py::arg("parts"));

    m.def(
        "schur",
        [](const Parts &outer, const Parts &inner, int deg, std::optional<int> vars) {
            return to_dict(schur(shape_of(outer, inner), profile(deg, vars)).coeffs());
        },
        py::arg("outer"), py::arg("inner") = Parts{}, py::arg("deg"), py::arg("vars") = py::none());
    m.def(
        "dual_g",
        [](const Parts &outer, const Parts &inner, int deg, std::optional<int> vars) {
            return to_dict(dual_g(shape_of(outer, inner), profile(deg, vars)).coeffs());
        },
        py::arg("outer"), py::arg("inner") = Parts{}, py::arg("deg"), py::arg("vars") = py::none());
    m.def(
        "big_G",
        [](const Parts &outer, const Parts &inner, int deg, std::optional<int> vars) {
            return to_dict(big_G(shape_of(outer, inner), profile(deg, vars)).coeffs());
        },
        py::arg("outer"), py::arg("inner") = Parts{}, py::arg("deg"), py::arg("vars") = py::none());
    m.def(
        "big_G_double",
        [](const Parts &outer, const Parts &mu, int deg, std::optional<int> vars) {
            return to_dict(big_G_double(Partition(outer), Partition(mu), profile(deg, vars)).coeffs());
        },
        py::arg("outer"), py::arg("mu"), py::arg("deg"), py::arg("vars") = py::none());

    m.def(
        "lr_coeff",
        [](const Parts &nu, const Parts &mu, const Parts &target) {
            return signed_count(lr_coeff(Partition(nu), Partition(mu), Partition(target)));
        },
        py::arg("nu"), py::arg("mu"), py::arg("target"));
    m.def(
        "alpha",
        [](const Parts &outer, const Parts &inner, const Parts &content) {
            return signed_count(alpha(shape_of(outer, inner), Partition(content)));
        },
        py::arg("outer"), py::arg("inner"), py::arg("content"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one staircase-groth command line; returns (exit code, stdout, stderr).");
}
