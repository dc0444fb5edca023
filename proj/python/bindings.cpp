#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcdunkl/calderon.hpp"
#include "lcdunkl/commands.hpp"
#include "lcdunkl/convolution.hpp"
#include "lcdunkl/parallel.hpp"
#include "lcdunkl/validation.hpp"

namespace py = pybind11;
using namespace lcd;

namespace {

using Matrix = std::array<double, 4>;
using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

KernelContext context(double k, const Matrix& m) { return {Multiplicity(k), CanonicalMatrix(m[0], m[1], m[2], m[3])}; }

template <class T>
py::array_t<T> to_numpy(const std::vector<T>& v) {
    py::array_t<T> a(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), a.mutable_data());
    return a;
}

SampledSignal signal_on(const GridPtr& g, const CArray& values) {
    if (values.ndim() != 1 || values.shape(0) != g->n)
        throw MismatchError("values must be a 1-d array of length " + std::to_string(g->n));
    return SampledSignal(g, cvec(values.data(), values.data() + g->n));
}

struct PyGrid {
    GridPtr g;
};

}  // namespace

PYBIND11_MODULE(_lcdunkl, m) {
    m.doc() = "Linear canonical Dunkl transform, wavelets and Sobolev extremal problems";

    py::class_<PyGrid>(m, "SpaceGrid")
        .def(py::init([](double k, double x_max, int n) { return PyGrid{make_space_grid(Multiplicity(k), x_max, n)}; }),
             py::arg("k"), py::arg("x_max"), py::arg("n"))
        .def_property_readonly("k", [](const PyGrid& p) { return p.g->k; })
        .def_property_readonly("x_max", [](const PyGrid& p) { return p.g->x_max; })
        .def_property_readonly("n", [](const PyGrid& p) { return p.g->n; })
        .def_property_readonly("nodes", [](const PyGrid& p) { return to_numpy(p.g->nodes); })
        .def_property_readonly("weights", [](const PyGrid& p) { return to_numpy(p.g->mu_weights); });

    m.def("pow_ib", &pow_ib, py::arg("b"), py::arg("e"));
    m.def("dunkl_kernel", py::overload_cast<double, double, double>(&dunkl_kernel), py::arg("k"), py::arg("t"),
          py::arg("x"));
    m.def(
        "lcdt_kernel", [](double k, const Matrix& M, double l, double x) { return lcdt_kernel(context(k, M), l, x); },
        py::arg("k"), py::arg("matrix"), py::arg("lam"), py::arg("x"));

    m.def(
        "lcdt_forward",
        [](const PyGrid& g, const CArray& f, const Matrix& M) {
            return to_numpy(lcdt_forward(signal_on(g.g, f), context(g.g->k, M)).values);
        },
        py::arg("grid"), py::arg("values"), py::arg("matrix"), "Transform on the frequency grid equal to the space grid.");
    m.def(
        "lcdt_inverse",
        [](const PyGrid& g, const CArray& F, const Matrix& M) {
            const auto ctx = context(g.g->k, M);
            const SpectralSignal S(g.g, signal_on(g.g, F).values, ctx.M, g.g->k);
            return to_numpy(lcdt_inverse(S, ctx, g.g).values);
        },
        py::arg("grid"), py::arg("spectrum"), py::arg("matrix"));
    m.def(
        "plancherel_residual",
        [](const PyGrid& g, const CArray& f, const Matrix& M) {
            return plancherel_residual(signal_on(g.g, f), context(g.g->k, M));
        },
        py::arg("grid"), py::arg("values"), py::arg("matrix"));
    m.def(
        "convolve",
        [](const PyGrid& g, const CArray& f, const CArray& h, const Matrix& M) {
            return to_numpy(convolve(signal_on(g.g, f), signal_on(g.g, h), context(g.g->k, M)).values);
        },
        py::arg("grid"), py::arg("f"), py::arg("g"), py::arg("matrix"));

    m.def(
        "admissibility", [](const std::string& w) { return admissibility(WaveletSpec::by_name(w)).value; },
        py::arg("window"));
    m.def(
        "cross_admissibility",
        [](const std::string& a, const std::string& b) {
            return cross_admissibility(WaveletSpec::by_name(a), WaveletSpec::by_name(b)).value;
        },
        py::arg("analysis"), py::arg("synthesis"));
    m.def(
        "convergence_sweep",
        [](const PyGrid& g, const CArray& f, const Matrix& M, const std::vector<std::pair<double, double>>& windows,
           const std::string& w1, const std::string& w2) {
            std::vector<CalderonWindow> wins;
            for (const auto& [e, d] : windows) wins.emplace_back(e, d);
            std::vector<std::tuple<double, double, double>> out;
            for (const auto& r : convergence_sweep(signal_on(g.g, f), WaveletSpec::by_name(w1), WaveletSpec::by_name(w2),
                                                   wins, context(g.g->k, M)))
                out.emplace_back(r.epsilon, r.delta, r.l2_error);
            return out;
        },
        py::arg("grid"), py::arg("values"), py::arg("matrix"), py::arg("windows"), py::arg("analysis") = "hermite2",
        py::arg("synthesis") = "hermite4");

    m.def(
        "constant_Cs", [](double s, double k, const Matrix& M) { return constant_Cs(s, context(k, M)); }, py::arg("s"),
        py::arg("k"), py::arg("matrix"));
    m.def(
        "kernel_Ks", [](double x, double y, double s, double k, const Matrix& M) { return kernel_Ks(x, y, s, context(k, M)); },
        py::arg("x"), py::arg("y"), py::arg("s"), py::arg("k"), py::arg("matrix"));
    m.def(
        "sobolev_norm",
        [](const PyGrid& g, const CArray& f, double s, const Matrix& M) {
            return sobolev_norm(signal_on(g.g, f), s, context(g.g->k, M));
        },
        py::arg("grid"), py::arg("values"), py::arg("s"), py::arg("matrix"));
    m.def(
        "extremal_lcdt",
        [](const PyGrid& g, const CArray& spectrum, double s, double rho, const Matrix& M) {
            const auto ctx = context(g.g->k, M);
            const SpectralSignal S(g.g, signal_on(g.g, spectrum).values, ctx.M, g.g->k);
            return to_numpy(extremal_lcdt(S, SobolevParams(s, rho), ctx, g.g).values);
        },
        py::arg("grid"), py::arg("spectrum"), py::arg("s"), py::arg("rho"), py::arg("matrix"));
    m.def(
        "extremal_cwt",
        [](const PyGrid& g, const CArray& f, double s, double rho, const Matrix& M, double alpha_min, double alpha_max,
           int scales, const std::string& window) {
            const auto ctx = context(g.g->k, M);
            const auto psi = make_wavelet(WaveletSpec::by_name(window), ctx, g.g);
            const auto G = cwt(signal_on(g.g, f), psi, make_scale_grid(Multiplicity(g.g->k), alpha_min, alpha_max, scales), ctx);
            return to_numpy(extremal_cwt(G, SobolevParams(s, rho), psi, ctx).values);
        },
        py::arg("grid"), py::arg("values"), py::arg("s"), py::arg("rho"), py::arg("matrix"), py::arg("alpha_min") = 1e-2,
        py::arg("alpha_max") = 1e2, py::arg("scales") = 64, py::arg("window") = "hermite2",
        "Extremal function for the consistent data g = Phi f.");

    m.def("set_workers", &set_workers, py::arg("n"));
    m.def("workers", &workers);
    m.def(
        "validate",
        [](const std::string& config_json) {
            const auto cfg = config_json.empty() ? default_config() : parse_config(config_json, "<python>");
            py::list out;
            for (const auto& c : run_validation(cfg)) {
                py::dict d;
                d["check_name"] = c.name;
                d["measured"] = c.measured;
                d["bound"] = c.bound;
                d["pass"] = c.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("config_json") = "", "Full validation suite; the JSON text uses the CLI config format.");
    m.def(
        "check_config",
        [](const std::string& text) {
            (void)parse_config(text, "<python>");
            return true;
        },
        py::arg("config_json"));
}
