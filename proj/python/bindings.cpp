#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pptball/grid_oracle.hpp"
#include "pptball/pptball.hpp"
#include "pptball/report.hpp"

namespace py = pybind11;
using namespace pptball;

namespace {

UPBSet lookup(const std::string& name) {
    auto upb = find_upb(name);
    if (!upb) throw ValidationError("unknown UPB: " + name);
    return *upb;
}

SeesawConfig seesaw(std::size_t restarts, std::uint64_t seed) {
    SeesawConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
}

BoundMode parse_mode(const std::string& mode) {
    if (mode == "tight") return BoundMode::Tight;
    if (mode == "paper") return BoundMode::PaperExact;
    throw ValidationError("bound mode must be 'tight' or 'paper'");
}

DensityMatrix density(const Matrix& m, const std::vector<std::size_t>& dims) {
    return DensityMatrix(HermitianOperator(m), HilbertStructure(dims));
}

LambdaResult run_lambda(const UPBSet& upb, const SeesawConfig& cfg) {
    return upb.structure().parties() == 2 ? compute_lambda(upb, cfg) : compute_lambda_multipartite(upb, cfg);
}

}  // namespace

PYBIND11_MODULE(_pptball, m) {
    m.doc() = "Native core of pptball";
    m.attr("__version__") = kToolVersion;
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def("catalog_names", &catalog_names);
    m.def("upb_json", [](const std::string& name) { return to_json(lookup(name)).dump(); });
    m.def("upb_projector", [](const std::string& name) { return lookup(name).projector().matrix(); });
    m.def("omega", [](const std::string& name) { return omega_state(lookup(name)).matrix(); });

    m.def(
        "lambda_json",
        [](const std::string& name, std::size_t restarts, std::uint64_t seed) {
            return to_json(run_lambda(lookup(name), seesaw(restarts, seed))).dump();
        },
        py::arg("name"), py::arg("restarts") = 200, py::arg("seed") = 0);
    m.def("grid_oracle_lambda", [](const std::string& name) { return grid_oracle_lambda(lookup(name)).value; });

    m.def(
        "witness",
        [](const std::string& name, std::size_t restarts, std::uint64_t seed) {
            const auto upb = lookup(name);
            return build_witness(upb, run_lambda(upb, seesaw(restarts, seed))).op().matrix();
        },
        py::arg("name"), py::arg("restarts") = 200, py::arg("seed") = 0);

    m.def(
        "profile_json",
        [](const std::string& name, std::size_t grid, std::size_t restarts, std::uint64_t seed, const std::string& mode) {
            const auto a = analyze_upb(lookup(name), seesaw(restarts, seed));
            return to_json(build_profile(a, grid, parse_mode(mode))).dump();
        },
        py::arg("name"), py::arg("grid") = 50, py::arg("restarts") = 200, py::arg("seed") = 0,
        py::arg("bound_mode") = "tight");

    m.def(
        "verify_json",
        [](const std::string& name, std::size_t trials, std::uint64_t seed, std::size_t restarts) {
            const auto a = analyze_upb(lookup(name), seesaw(restarts, seed));
            const auto grid = interior_grid(a.x_star, 10);
            Json j;
            j["ball"] = to_json(verify_ball(a, grid, 0.99, SamplerConfig{seed, trials, 1}));
            j["separable_mixing"] = to_json(verify_separable_mixing(a, 0.99, SamplerConfig{seed, trials, 2}));
            return j.dump();
        },
        py::arg("name"), py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("restarts") = 200);

    m.def(
        "eigh",
        [](const Matrix& a) {
            const auto e = eig_hermitian(HermitianOperator(a));
            return py::make_tuple(RealVector(e.eigenvalues), Matrix(e.eigenvectors));
        },
        "Eigenvalues (ascending) and eigenvectors of a Hermitian matrix");
    m.def("partial_transpose", [](const Matrix& a, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& side) {
        const HilbertStructure s(dims);
        return partial_transpose(a, s, Bipartition(side, s));
    });
    m.def("is_ppt_all_cuts", [](const Matrix& rho, const std::vector<std::size_t>& dims) {
        const auto r = is_ppt_all_cuts(density(rho, dims));
        return py::make_tuple(r.ppt, r.min_eigenvalue);
    });
    m.def("ball_membership", [](const Matrix& tau, const Matrix& center, const std::vector<std::size_t>& dims) {
        return ball_membership(density(tau, dims), density(center, dims));
    });

    m.def("entanglement_threshold", &entanglement_threshold, py::arg("lambda_rho"), py::arg("dim"));
    m.def("upb_entanglement_threshold", &upb_entanglement_threshold, py::arg("n"), py::arg("dim"), py::arg("lambda_"));
    m.def("purity_branch", &purity_branch, py::arg("x"), py::arg("dim"));
    m.def(
        "crossing_x0_json",
        [](std::size_t n, std::size_t dim, double lambda) { return to_json(crossing_x0(n, dim, lambda)).dump(); },
        py::arg("n"), py::arg("dim"), py::arg("lambda_"));
}
