#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hess/cli.hpp"
#include "hess/errors.hpp"
#include "hess/ideal.hpp"
#include "hess/poincare.hpp"
#include "hess/serialize.hpp"

namespace py = pybind11;
using namespace hess;

namespace {

std::vector<std::string> coeff_strings(const QPolynomial& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

ThetaSet theta_arg(const RootSystem& rs, const std::vector<int>& one_based) { return theta_from_one_based(rs, one_based); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Poincare polynomials of regular nilpotent partial Hessenberg varieties";

    static py::exception<Error> error(m, "HessError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            error((std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def(
        "roots",
        [](char family, int rank) {
            const RootSystem rs = RootSystem::build(family, rank);
            std::vector<std::vector<int>> out;
            for (const auto& r : rs.positive_roots()) out.push_back(r.coeffs);
            return out;
        },
        py::arg("family"), py::arg("rank"));

    m.def(
        "theta_ideals",
        [](char family, int rank, const std::vector<int>& theta) {
            const RootSystem rs = RootSystem::build(family, rank);
            std::vector<std::vector<int>> out;
            for (const auto& s : enumerate_theta_ideals(rs, theta_arg(rs, theta))) out.push_back(s.indices());
            return out;
        },
        py::arg("family"), py::arg("rank"), py::arg("theta") = std::vector<int>{});

    m.def(
        "poincare",
        [](char family, int rank, const std::vector<int>& ideal, const std::vector<int>& theta, const std::string& method) {
            const RootSystem rs = RootSystem::build(family, rank);
            const RootSet I = ideal_from_indices(rs, ideal);
            const ThetaSet t = theta_arg(rs, theta);
            auto m = parse_method(method);
            if (!m || *m == Method::QBinomial) throw Error(ErrorKind::InvalidArgs, "method must be cells, weyltype, product or height-dist");
            QPolynomial p;
            switch (*m) {
                case Method::Cells: p = poincare_cells(rs, I, t); break;
                case Method::WeylType: p = poincare_weyltype(rs, I, t); break;
                case Method::Product: p = poincare_product(rs, I, t); break;
                default: p = poincare_height_dist(rs, I, t); break;
            }
            return coeff_strings(p);
        },
        py::arg("family"), py::arg("rank"), py::arg("ideal"), py::arg("theta") = std::vector<int>{},
        py::arg("method") = "product");

    m.def(
        "poincare_hessenberg",
        [](int n, const std::vector<int>& K, const std::vector<int>& h) {
            return coeff_strings(poincare_qbinomial(PartialHessenbergFunction{n, K, h}));
        },
        py::arg("n"), py::arg("K"), py::arg("h"));

    m.def(
        "hessenberg_ideal",
        [](int n, const std::vector<int>& K, const std::vector<int>& h) {
            const RootSystem rs = RootSystem::build('A', n - 1);
            const HessenbergIdeal hi = ideal_from_partial_hessenberg(rs, {n, K, h});
            std::vector<int> theta;
            for (int i : hi.theta.indices()) theta.push_back(i + 1);
            return py::make_tuple(hi.ideal.indices(), theta);
        },
        py::arg("n"), py::arg("K"), py::arg("h"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
