#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetalift/bessel.hpp"
#include "thetalift/bounds.hpp"
#include "thetalift/config.hpp"
#include "thetalift/lattice.hpp"
#include "thetalift/lift.hpp"
#include "thetalift/maass.hpp"
#include "thetalift/petersson.hpp"

namespace py = pybind11;
using namespace thetalift;

namespace {

py::tuple rational_tuple(const Rational& q) { return py::make_tuple(q.numerator(), q.denominator()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Theta lifts of level-1 Maass forms to O(1, N+1): core numerics";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_LookupError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

    m.attr("DATA_DIR") = THETALIFT_DATA_DIR;

    // lattice
    py::class_<Lattice>(m, "Lattice")
        .def(py::init([](std::vector<std::vector<long long>> gram, std::string name) {
                 std::vector<long long> flat;
                 for (auto& row : gram) {
                     if (row.size() != gram.size()) throw ValidationError("Gram matrix must be square");
                     flat.insert(flat.end(), row.begin(), row.end());
                 }
                 return Lattice(static_cast<int>(gram.size()), flat, name);
             }),
             py::arg("gram"), py::arg("name") = "custom")
        .def_static("builtin", &Lattice::builtin)
        .def_static("from_json_file", &Lattice::from_json_file)
        .def_property_readonly("rank", &Lattice::rank)
        .def_property_readonly("name", &Lattice::name)
        .def("norm", [](const Lattice& l, std::vector<int> v) {
            if (static_cast<int>(v.size()) != l.rank()) throw DomainError("vector length does not match rank");
            return l.norm(v);
        });
    m.def("shell_counts", [](const Lattice& lat, long long max_norm) {
        auto c = count_shells(lat, max_norm);
        return py::make_tuple(c.total, c.primitive);
    }, py::arg("lattice"), py::arg("max_norm"));
    m.def("enumerate_shell", [](const Lattice& lat, long long m) {
        auto tab = enumerate_shells(lat, m);
        const Shell& s = tab.shell(m);
        std::vector<std::pair<std::vector<int>, int>> out;
        for (std::size_t i = 0; i < s.size(); ++i)
            out.emplace_back(std::vector<int>(s[i].coords.begin(), s[i].coords.end()), s[i].primitivity);
        return out;
    }, py::arg("lattice"), py::arg("m"));

    // maass
    py::class_<MaassForm>(m, "MaassForm")
        .def(py::init([](double r, int parity, double c1, std::optional<double> norm_sq,
                         std::map<long long, double> hecke) {
                 return MaassForm(r, parity, c1, norm_sq, std::move(hecke));
             }),
             py::arg("r"), py::arg("parity"), py::arg("c1"), py::arg("norm_sq"), py::arg("hecke"))
        .def_static("from_json_file", [](const std::string& path) { return MaassForm::from_json_file(path); })
        .def_property_readonly("r", &MaassForm::r)
        .def_property_readonly("parity", &MaassForm::parity)
        .def_property_readonly("c1", &MaassForm::c1)
        .def_property_readonly("norm_sq", &MaassForm::norm_sq)
        .def_property_readonly("max_prime", &MaassForm::max_prime)
        .def("scaled", &MaassForm::scaled)
        .def("hecke_eigenvalue", &MaassForm::hecke_eigenvalue)
        .def("coefficient", &MaassForm::coefficient);

    // bessel
    m.def("k_scaled", &bessel::k_scaled, py::arg("r"), py::arg("y"),
          "e^{pi r/2} K_{ir}(y); 0 when the value underflows");
    m.def("k_scaled_log", [](double r, double y) {
        auto v = bessel::k_scaled_log(r, y);
        return py::make_tuple(v.mantissa, v.log_scale);
    }, py::arg("r"), py::arg("y"));
    m.def("bessel_regime", [](double r, double y) { return std::string(bessel::to_string(bessel::classify(r, y))); });
    m.def("bessel_envelope", [](double r, double y) { return bessel::envelope(r, y); });
    m.def("airy_transition", [](double r, double y) { return bessel::airy_transition(r, y).value; });

    // petersson
    m.def("arch_factor", &petersson::arch_factor, py::arg("N"), py::arg("r"));
    m.def("norm_ratio", [](const MaassForm& f, int N, long long P) {
        auto nf = petersson::norm_ratio(f, N, P);
        py::dict d;
        d["arch_factor"] = nf.arch_factor;
        d["adjoint_L"] = nf.adjoint.value;
        d["adjoint_truncation_error"] = nf.adjoint.truncation_error;
        d["zeta_half"] = nf.zeta_half;
        d["zeta_N"] = nf.zeta_N;
        d["ratio"] = nf.ratio;
        return d;
    }, py::arg("form"), py::arg("N"), py::arg("primes") = 100);

    // lift
    m.def("coefficient_A", py::overload_cast<const MaassForm&, int, long long, long long>(&lift::coefficient_A),
          py::arg("form"), py::arg("N"), py::arg("m"), py::arg("d"));
    m.def("lift_eval", [](const Lattice& lat, const MaassForm& f, std::vector<double> x, double y, double tol) {
        lift::EvalOptions o;
        o.tol = tol;
        auto e = lift::evaluate(lat, f, x, y, o);
        py::dict d;
        d["value"] = e.value;
        d["truncation_M"] = e.truncation_M;
        d["tail_bound"] = e.tail_bound;
        return d;
    }, py::arg("lattice"), py::arg("form"), py::arg("x"), py::arg("y"), py::arg("tol") = 1e-10);

    // bounds
    m.def("combined_bound", [](double r, int N) {
        auto cb = bounds::combined_bound(SpectralParams(r, N));
        py::dict d;
        d["y0_exponent"] = rational_tuple(cb.y0_exponent);
        d["y0"] = cb.y0;
        d["sup_exponent"] = rational_tuple(cb.sup_exponent);
        d["secondary_exponent"] = rational_tuple(cb.secondary_exponent);
        return d;
    }, py::arg("r"), py::arg("N"));
    m.def("fourier_envelope", [](double r, int N, double y) { return bounds::fourier_envelope(SpectralParams(r, N), y); });
    m.def("pretrace_envelope", [](double r, int N, double ht) { return bounds::pretrace_envelope(SpectralParams(r, N), ht); });
}
