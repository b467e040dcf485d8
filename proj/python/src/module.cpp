#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nu_spectra/error.hpp"
#include "nu_spectra/nu_core.hpp"
#include "nu_spectra/oracle.hpp"
#include "nu_spectra/potentials.hpp"
#include "nu_spectra/special_functions.hpp"
#include "nu_spectra/tridiagonal.hpp"

namespace py = pybind11;
using namespace nuspec;

namespace {

Flux to_flux(const py::object& value)
{
    if (py::isinstance<Flux>(value)) {
        return value.cast<Flux>();
    }
    return Flux::from_value(value.cast<double>());
}

void bind_potentials(py::module_& m)
{
    py::enum_<Family>(m, "Family")
        .value("coulomb", Family::coulomb)
        .value("oscillator", Family::oscillator)
        .value("kratzer", Family::kratzer)
        .value("mie", Family::mie);

    py::enum_<Source>(m, "Source")
        .value("closed_form", Source::closed_form)
        .value("nu_root", Source::nu_root)
        .value("oracle", Source::oracle);

    py::enum_<Variable>(m, "Variable")
        .value("r", Variable::r)
        .value("s_equals_omega_r_squared", Variable::s_equals_omega_r_squared);

    py::class_<PhysicalScale>(m, "PhysicalScale")
        .def(py::init([](double hbar, double mass) { return PhysicalScale{hbar, mass}; }), py::arg("hbar") = 1.0,
             py::arg("mass") = 1.0)
        .def_readwrite("hbar", &PhysicalScale::hbar)
        .def_readwrite("mass", &PhysicalScale::mass)
        .def_property_readonly("kinetic_factor", &PhysicalScale::kinetic_factor);

    py::class_<ModifiedCoulomb>(m, "ModifiedCoulomb")
        .def(py::init([](double a, double b) { return ModifiedCoulomb{a, b}; }), py::arg("a") = 0.0, py::arg("b") = 1.0)
        .def_readwrite("a", &ModifiedCoulomb::a)
        .def_readwrite("b", &ModifiedCoulomb::b);
    py::class_<ModifiedOscillator>(m, "ModifiedOscillator")
        .def(py::init([](double a, double b) { return ModifiedOscillator{a, b}; }), py::arg("a") = 0.0,
             py::arg("b") = 0.5)
        .def_readwrite("a", &ModifiedOscillator::a)
        .def_readwrite("b", &ModifiedOscillator::b);
    py::class_<KratzerFues>(m, "KratzerFues")
        .def(py::init([](double b, double c) { return KratzerFues{b, c}; }), py::arg("b") = 1.0, py::arg("c") = 1.0)
        .def_readwrite("b", &KratzerFues::b)
        .def_readwrite("c", &KratzerFues::c);
    py::class_<MieType>(m, "MieType")
        .def(py::init([](double a, double b, double c) { return MieType{a, b, c}; }), py::arg("a") = 0.0,
             py::arg("b") = 1.0, py::arg("c") = 1.0)
        .def_readwrite("a", &MieType::a)
        .def_readwrite("b", &MieType::b)
        .def_readwrite("c", &MieType::c);

    m.def("make_potential", &make_potential, py::arg("family"), py::arg("a") = 0.0, py::arg("b") = 1.0,
          py::arg("c") = 0.0);
    m.def("family_of", &family_of);
    m.def("potential_value", &potential_value, py::arg("spec"), py::arg("r"));
    m.def(
        "potential_values",
        [](const PotentialSpec& spec, py::array_t<double, py::array::c_style | py::array::forcecast> r) {
            py::array_t<double> out(r.request().shape);
            double* dst = out.mutable_data();
            const double* src = r.data();
            for (py::ssize_t i = 0; i < r.size(); ++i) {
                dst[i] = potential_value(spec, src[i]);
            }
            return out;
        },
        py::arg("spec"), py::arg("r"), "V(r) evaluated elementwise over an array of radii.");
    m.def("potential_offset", &potential_offset, py::arg("spec"));

    py::class_<Flux>(m, "Flux")
        .def(py::init<int, double>(), py::arg("whole"), py::arg("fraction"))
        .def_static("from_value", &Flux::from_value)
        .def_property_readonly("whole", &Flux::whole)
        .def_property_readonly("fraction", &Flux::fraction)
        .def_property_readonly("value", &Flux::value)
        .def("shifted", &Flux::shifted)
        .def("__float__", &Flux::value)
        .def("__repr__", [](const Flux& f) {
            return py::str("Flux(whole={}, fraction={!r})").format(f.whole(), f.fraction());
        });

    py::class_<QuantumState>(m, "QuantumState")
        .def(py::init([](int n, int l, const py::object& flux, int mq) { return QuantumState{n, l, to_flux(flux), mq}; }),
             py::arg("n"), py::arg("l"), py::arg("flux") = 0.0, py::arg("m") = 0)
        .def_readwrite("n", &QuantumState::n)
        .def_readwrite("l", &QuantumState::l)
        .def_readwrite("flux", &QuantumState::flux)
        .def_readwrite("m", &QuantumState::m)
        .def_property_readonly("l0", &QuantumState::l0)
        .def_property_readonly("j0", &QuantumState::j0);

    py::class_<EnergyLevel>(m, "EnergyLevel")
        .def_readonly("state", &EnergyLevel::state)
        .def_readonly("energy", &EnergyLevel::energy)
        .def_readonly("source", &EnergyLevel::source);

    m.def("effective_radial_coefficients", &effective_radial_coefficients, py::arg("spec"), py::arg("state"),
          py::arg("scale") = PhysicalScale{}, py::arg("energy"));
    m.def("closed_form_energy", &closed_form_energy, py::arg("spec"), py::arg("state"), py::arg("scale") = PhysicalScale{});
    m.def(
        "energy",
        [](const PotentialSpec& spec, int n, int l, const py::object& flux, const PhysicalScale& scale) {
            return closed_form_energy(spec, QuantumState{n, l, to_flux(flux)}, scale).energy;
        },
        py::arg("spec"), py::arg("n"), py::arg("l"), py::arg("flux") = 0.0, py::arg("scale") = PhysicalScale{},
        "Closed-form energy of level (n, l) at the given flux.");

    py::class_<RadialWavefunction>(m, "RadialWavefunction")
        .def_readonly("state", &RadialWavefunction::state)
        .def_readonly("energy", &RadialWavefunction::energy)
        .def_readonly("variable", &RadialWavefunction::variable)
        .def_readonly("variable_factor", &RadialWavefunction::variable_factor)
        .def_readonly("form", &RadialWavefunction::form)
        .def_readonly("norm_constant", &RadialWavefunction::norm_constant)
        .def("radial", py::vectorize(&RadialWavefunction::radial), py::arg("r"))
        .def("reduced", py::vectorize(&RadialWavefunction::reduced), py::arg("r"))
        .def("flux_form", py::vectorize(&RadialWavefunction::flux_form), py::arg("r"));

    m.def("closed_form_wavefunction", &closed_form_wavefunction, py::arg("spec"), py::arg("state"),
          py::arg("scale") = PhysicalScale{});
    m.def("normalize", &normalize, py::arg("wavefunction"), py::arg("r_max"), py::arg("samples") = 2001);

    py::class_<SpectrumRow>(m, "SpectrumRow")
        .def_readonly("state", &SpectrumRow::state)
        .def_readonly("energy", &SpectrumRow::energy)
        .def_readonly("source", &SpectrumRow::source)
        .def_readonly("status", &SpectrumRow::status);
    py::class_<SpectrumTable>(m, "SpectrumTable")
        .def(py::init<>())
        .def_readonly("rows", &SpectrumTable::rows)
        .def("__len__", [](const SpectrumTable& t) { return t.rows.size(); });
    m.def(
        "spectrum",
        [](const PotentialSpec& spec, int n_max, int l_max, const py::object& flux, const PhysicalScale& scale) {
            return spectrum(spec, n_max, l_max, to_flux(flux), scale);
        },
        py::arg("spec"), py::arg("n_max"), py::arg("l_max"), py::arg("flux") = 0.0, py::arg("scale") = PhysicalScale{});
}

void bind_nu(py::module_& m)
{
    auto nu = m.def_submodule("nu", "parametric Nikiforov-Uvarov machinery");
    py::class_<nu::Input>(nu, "Input")
        .def(py::init([](double a1, double a2, double a3, double x1, double x2, double x3) {
                 return nu::Input{a1, a2, a3, x1, x2, x3};
             }),
             py::arg("alpha1"), py::arg("alpha2"), py::arg("alpha3"), py::arg("xi1"), py::arg("xi2"), py::arg("xi3"))
        .def_readwrite("alpha1", &nu::Input::alpha1)
        .def_readwrite("alpha2", &nu::Input::alpha2)
        .def_readwrite("alpha3", &nu::Input::alpha3)
        .def_readwrite("xi1", &nu::Input::xi1)
        .def_readwrite("xi2", &nu::Input::xi2)
        .def_readwrite("xi3", &nu::Input::xi3);
    py::class_<nu::Derived> derived(nu, "Derived");
    derived.def_readonly("source", &nu::Derived::source);
#define NU_FIELD(k) derived.def_readonly("alpha" #k, &nu::Derived::alpha##k)
    NU_FIELD(4);
    NU_FIELD(5);
    NU_FIELD(6);
    NU_FIELD(7);
    NU_FIELD(8);
    NU_FIELD(9);
    NU_FIELD(10);
    NU_FIELD(11);
    NU_FIELD(12);
    NU_FIELD(13);
#undef NU_FIELD
    py::class_<nu::WavefunctionForm>(nu, "WavefunctionForm")
        .def_readonly("power", &nu::WavefunctionForm::power)
        .def_readonly("rate", &nu::WavefunctionForm::rate)
        .def_readonly("degree", &nu::WavefunctionForm::degree)
        .def_readonly("order", &nu::WavefunctionForm::order)
        .def_readonly("scale", &nu::WavefunctionForm::scale)
        .def_readonly("general_case", &nu::WavefunctionForm::general_case)
        .def("evaluate", py::vectorize(&nu::WavefunctionForm::evaluate), py::arg("s"));

    nu.def("derive_parameters", &nu::derive_parameters);
    nu.def("energy_residual_general", &nu::energy_residual_general, py::arg("input"), py::arg("n"));
    nu.def("energy_residual_reduced", &nu::energy_residual_reduced, py::arg("input"), py::arg("n"));
    nu.def(
        "solve_energy",
        [](const nu::Mapper& mapper, int n, std::pair<double, double> bracket, double tolerance, int max_iterations) {
            return nu::solve_energy(mapper, n, nu::Bracket{bracket.first, bracket.second}, tolerance, max_iterations);
        },
        py::arg("mapper"), py::arg("n"), py::arg("bracket"), py::arg("tolerance") = 1e-12, py::arg("max_iterations") = 200);
    nu.def("wavefunction_form", &nu::wavefunction_form, py::arg("derived"), py::arg("n"));
}

void bind_numerics(py::module_& m)
{
    auto special = m.def_submodule("special", "orthogonal polynomials and quadrature");
    special.def("laguerre", py::vectorize(&special::laguerre), py::arg("n"), py::arg("beta"), py::arg("x"));
    special.def("jacobi", py::vectorize(&special::jacobi), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("x"));
    special.def("binomial_shifted", &special::binomial_shifted, py::arg("n"), py::arg("beta"));
    special.def(
        "integrate_samples",
        [](const std::vector<double>& values, double step) { return special::integrate_samples(values, step); },
        py::arg("values"), py::arg("step"));

    auto linalg = m.def_submodule("linalg", "symmetric tridiagonal eigenproblems");
    linalg.def(
        "eigen_tridiagonal",
        [](const std::vector<double>& diag, const std::vector<double>& offdiag, int k) {
            std::vector<double> values;
            std::vector<std::vector<double>> vectors;
            for (auto& p : linalg::eigen_tridiagonal(diag, offdiag, k)) {
                values.push_back(p.value);
                vectors.push_back(std::move(p.vector));
            }
            return std::make_pair(values, vectors);
        },
        py::arg("diag"), py::arg("offdiag"), py::arg("k"), "Lowest k eigenvalues and unit eigenvectors.");
    linalg.def(
        "sturm_count",
        [](const std::vector<double>& diag, const std::vector<double>& offdiag, double mu) {
            return linalg::sturm_count(diag, offdiag, mu);
        },
        py::arg("diag"), py::arg("offdiag"), py::arg("mu"));

    auto orc = m.def_submodule("oracle", "finite-difference radial eigensolver");
    py::enum_<oracle::Mesh>(orc, "Mesh").value("uniform", oracle::Mesh::uniform).value("mapped", oracle::Mesh::mapped);
    py::class_<oracle::OracleConfig>(orc, "OracleConfig")
        .def(py::init<>())
        .def_readwrite("r_min", &oracle::OracleConfig::r_min)
        .def_readwrite("r_max", &oracle::OracleConfig::r_max)
        .def_readwrite("points", &oracle::OracleConfig::points)
        .def_readwrite("levels_requested", &oracle::OracleConfig::levels_requested)
        .def_readwrite("mesh", &oracle::OracleConfig::mesh)
        .def_readwrite("map_scale", &oracle::OracleConfig::map_scale);
    py::class_<oracle::OracleResult>(orc, "OracleResult")
        .def_readonly("config", &oracle::OracleResult::config)
        .def_readonly("radii", &oracle::OracleResult::radii)
        .def_readonly("weights", &oracle::OracleResult::weights)
        .def_readonly("eigenvalues", &oracle::OracleResult::eigenvalues)
        .def_readonly("eigenvectors", &oracle::OracleResult::eigenvectors);
    py::class_<oracle::LevelCheck>(orc, "LevelCheck")
        .def_readonly("state", &oracle::LevelCheck::state)
        .def_readonly("closed_form", &oracle::LevelCheck::closed_form)
        .def_readonly("numeric", &oracle::LevelCheck::numeric)
        .def_readonly("deviation", &oracle::LevelCheck::deviation)
        .def_readonly("passed", &oracle::LevelCheck::pass);
    py::class_<oracle::ComparisonReport>(orc, "ComparisonReport")
        .def_readonly("levels", &oracle::ComparisonReport::levels)
        .def_readonly("worst_deviation", &oracle::ComparisonReport::worst_deviation)
        .def_readonly("passed", &oracle::ComparisonReport::pass)
        .def_readonly("warning", &oracle::ComparisonReport::warning)
        .def_readonly("grid", &oracle::ComparisonReport::grid);

    orc.def(
        "default_config",
        [](const PotentialSpec& spec, int l, const py::object& flux, const PhysicalScale& scale, int n_max,
           oracle::Mesh mesh) { return oracle::default_config(spec, l, to_flux(flux), scale, n_max, mesh); },
        py::arg("spec"), py::arg("l"), py::arg("flux") = 0.0, py::arg("scale") = PhysicalScale{}, py::arg("n_max") = 2,
        py::arg("mesh") = oracle::Mesh::mapped);
    orc.def(
        "solve_radial",
        [](const PotentialSpec& spec, int l, const py::object& flux, const PhysicalScale& scale,
           const oracle::OracleConfig& config) {
            const Flux phi = to_flux(flux);
            py::gil_scoped_release release;
            return oracle::solve_radial(spec, l, phi, scale, config);
        },
        py::arg("spec"), py::arg("l"), py::arg("flux"), py::arg("scale"), py::arg("config"));
    orc.def("compare_levels", &oracle::compare_levels, py::arg("closed"), py::arg("numeric"), py::arg("abs_tol") = 1e-4,
            py::arg("rel_tol") = 0.0);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Closed-form bound states under Aharonov-Bohm flux";
    static py::exception<Error> error(m, "NuSpectraError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });
    bind_potentials(m);
    bind_nu(m);
    bind_numerics(m);
}
