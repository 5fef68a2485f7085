#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leoprop/astro.hpp"
#include "leoprop/bench.hpp"
#include "leoprop/comparison.hpp"
#include "leoprop/cowell.hpp"
#include "leoprop/intermediary.hpp"
#include "leoprop/parallax.hpp"
#include "leoprop/perigee.hpp"
#include "leoprop/scenario.hpp"
#include "leoprop/torsion.hpp"

namespace py = pybind11;
using namespace leoprop;

PYBIND11_MODULE(_leoprop, m) {
    m.doc() = "Analytical LEO intermediary propagators with J2-J4 zonal gravity, "
              "Cowell baselines and a comparison harness.";

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<>())
        .def(py::init([](double x, double y, double z) { return Vec3{x, y, z}; }))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });

    py::class_<GeoModel>(m, "GeoModel")
        .def(py::init<>())
        .def_readwrite("mu", &GeoModel::mu)
        .def_readwrite("re", &GeoModel::re)
        .def_readwrite("j2", &GeoModel::j2)
        .def_readwrite("j3", &GeoModel::j3)
        .def_readwrite("j4", &GeoModel::j4);

    py::class_<Keplerian>(m, "Keplerian")
        .def(py::init<>())
        .def(py::init([](double a, double e, double inc, double raan, double argp, double M) {
                 return Keplerian{a, e, inc, raan, argp, M};
             }),
             py::arg("a"), py::arg("e"), py::arg("inc"), py::arg("raan"), py::arg("argp"),
             py::arg("M"))
        .def_readwrite("a", &Keplerian::a)
        .def_readwrite("e", &Keplerian::e)
        .def_readwrite("inc", &Keplerian::inc)
        .def_readwrite("raan", &Keplerian::raan)
        .def_readwrite("argp", &Keplerian::argp)
        .def_readwrite("M", &Keplerian::M);

    py::class_<PolarNodal>(m, "PolarNodal")
        .def(py::init<>())
        .def_readwrite("r", &PolarNodal::r)
        .def_readwrite("theta", &PolarNodal::theta)
        .def_readwrite("nu", &PolarNodal::nu)
        .def_readwrite("R", &PolarNodal::R)
        .def_readwrite("Theta", &PolarNodal::Theta)
        .def_readwrite("N", &PolarNodal::N);

    py::class_<CartesianState>(m, "CartesianState")
        .def(py::init<>())
        .def_readwrite("position", &CartesianState::position)
        .def_readwrite("velocity", &CartesianState::velocity);

    py::class_<Equinoctial>(m, "Equinoctial")
        .def_readonly("F", &Equinoctial::F)
        .def_readonly("C", &Equinoctial::C)
        .def_readonly("S", &Equinoctial::S);

    m.def("wrap_pi", &wrap_pi);
    m.def("solve_kepler", &solve_kepler, py::arg("mean_anom"), py::arg("ecc"));
    m.def("keplerian_to_polar_nodal", &keplerian_to_polar_nodal);
    m.def("polar_nodal_to_keplerian", &polar_nodal_to_keplerian);
    m.def("polar_nodal_to_cartesian", &polar_nodal_to_cartesian);
    m.def("cartesian_to_polar_nodal", &cartesian_to_polar_nodal);
    m.def("equinoctial_of", &equinoctial_of);

    py::enum_<ZonalModel>(m, "ZonalModel")
        .value("KeplerOnly", ZonalModel::KeplerOnly)
        .value("J2Only", ZonalModel::J2Only)
        .value("FullZonal", ZonalModel::FullZonal);

    m.def("zonal_acceleration", &zonal_acceleration);
    m.def("total_potential", &total_potential);

    py::class_<IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("step", &IntegratorConfig::step)
        .def_readwrite("tolerance", &IntegratorConfig::tolerance)
        .def_readwrite("output_interval", &IntegratorConfig::output_interval);

    py::class_<Ephemeris>(m, "Ephemeris")
        .def_readonly("epochs", &Ephemeris::epochs)
        .def_readonly("states", &Ephemeris::states);

    m.def("propagate_cowell", &propagate_cowell, py::arg("state0"), py::arg("t0"), py::arg("tf"),
          py::arg("cfg"), py::arg("geo"), py::arg("kind"));
    m.def("reference_propagate", &reference_propagate, py::arg("state0"), py::arg("t0"),
          py::arg("tf"), py::arg("cfg"), py::arg("geo"), py::arg("kind"));

    py::enum_<IntermediaryKind>(m, "IntermediaryKind")
        .value("First", IntermediaryKind::First)
        .value("Second", IntermediaryKind::Second);

    py::class_<PolarNodalEphemeris>(m, "PolarNodalEphemeris")
        .def_readonly("epochs", &PolarNodalEphemeris::epochs)
        .def_readonly("states", &PolarNodalEphemeris::states)
        .def("to_cartesian", &PolarNodalEphemeris::to_cartesian);

    py::class_<KeplerianConstants>(m, "KeplerianConstants")
        .def_readonly("a", &KeplerianConstants::a)
        .def_readonly("e", &KeplerianConstants::e)
        .def_readonly("inc", &KeplerianConstants::inc)
        .def_readonly("raan", &KeplerianConstants::raan)
        .def_readonly("argp", &KeplerianConstants::argp)
        .def_readonly("M0", &KeplerianConstants::M0)
        .def_readonly("n", &KeplerianConstants::n);

    py::class_<IntermediaryPropagator>(m, "IntermediaryPropagator")
        .def(py::init<const PolarNodal&, double, const GeoModel&, IntermediaryKind>(),
             py::arg("pn0"), py::arg("t0"), py::arg("geo"), py::arg("kind"))
        .def("evaluate_at", &IntermediaryPropagator::evaluate_at)
        .def("propagate", &IntermediaryPropagator::propagate, py::arg("tf"), py::arg("dt"))
        .def("propagate_steps", &IntermediaryPropagator::propagate_steps, py::arg("tf"),
             py::arg("n_steps"))
        .def_property_readonly("constants", &IntermediaryPropagator::constants)
        .def_property_readonly("N", &IntermediaryPropagator::polar_angular_momentum);

    py::class_<ElementsDeg>(m, "ElementsDeg")
        .def_readonly("a_km", &ElementsDeg::a_km)
        .def_readonly("e", &ElementsDeg::e)
        .def_readonly("inc_deg", &ElementsDeg::inc_deg)
        .def_readonly("raan_deg", &ElementsDeg::raan_deg)
        .def_readonly("argp_deg", &ElementsDeg::argp_deg)
        .def_readonly("mean_anomaly_deg", &ElementsDeg::mean_anomaly_deg);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_readonly("elements", &Scenario::elements)
        .def_readwrite("duration_s", &Scenario::duration_s)
        .def_readwrite("output_interval_s", &Scenario::output_interval_s)
        .def_readwrite("geo", &Scenario::geo)
        .def("initial_elements", &Scenario::initial_elements);

    m.def("builtin_scenario", &builtin_scenario);
    m.def("builtin_scenario_names", [] { return builtin_scenario_names(); });
    m.def("load_scenario", &load_scenario);
}
