#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpnano/analysis.hpp"
#include "cpnano/figures.hpp"
#include "cpnano/oracle.hpp"
#include "cpnano/pair.hpp"
#include "cpnano/plate.hpp"
#include "cpnano/types.hpp"

namespace py = pybind11;
using namespace cpnano;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Casimir-Polder free energies and entropies of anisotropic "
        "nanoparticles: particle-plate and particle-particle systems, "
        "negative-entropy classification and Matsubara-sum verification";

    py::class_<Polarizability>(m, "Polarizability")
        .def(py::init<>())
        .def(py::init([](double ap, double az, double bp, double bz) {
                 return Polarizability{ap, az, bp, bz};
             }),
             py::arg("alpha_perp"), py::arg("alpha_z"),
             py::arg("beta_perp") = 0.0, py::arg("beta_z") = 0.0)
        .def_readwrite("alpha_perp", &Polarizability::alpha_perp)
        .def_readwrite("alpha_z", &Polarizability::alpha_z)
        .def_readwrite("beta_perp", &Polarizability::beta_perp)
        .def_readwrite("beta_z", &Polarizability::beta_z)
        .def_static("electric",
                    py::overload_cast<double>(&Polarizability::electric),
                    py::arg("alpha"))
        .def_static("electric",
                    py::overload_cast<double, double>(&Polarizability::electric),
                    py::arg("perp"), py::arg("z"))
        .def_static("conducting_sphere", &Polarizability::conducting_sphere,
                    py::arg("a"))
        .def("dual", &Polarizability::dual)
        .def("scaled", &Polarizability::scaled)
        .def_property_readonly("gamma_alpha", [](const Polarizability& p) {
            return p.has_gamma_alpha() ? py::cast(p.gamma_alpha())
                                       : py::none().cast<py::object>();
        })
        .def_property_readonly("gamma_beta", [](const Polarizability& p) {
            return p.has_gamma_beta() ? py::cast(p.gamma_beta())
                                      : py::none().cast<py::object>();
        })
        .def("__repr__", [](const Polarizability& p) {
            return "Polarizability(alpha_perp=" + std::to_string(p.alpha_perp) +
                   ", alpha_z=" + std::to_string(p.alpha_z) +
                   ", beta_perp=" + std::to_string(p.beta_perp) +
                   ", beta_z=" + std::to_string(p.beta_z) + ")";
        });

    py::class_<ThermalGeometry>(m, "ThermalGeometry")
        .def(py::init<double, double, double>(), py::arg("Z"), py::arg("T"),
             py::arg("particle_scale") = 0.0)
        .def_static("from_y", &ThermalGeometry::from_y, py::arg("Z"),
                    py::arg("y"), py::arg("particle_scale") = 0.0)
        .def_readonly("Z", &ThermalGeometry::Z)
        .def_readonly("T", &ThermalGeometry::T)
        .def_property_readonly("y", &ThermalGeometry::y)
        .def("dipole_regime_ok", &ThermalGeometry::dipole_regime_ok);

    py::class_<ParticlePair>(m, "ParticlePair")
        .def(py::init<Polarizability, Polarizability, ThermalGeometry>(),
             py::arg("p1"), py::arg("p2"), py::arg("geom"))
        .def_readwrite("p1", &ParticlePair::p1)
        .def_readwrite("p2", &ParticlePair::p2)
        .def_readwrite("geom", &ParticlePair::geom);

    // scaled plate and pair functions (vectorized over gamma and y)
    m.def("f_plate", py::vectorize(&f_plate), py::arg("gamma"), py::arg("y"));
    m.def("s_plate", py::vectorize(&s_plate), py::arg("gamma"), py::arg("y"));
    m.def("s_tilde", py::vectorize(&s_tilde), py::arg("gamma"), py::arg("y"));
    m.def("s_plate_te", py::vectorize(&s_plate_te), py::arg("gamma"),
          py::arg("y"));
    m.def("s_plate_tm", py::vectorize(&s_plate_tm), py::arg("gamma"),
          py::arg("y"));
    m.def("f_pair_ee", py::vectorize(&f_pair_ee), py::arg("gamma"),
          py::arg("y"));
    m.def("s_pair_ee", py::vectorize(&s_pair_ee), py::arg("gamma"),
          py::arg("y"));
    m.def("g_pair_em", py::vectorize(&g_pair_em), py::arg("y"));
    m.def("s_pair_em", py::vectorize(&s_pair_em), py::arg("y"));

    m.def("plate_free_energy", &plate_free_energy, py::arg("p"),
          py::arg("geom"));
    m.def("plate_entropy", &plate_entropy, py::arg("p"), py::arg("geom"));
    m.def("pair_free_energy", &pair_free_energy, py::arg("pair"));
    m.def("pair_entropy", &pair_entropy, py::arg("pair"));
    m.def("pair_entropy_small_y", &pair_entropy_small_y, py::arg("pair"));
    m.def(
        "pair_scaled_entropy",
        [](const Polarizability& p1, const Polarizability& p2, double y) {
            return pair_scaled_entropy(p1, p2, y);
        },
        py::arg("p1"), py::arg("p2"), py::arg("y"),
        "Z^6 * S as a function of the reduced temperature y");

    // oracle
    m.def("plate_free_energy_oracle", &oracle::plate_free_energy_oracle,
          py::arg("p"), py::arg("geom"), py::arg("tol") = 1e-12);
    m.def("pair_free_energy_oracle", &oracle::pair_free_energy_oracle,
          py::arg("pair"), py::arg("tol") = 1e-12);
    m.def("te_mode_zero_check", &oracle::te_mode_zero_check, py::arg("geom"));

    // analysis
    using analysis::CriticalResult;
    using analysis::SystemConfig;

    py::class_<CriticalResult> cr(m, "CriticalResult");
    py::enum_<CriticalResult::Kind>(cr, "Kind")
        .value("zero_crossing_y", CriticalResult::Kind::zero_crossing_y)
        .value("critical_gamma", CriticalResult::Kind::critical_gamma);
    cr.def_readonly("kind", &CriticalResult::kind)
        .def_readonly("value", &CriticalResult::value)
        .def_readonly("bracket_lo", &CriticalResult::bracket_lo)
        .def_readonly("bracket_hi", &CriticalResult::bracket_hi)
        .def_readonly("objective_at_value", &CriticalResult::objective_at_value)
        .def_readonly("iterations", &CriticalResult::iterations)
        .def("__repr__", [](const CriticalResult& r) {
            return "CriticalResult(value=" + std::to_string(r.value) + ")";
        });

    py::class_<SystemConfig> sc(m, "SystemConfig");
    py::enum_<SystemConfig::Kind>(sc, "Kind")
        .value("plate", SystemConfig::Kind::plate)
        .value("pair", SystemConfig::Kind::pair);
    py::enum_<SystemConfig::PlateSector>(sc, "PlateSector")
        .value("total", SystemConfig::PlateSector::total)
        .value("te", SystemConfig::PlateSector::te)
        .value("tm", SystemConfig::PlateSector::tm);
    py::enum_<SystemConfig::Sweep>(sc, "Sweep")
        .value("plate_gamma", SystemConfig::Sweep::plate_gamma)
        .value("alpha_both", SystemConfig::Sweep::alpha_both)
        .value("beta_both", SystemConfig::Sweep::beta_both)
        .value("alpha_1", SystemConfig::Sweep::alpha_1)
        .value("alpha_2", SystemConfig::Sweep::alpha_2)
        .value("beta_1", SystemConfig::Sweep::beta_1)
        .value("beta_2", SystemConfig::Sweep::beta_2);
    sc.def(py::init<>())
        .def_readwrite("kind", &SystemConfig::kind)
        .def_readwrite("sector", &SystemConfig::sector)
        .def_readwrite("sweep", &SystemConfig::sweep)
        .def_readwrite("p1", &SystemConfig::p1)
        .def_readwrite("p2", &SystemConfig::p2)
        .def_readwrite("label", &SystemConfig::label);

    m.def("zero_crossings", &analysis::zero_crossings, py::arg("curve"),
          py::arg("y_lo"), py::arg("y_hi"), py::arg("tol") = 1e-6,
          py::arg("grid_points") = analysis::kDefaultGrid);
    m.def(
        "min_entropy",
        [](const std::function<double(double)>& curve, double lo, double hi,
           int grid) {
            const auto r = analysis::min_entropy(curve, lo, hi, grid);
            return py::make_tuple(r.y_min, r.value);
        },
        py::arg("curve"), py::arg("y_lo") = analysis::kDefaultYLo,
        py::arg("y_hi") = analysis::kDefaultYHi,
        py::arg("grid_points") = analysis::kDefaultGrid);
    m.def("critical_anisotropy", &analysis::critical_anisotropy,
          py::arg("config"), py::arg("gamma_lo"), py::arg("gamma_hi"),
          py::arg("tol") = 1e-5, py::arg("y_lo") = analysis::kDefaultYLo,
          py::arg("y_hi") = analysis::kDefaultYHi,
          py::arg("grid_points") = analysis::kDefaultGrid);
    m.def("scaled_entropy_curve", &analysis::scaled_entropy_curve,
          py::arg("config"), py::arg("gamma"));
    m.def("classify_table", [] {
        py::list rows;
        for (const auto& r : analysis::classify_table()) {
            py::dict d;
            d["label"] = r.label;
            d["published"] = r.published;
            d["match"] = r.match;
            if (r.thresholds.empty()) {
                d["always"] = r.always;
            } else {
                py::list th;
                for (const auto& t : r.thresholds) {
                    py::dict e;
                    e["parameter"] = t.parameter;
                    e["computed"] = t.computed;
                    e["published"] = t.published;
                    e["tolerance"] = t.tolerance;
                    th.append(e);
                }
                d["thresholds"] = th;
            }
            rows.append(d);
        }
        return rows;
    });

    // figures
    m.def("figure_ids", &figures::figure_ids);
    m.def(
        "figure_data",
        [](const std::string& id) {
            const auto data = figures::generate_figure(id);
            const std::size_t nrow = data.rows.size();
            const std::size_t ncol = data.columns.size();
            py::array_t<double> arr({nrow, ncol});
            auto view = arr.mutable_unchecked<2>();
            for (std::size_t r = 0; r < nrow; ++r) {
                for (std::size_t c = 0; c < ncol; ++c) {
                    view(static_cast<py::ssize_t>(r),
                         static_cast<py::ssize_t>(c)) = data.rows[r][c];
                }
            }
            return py::make_tuple(data.columns, arr);
        },
        py::arg("id"), "column labels and sampled rows of one figure preset");
    m.def(
        "figure_csv",
        [](const std::string& id) {
            return figures::to_csv(figures::generate_figure(id));
        },
        py::arg("id"));
}
