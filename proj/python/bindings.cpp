#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mgbccm/baselines.hpp"
#include "mgbccm/cli.hpp"
#include "mgbccm/sato.hpp"
#include "mgbccm/sdpc.hpp"

namespace py = pybind11;
using namespace mgbccm;

PYBIND11_MODULE(_mgbccm, m) {
  m.doc() = "Secrecy rate regions for the two-user multi-antenna Gaussian "
            "broadcast channel with confidential messages";

  py::class_<ChannelPair>(m, "ChannelPair")
      .def(py::init([](const ComplexVector& h, const ComplexVector& g, double power,
                       const std::string& mode) {
             return ChannelPair(h, g, power, mode_from_string(mode));
           }),
           py::arg("h"), py::arg("g"), py::arg("power"), py::arg("mode") = "complex")
      .def_readonly("h", &ChannelPair::h)
      .def_readonly("g", &ChannelPair::g)
      .def_readonly("power", &ChannelPair::power)
      .def_property_readonly("mode", [](const ChannelPair& c) { return to_string(c.mode); })
      .def_property_readonly("rate_scale", &ChannelPair::rate_scale)
      .def("swapped", &ChannelPair::swapped);

  py::class_<ChannelParameters>(m, "ChannelParameters")
      .def_readonly("lambda1", &ChannelParameters::lambda1)
      .def_readonly("e1", &ChannelParameters::e1)
      .def_readonly("lambda2", &ChannelParameters::lambda2)
      .def_readonly("e2", &ChannelParameters::e2)
      .def_readonly("degenerate", &ChannelParameters::degenerate);

  py::class_<RegionPoint>(m, "RegionPoint")
      .def_readonly("alpha", &RegionPoint::alpha)
      .def_readonly("gamma1", &RegionPoint::gamma1)
      .def_readonly("gamma2", &RegionPoint::gamma2)
      .def_readonly("r1", &RegionPoint::r1)
      .def_readonly("r2", &RegionPoint::r2);

  py::class_<RatePoint>(m, "RatePoint")
      .def_readonly("r1", &RatePoint::r1)
      .def_readonly("r2", &RatePoint::r2)
      .def("__iter__", [](const RatePoint& p) {
        return py::iter(py::make_tuple(p.r1, p.r2));
      });

  py::class_<RateRegion>(m, "RateRegion")
      .def_readonly("frontier", &RateRegion::frontier)
      .def_readonly("hull", &RateRegion::hull);

  py::class_<MonotonicityReport>(m, "MonotonicityReport")
      .def_readonly("passed", &MonotonicityReport::pass)
      .def_readonly("worst_step", &MonotonicityReport::worst_step)
      .def_readonly("worst_slope", &MonotonicityReport::worst_slope)
      .def_readonly("failing_alpha", &MonotonicityReport::failing_alpha)
      .def_readonly("detail", &MonotonicityReport::detail);

  m.def("channel_parameters", &channel_parameters);
  m.def("gamma1", &gamma1, py::arg("channel"), py::arg("params"), py::arg("alpha"));
  m.def("gamma2",
        [](const ChannelPair& ch, const ChannelParameters& p, double a) {
          return gamma2(ch, p, a);
        },
        py::arg("channel"), py::arg("params"), py::arg("alpha"));
  m.def("region_sweep", &region_sweep, py::arg("channel"), py::arg("n_alpha") = 201);
  m.def("region_sweep_beta", &region_sweep_beta, py::arg("channel"), py::arg("n_beta") = 201);
  m.def("corner_points",
        [](const ChannelParameters& p, const std::string& mode) {
          return corner_points(p, mode_from_string(mode));
        },
        py::arg("params"), py::arg("mode"));
  m.def("monotonicity_check", &monotonicity_check, py::arg("channel"), py::arg("params"),
        py::arg("n_alpha") = 201);
  m.def("hull_r2_at", &hull_r2_at);

  py::class_<CovariancePair>(m, "CovariancePair")
      .def_readonly("k_u1", &CovariancePair::k_u1)
      .def_readonly("k_u2", &CovariancePair::k_u2)
      .def_readonly("k_x", &CovariancePair::k_x);

  py::class_<SdpcRates>(m, "SdpcRates")
      .def_readonly("r1", &SdpcRates::r1)
      .def_readonly("r2", &SdpcRates::r2)
      .def_readonly("r1_raw", &SdpcRates::r1_raw)
      .def_readonly("r2_raw", &SdpcRates::r2_raw);

  py::class_<MutualInfoTerms>(m, "MutualInfoTerms")
      .def_readonly("user1_dpc_gain", &MutualInfoTerms::user1_dpc_gain)
      .def_readonly("user1_leakage", &MutualInfoTerms::user1_leakage)
      .def_readonly("user2_rate", &MutualInfoTerms::user2_rate)
      .def_readonly("user2_leakage", &MutualInfoTerms::user2_leakage);

  py::class_<SdpcIdentityReport>(m, "SdpcIdentityReport")
      .def_readonly("passed", &SdpcIdentityReport::pass)
      .def_readonly("alpha", &SdpcIdentityReport::alpha)
      .def_readonly("quotient1", &SdpcIdentityReport::quotient1)
      .def_readonly("gamma1", &SdpcIdentityReport::gamma1)
      .def_readonly("quotient2", &SdpcIdentityReport::quotient2)
      .def_readonly("gamma2", &SdpcIdentityReport::gamma2)
      .def_readonly("rel1", &SdpcIdentityReport::rel1)
      .def_readonly("rel2", &SdpcIdentityReport::rel2);

  m.def("build_covariances", &build_covariances, py::arg("channel"), py::arg("params"),
        py::arg("alpha"));
  m.def("sdpc_rate_bounds", &sdpc_rate_bounds);
  m.def("dpc_coefficient",
        [](const ChannelPair& ch, const CovariancePair& cov) {
          return dpc_coefficient(ch, cov).b;
        });
  m.def("gaussian_mutual_info_terms", &gaussian_mutual_info_terms);
  m.def("verify_sdpc_identities", &verify_sdpc_identities, py::arg("channel"),
        py::arg("params"), py::arg("alpha"));

  py::class_<AlphaAssignment>(m, "AlphaAssignment")
      .def_readonly("k_x", &AlphaAssignment::k_x)
      .def_readonly("alpha", &AlphaAssignment::alpha)
      .def_readonly("residual", &AlphaAssignment::residual);

  py::class_<ConverseReport::Item>(m, "ConverseItem")
      .def_readonly("name", &ConverseReport::Item::name)
      .def_readonly("passed", &ConverseReport::Item::pass)
      .def_readonly("residual", &ConverseReport::Item::residual);

  py::class_<ConverseReport>(m, "ConverseReport")
      .def_readonly("passed", &ConverseReport::pass)
      .def_readonly("alpha", &ConverseReport::alpha)
      .def_readonly("items", &ConverseReport::items);

  py::class_<CoincidenceReport>(m, "CoincidenceReport")
      .def_readonly("passed", &CoincidenceReport::pass)
      .def_readonly("degenerate", &CoincidenceReport::degenerate)
      .def_readonly("n_alpha", &CoincidenceReport::n_alpha)
      .def_readonly("max_f1_gap", &CoincidenceReport::max_f1_gap)
      .def_readonly("max_f2_gap", &CoincidenceReport::max_f2_gap);

  py::class_<OuterBoundPoint>(m, "OuterBoundPoint")
      .def_readonly("rho", &OuterBoundPoint::rho)
      .def_readonly("k_x", &OuterBoundPoint::k_x)
      .def_readonly("f1", &OuterBoundPoint::f1)
      .def_readonly("f2", &OuterBoundPoint::f2)
      .def_readonly("nu_star", &OuterBoundPoint::nu_star)
      .def_readonly("mu_star", &OuterBoundPoint::mu_star);

  m.def("rho_canonical",
        [](const ChannelPair& ch, const ChannelParameters& p) {
          return rho_canonical(ch, p).rho;
        });
  m.def("f1",
        [](const ChannelPair& ch, Complex rho, const ComplexMatrix& k) {
          const MinimizedBound b = f1(ch, NoiseCorrelation(rho), k);
          return std::make_pair(b.value, b.minimizer);
        },
        py::arg("channel"), py::arg("rho"), py::arg("k_x"));
  m.def("f2",
        [](const ChannelPair& ch, Complex rho, const ComplexMatrix& k) {
          const MinimizedBound b = f2(ch, NoiseCorrelation(rho), k);
          return std::make_pair(b.value, b.minimizer);
        },
        py::arg("channel"), py::arg("rho"), py::arg("k_x"));
  m.def("f1_objective",
        [](const ChannelPair& ch, Complex rho, const ComplexMatrix& k, Complex nu) {
          return f1_objective(ch, NoiseCorrelation(rho), k, nu);
        });
  m.def("f2_objective",
        [](const ChannelPair& ch, Complex rho, const ComplexMatrix& k, Complex mu) {
          return f2_objective(ch, NoiseCorrelation(rho), k, mu);
        });
  m.def("outer_region",
        [](const ChannelPair& ch, Complex rho, double budget,
           const std::vector<ComplexMatrix>& family) {
          return outer_region(ch, NoiseCorrelation(rho), budget, family);
        },
        py::arg("channel"), py::arg("rho"), py::arg("trace_budget"), py::arg("family"));
  m.def("alpha_slice_residual", &alpha_slice_residual);
  m.def("alpha_for_covariance", &alpha_for_covariance);
  m.def("verify_converse_identities", &verify_converse_identities);
  m.def("coincidence_check", &coincidence_check, py::arg("channel"), py::arg("n_alpha") = 101);
  m.def("random_covariance_family", &random_covariance_family, py::arg("t"), py::arg("trace"),
        py::arg("count"), py::arg("seed"));

  py::class_<TimeSharePoint>(m, "TimeSharePoint")
      .def_readonly("tau1", &TimeSharePoint::tau1)
      .def_readonly("p1", &TimeSharePoint::p1)
      .def_readonly("p2", &TimeSharePoint::p2)
      .def_readonly("r1", &TimeSharePoint::r1)
      .def_readonly("r2", &TimeSharePoint::r2);

  m.def("miso_wiretap_capacity", &miso_wiretap_capacity);
  m.def("wiretap_eigenvalue", &wiretap_eigenvalue);
  m.def("time_share_frontier", &time_share_frontier, py::arg("channel"),
        py::arg("n_tau") = 101, py::arg("n_power") = 101);
  m.def("single_antenna_sanity",
        [](Complex h, Complex g, double power, const std::string& mode) {
          return single_antenna_sanity(h, g, power, mode_from_string(mode));
        },
        py::arg("h"), py::arg("g"), py::arg("power"), py::arg("mode") = "complex");

  m.def("verification_report_json",
        [](const ChannelPair& ch, int n_alpha) {
          return cli::report_to_json(ch, cli::build_verification_report(ch, n_alpha));
        },
        py::arg("channel"), py::arg("n_alpha") = 101);

  m.attr("__version__") = "1.0.0";
}
