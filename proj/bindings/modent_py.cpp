// Python bindings for the main operations: the entropy pipeline, the symbol
// calculus, the quantisation entropies and the verification batteries.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modent/fock.hpp"
#include "modent/gh_symbols.hpp"
#include "modent/hankel.hpp"
#include "modent/mobius.hpp"
#include "modent/modular.hpp"
#include "modent/pipeline.hpp"
#include "modent/sigma_entropy.hpp"
#include "modent/spectral.hpp"
#include "modent/verify.hpp"
#include "modent/version.hpp"

namespace py = pybind11;

namespace {

using modent::fourier::Complex;
using modent::fourier::Symbol;
using modent::subspace::Convention;
using modent::subspace::RunOptions;
using modent::subspace::SpectralSummary;

Convention convention_from(const std::string& name) {
  if (name == "real") return Convention::Real;
  if (name == "complex") return Convention::Complex;
  throw modent::input_error("convention must be 'real' or 'complex'");
}

RunOptions make_options(int modes, int fft_samples, const std::string& convention,
                        const std::vector<double>& q_values) {
  RunOptions opt;
  opt.cutoff = modes;
  opt.fft_samples = fft_samples;
  opt.convention = convention_from(convention);
  opt.q_values = q_values;
  return opt;
}

py::dict summary_to_dict(const SpectralSummary& s) {
  py::dict d;
  d["phi"] = s.phi;
  if (s.interval) d["interval"] = *s.interval;
  d["cutoff"] = s.cutoff;
  d["dim"] = s.dim;
  d["mu"] = s.mu;
  d["lambda"] = s.lambda;
  d["mu_dropped"] = s.mu_dropped;
  d["bose_excluded"] = s.bose_excluded;
  d["S_complex"] = s.s_complex;
  d["S_real"] = s.s_real;
  d["S_fermi"] = s.s_fermi;
  d["S_bose"] = s.s_bose;
  d["trace_bose"] = s.trace_bose;
  d["trace_fermi"] = s.trace_fermi;
  d["defect_idem"] = s.defect_idempotent;
  d["defect_herm"] = s.defect_hermitian;
  d["lower_bound"] = s.lower_bound;
  d["mu_power_sums"] = s.mu_power_sums;
  d["S"] = s.headline_entropy();
  return d;
}

py::dict symbol_to_dict(const Symbol& s) {
  py::dict d;
  for (const auto& [n, c] : s.coefficients()) d[py::int_(n)] = c;
  return d;
}

Symbol symbol_from_dict(const py::dict& d, const std::string& label) {
  Symbol s(label);
  for (const auto& item : d)
    s.set(item.first.cast<int>(), item.second.cast<Complex>());
  // The dict is the complete coefficient list; beyond it the symbol is zero.
  s.set_support_bound(s.band());
  return s;
}

}  // namespace

PYBIND11_MODULE(_modent, m) {
  m.doc() = "angle-operator spectra and entanglement entropies for interval "
            "inclusions on the circle";
  m.attr("__version__") = modent::kVersion;

  py::register_exception<modent::input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<modent::diagnostic_error>(m, "DiagnosticError", PyExc_RuntimeError);

  m.def(
      "run_pipeline",
      [](double phi, int modes, int fft_samples, const std::string& convention,
         const std::vector<double>& q_values) {
        return summary_to_dict(modent::subspace::run_pipeline(
            phi, make_options(modes, fft_samples, convention, q_values)));
      },
      py::arg("phi"), py::arg("modes") = 256, py::arg("fft_samples") = 1 << 16,
      py::arg("convention") = "real", py::arg("q_values") = std::vector<double>{0.8},
      "Full chain: symbols -> projection -> angle operator -> spectrum -> entropies.");

  m.def(
      "run_pipeline_interval",
      [](double i_start, double i_end, double outer_start, double outer_end, int modes,
         int fft_samples, const std::string& convention, const std::vector<double>& q_values) {
        return summary_to_dict(modent::subspace::run_pipeline_interval(
            i_start, i_end, outer_start, outer_end,
            make_options(modes, fft_samples, convention, q_values)));
      },
      py::arg("i_start"), py::arg("i_end"), py::arg("outer_start"), py::arg("outer_end"),
      py::arg("modes") = 256, py::arg("fft_samples") = 1 << 16, py::arg("convention") = "real",
      py::arg("q_values") = std::vector<double>{0.8});

  m.def("cross_ratio_to_phi", &modent::mobius::cross_ratio_to_phi, py::arg("i_start"),
        py::arg("i_end"), py::arg("outer_start"), py::arg("outer_end"));
  m.def("entropy_lower_bound", &modent::subspace::entropy_lower_bound, py::arg("phi"));
  m.def("modular_from_angle", &modent::subspace::modular_from_angle, py::arg("mu"));
  m.def("angle_from_modular", &modent::modular::angle_from_modular, py::arg("lambda_"));

  m.def(
      "subspace_entropy",
      [](const std::vector<double>& mu, const std::string& convention) {
        return modent::subspace::subspace_entropy(mu, convention_from(convention));
      },
      py::arg("mu"), py::arg("convention") = "real");
  m.def("fermi_entropy_normalized", &modent::subspace::fermi_entropy_normalized,
        py::arg("lambdas"));
  m.def(
      "bose_entropy_normalized",
      [](const std::vector<double>& lambdas) {
        const auto r = modent::subspace::bose_entropy_normalized(lambdas);
        return py::make_tuple(r.value, r.excluded);
      },
      py::arg("lambdas"), "Returns (entropy, excluded_mode_count).");
  m.def("trace_identities", &modent::subspace::trace_identities, py::arg("lambdas"),
        "Returns (bose_trace, fermi_trace).");

  m.def(
      "closed_form_g_coeffs",
      [](int nmax) { return symbol_to_dict(modent::mobius::closed_form_g_coeffs(nmax)); },
      py::arg("nmax"));
  m.def(
      "closed_form_h_coeffs",
      [](int nmax) { return symbol_to_dict(modent::mobius::closed_form_h_coeffs(nmax)); },
      py::arg("nmax"));
  m.def(
      "arc_indicator_coefficients",
      [](double arc_start, double arc_end, int nmax) {
        return symbol_to_dict(
            modent::fourier::arc_indicator_coefficients(arc_start, arc_end, nmax));
      },
      py::arg("arc_start"), py::arg("arc_end"), py::arg("nmax"));
  m.def(
      "symbol_g",
      [](Complex z, double phi) { return modent::mobius::symbol_g_pointwise(z, phi); },
      py::arg("z"), py::arg("phi"));
  m.def(
      "symbol_h",
      [](Complex z, double phi) { return modent::mobius::symbol_h_pointwise(z, phi); },
      py::arg("z"), py::arg("phi"));

  m.def("schatten_qnorm", &modent::fourier::schatten_qnorm, py::arg("singular_values"),
        py::arg("q"));

  m.def(
      "hankel_singular_values",
      [](const py::dict& coeffs, int size) {
        const Symbol f = symbol_from_dict(coeffs, "py");
        const auto h = modent::hankel::build_hankel(f, size);
        const auto& s = h.singular_values();
        return std::vector<double>(s.data(), s.data() + s.size());
      },
      py::arg("coefficients"), py::arg("size"),
      "Descending singular values of the Hankel section of the symbol.");

  m.def("gamma_trace",
        [](const std::vector<double>& eigs, int n_max) {
          const auto t = modent::fock::gamma_trace(eigs, n_max);
          return py::make_tuple(t.value, t.tail_bound);
        },
        py::arg("eigenvalues"), py::arg("n_max") = 64,
        "Returns (truncated_trace, tail_bound).");
  m.def("lambda_trace", &modent::fock::lambda_trace, py::arg("eigenvalues"));
  m.def("gamma_entropy", &modent::fock::gamma_entropy, py::arg("eigenvalues"));
  m.def("lambda_entropy", &modent::fock::lambda_entropy, py::arg("eigenvalues"));
  m.def(
      "two_dim_check",
      [](double lambda) {
        const auto r = modent::fock::two_dim_fock_check(lambda);
        py::dict d;
        d["lambda"] = r.lambda;
        d["bose_trace"] = r.bose_trace;
        d["fermi_trace"] = r.fermi_trace;
        d["bose_spectrum_prefix"] = r.bose_spectrum_prefix;
        d["fermi_spectrum"] = r.fermi_spectrum;
        d["bose_entropy_normalized"] = r.bose_entropy_normalized;
        d["fermi_entropy_normalized"] = r.fermi_entropy_normalized;
        d["modular_identification_dev"] = r.modular_identification_dev;
        return d;
      },
      py::arg("lambda_"));

  m.def(
      "verify_suite",
      [](const std::string& suite, std::uint64_t seed) {
        const auto rep = modent::verify::run_suite(suite, seed);
        py::dict d;
        d["suite"] = rep.suite;
        d["seed"] = rep.seed;
        d["pass"] = rep.pass();
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict cd;
          cd["name"] = c.name;
          cd["pass"] = c.pass;
          cd["value"] = c.value;
          cd["threshold"] = c.threshold;
          checks.append(cd);
        }
        d["checks"] = checks;
        return d;
      },
      py::arg("suite"), py::arg("seed") = 0,
      "Run one invariant battery: modular | fock | hankel | geometry.");
}
