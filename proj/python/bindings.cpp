// Copyright 2026 The gwpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "gwpriv/codec_sim.hpp"
#include "gwpriv/common_information.hpp"
#include "gwpriv/distributions.hpp"
#include "gwpriv/error.hpp"
#include "gwpriv/infotheory.hpp"
#include "gwpriv/io.hpp"
#include "gwpriv/region.hpp"

namespace py = pybind11;

namespace gwpriv {
namespace {

py::dict ResultDict(const CommonInfoResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["method"] = std::string(MethodName(r.method));
  d["witness"] = r.witness;
  d["converged"] = r.diagnostics.converged;
  d["residual"] = r.diagnostics.residual;
  d["iterations"] = r.diagnostics.iterations;
  return d;
}

py::dict TupleDict(const RateEquivocationTuple& t) {
  py::dict d;
  d["r0"] = t.r0;
  d["rk"] = t.rk;
  d["delta"] = t.delta;
  return d;
}

RateEquivocationTuple MakeTuple(double r0, std::vector<double> rk, double delta) {
  return {r0, std::move(rk), delta};
}

WynerParams Wyner(std::uint64_t seed, std::size_t restarts, std::size_t w_card,
                  std::size_t threads) {
  WynerParams p;
  p.seed = seed;
  p.restarts = restarts;
  p.w_cardinality = w_card;
  p.threads = threads;
  return p;
}

SearchParams Search(std::uint64_t seed, std::size_t restarts, std::size_t iterations,
                    std::size_t w_card, std::size_t threads) {
  SearchParams p;
  p.seed = seed;
  p.restarts = restarts;
  p.iterations = iterations;
  p.w_cardinality = w_card;
  p.threads = threads;
  return p;
}

}  // namespace
}  // namespace gwpriv

PYBIND11_MODULE(_core, m) {
  using namespace gwpriv;
  m.doc() = "Common information and Gray-Wyner privacy tools";

  // Leaked on purpose: the type lives as long as the interpreter.
  static py::handle error_type =
      py::exception<Error>(m, "GwprivError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<JointPmf>(m, "JointPmf")
      .def(py::init<std::vector<std::string>, std::vector<std::size_t>,
                    std::vector<double>>(),
           py::arg("names"), py::arg("cardinalities"), py::arg("probabilities"))
      .def_property_readonly("names", &JointPmf::names)
      .def_property_readonly("cardinalities", &JointPmf::cardinalities)
      .def_property_readonly("probabilities",
                             [](const JointPmf& p) {
                               auto s = p.probabilities();
                               return std::vector<double>(s.begin(), s.end());
                             })
      .def_property_readonly("num_vars", &JointPmf::num_vars)
      .def_property_readonly("support_size", &JointPmf::support_size)
      .def("__len__", &JointPmf::size)
      .def("__eq__", [](const JointPmf& a, const JointPmf& b) { return a == b; });

  py::class_<AuxChannel>(m, "AuxChannel")
      .def(py::init<std::size_t, std::vector<std::vector<double>>>(),
           py::arg("w_cardinality"), py::arg("rows"))
      .def_static("constant", &AuxChannel::Constant, py::arg("num_rows"))
      .def_static("identity", &AuxChannel::Identity, py::arg("num_rows"))
      .def_static(
          "deterministic",
          [](const std::vector<std::size_t>& labels, std::size_t w_card) {
            return AuxChannel::Deterministic(labels, w_card);
          },
          py::arg("labels"), py::arg("w_cardinality"))
      .def_property_readonly("w_cardinality", &AuxChannel::w_cardinality)
      .def_property_readonly("rows", &AuxChannel::rows)
      .def("__eq__", [](const AuxChannel& a, const AuxChannel& b) { return a == b; });

  m.def("load_pmf", &load_pmf, py::arg("path"));
  m.def("load_aux", &load_aux, py::arg("path"));
  m.def("save_pmf", &save_pmf, py::arg("pmf"), py::arg("path"));
  m.def("save_aux", &save_aux, py::arg("aux"), py::arg("path"));
  m.def("parse_pmf", &parse_pmf, py::arg("text"));
  m.def("format_pmf", &format_pmf, py::arg("pmf"));

  m.def("entropy", &entropy, py::arg("pmf"), py::arg("vars"));
  m.def("conditional_entropy", &conditional_entropy, py::arg("pmf"), py::arg("of"),
        py::arg("given"));
  m.def("mutual_information", &mutual_information, py::arg("pmf"), py::arg("a"),
        py::arg("b"));
  m.def("conditional_mutual_information", &conditional_mutual_information,
        py::arg("pmf"), py::arg("a"), py::arg("b"), py::arg("given"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def("join_with_aux", [](const JointPmf& p, const AuxChannel& w) {
    return join_with_aux(p, w);
  });
  m.def("markov_slack",
        py::overload_cast<const JointPmf&, const AuxChannel&, std::size_t>(&markov_slack),
        py::arg("pmf"), py::arg("aux"), py::arg("k"));

  m.def("gk_common_information",
        [](const JointPmf& p) { return ResultDict(gk_common_information(p)); },
        py::arg("pmf"));
  m.def("gk_brute_force_oracle",
        [](const JointPmf& p) { return ResultDict(gk_brute_force_oracle(p)); },
        py::arg("pmf"));
  m.def(
      "wyner_estimate",
      [](const JointPmf& p, std::uint64_t seed, std::size_t restarts,
         std::size_t w_card, std::size_t threads) {
        return ResultDict(wyner_estimate(p, Wyner(seed, restarts, w_card, threads)));
      },
      py::arg("pmf"), py::kw_only(), py::arg("seed"), py::arg("restarts") = 16,
      py::arg("w_cardinality") = 0, py::arg("threads") = 1);
  m.def(
      "pairwise_mi_bounds",
      [](const JointPmf& p) {
        const PairwiseBounds b = pairwise_mi_bounds(p);
        py::dict d;
        d["min"] = b.min_mi;
        d["max"] = b.max_mi;
        d["argmin"] = b.argmin;
        d["argmax"] = b.argmax;
        return d;
      },
      py::arg("pmf"));

  m.def("delta_max", &delta_max, py::arg("pmf"));
  m.def(
      "corner_point",
      [](const JointPmf& p, const AuxChannel& w) { return TupleDict(corner_point(p, w)); },
      py::arg("pmf"), py::arg("aux"));
  m.def(
      "is_achievable_with",
      [](const JointPmf& p, const AuxChannel& w, double r0, std::vector<double> rk,
         double delta) { return is_achievable_with(p, w, MakeTuple(r0, rk, delta)); },
      py::arg("pmf"), py::arg("aux"), py::arg("r0"), py::arg("rk"), py::arg("delta"));
  m.def(
      "max_delta_at_r0",
      [](const JointPmf& p, double budget, std::uint64_t seed, std::size_t restarts,
         std::size_t iterations, std::size_t w_card, std::size_t threads) {
        const DeltaSearchResult r = max_delta_at_r0(
            p, budget, Search(seed, restarts, iterations, w_card, threads));
        py::dict d;
        d["delta"] = r.delta;
        d["witness"] = r.witness;
        d["corner"] = TupleDict(r.corner);
        d["converged"] = r.converged;
        return d;
      },
      py::arg("pmf"), py::arg("r0_budget"), py::kw_only(), py::arg("seed"),
      py::arg("restarts") = 8, py::arg("iterations") = 1500,
      py::arg("w_cardinality") = 0, py::arg("threads") = 1);
  m.def(
      "is_achievable",
      [](const JointPmf& p, double r0, std::vector<double> rk, double delta,
         std::uint64_t seed) {
        SearchParams params;
        params.seed = seed;
        const AchievabilityVerdict v = is_achievable(p, MakeTuple(r0, rk, delta), params);
        py::dict d;
        d["achievable"] = v.achievable;
        d["witness"] = v.witness;
        return d;
      },
      py::arg("pmf"), py::arg("r0"), py::arg("rk"), py::arg("delta"), py::kw_only(),
      py::arg("seed"));

  m.def(
      "run_trials",
      [](const JointPmf& p, const AuxChannel& w, std::size_t n, double slack,
         double typicality, std::uint64_t seed, std::size_t trials, bool exact,
         std::size_t threads) {
        CodeConfig cfg;
        cfg.n = n;
        cfg.slack = slack;
        cfg.typicality_tolerance = typicality;
        cfg.seed = seed;
        const SimReport r = run_trials(p, w, cfg, trials, exact, threads);
        py::dict d;
        d["n"] = r.config.n;
        d["trials"] = r.trials;
        d["m0"] = r.m0;
        d["mk"] = r.mk;
        d["common_rate"] = r.common_rate;
        d["private_rates"] = r.private_rates;
        d["encoder_failure_rate"] = r.encoder_failure_rate;
        d["error_rates"] = r.error_rates;
        d["equivocation"] = r.equivocation;
        d["equivocation_gap"] = r.equivocation_gap;
        d["target_common"] = r.target_common;
        d["target_private"] = r.target_private;
        d["target_equivocation"] = r.target_equivocation;
        return d;
      },
      py::arg("pmf"), py::arg("aux"), py::kw_only(), py::arg("n"), py::arg("slack"),
      py::arg("typicality"), py::arg("seed"), py::arg("trials") = 1000,
      py::arg("exact") = false, py::arg("threads") = 1);
}
