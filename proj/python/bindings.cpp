// Copyright 2026 The mnrisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mnrisk/abs_risk.hpp"
#include "mnrisk/avg_risk.hpp"
#include "mnrisk/beta.hpp"
#include "mnrisk/core_risk.hpp"
#include "mnrisk/error.hpp"
#include "mnrisk/mc_simplex.hpp"
#include "mnrisk/simplex_geometry.hpp"
#include "mnrisk/stock_sim.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mnrisk;

namespace {

SymmetricPrior prior_arg(const std::string& text) { return SymmetricPrior::parse(text); }

py::dict estimate_dict(const MonteCarloEstimate& mc) {
    py::dict d;
    d["estimate"] = mc.estimate;
    d["std_error"] = mc.std_error;
    d["samples"] = mc.samples;
    d["hits"] = mc.hits;
    d["seed"] = mc.seed;
    d["zero_hit_upper_bound"] = mc.zero_hit_upper_bound ? py::cast(*mc.zero_hit_upper_bound) : py::none();
    return d;
}

} // namespace

PYBIND11_MODULE(_mnrisk, m) {
    m.doc() = "MLE vs Dirichlet-Bayes risk comparisons for multinomial models";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<IngestError>(m, "IngestError", PyExc_ValueError);

    m.def("mle_squared_risk", [](std::vector<double> theta, std::uint64_t n) {
        return mle_squared_risk(ProbVector(std::move(theta)), n);
    }, py::arg("theta"), py::arg("n"));
    m.def("bayes_squared_risk", [](std::vector<double> theta, std::uint64_t n, const std::string& prior) {
        return bayes_squared_risk(ProbVector(std::move(theta)), n, prior_arg(prior));
    }, py::arg("theta"), py::arg("n"), py::arg("prior") = "uniform");
    m.def("dominance_threshold", [](std::size_t k, std::uint64_t n, const std::string& prior) {
        return dominance_threshold(ModelDims(k, n), prior_arg(prior));
    }, py::arg("k"), py::arg("n"), py::arg("prior") = "uniform");
    m.def("compare", [](std::vector<double> theta, std::uint64_t n, const std::string& prior) {
        const ProbVector p(std::move(theta));
        const auto c = compare_at(p, ModelDims(p.size(), n), prior_arg(prior));
        py::dict d;
        d["mle_risk"] = c.mle_risk;
        d["bayes_risk"] = c.bayes_risk;
        d["squared_norm"] = c.squared_norm;
        d["threshold"] = c.threshold;
        d["mle_wins"] = c.mle_wins;
        return d;
    }, py::arg("theta"), py::arg("n"), py::arg("prior") = "uniform");

    m.def("region_proportion_exact", [](std::size_t k, double R) {
        return region_proportion_exact(RegionSpec(k, R));
    }, py::arg("k"), py::arg("R"));
    m.def("region_proportion_lower_bound", [](std::size_t k, double R) {
        return region_proportion_lower_bound(RegionSpec(k, R));
    }, py::arg("k"), py::arg("R"));
    m.def("mle_region_upper_bound", [](std::size_t k, std::uint64_t n, const std::string& prior) {
        return mle_region_upper_bound(ModelDims(k, n), prior_arg(prior));
    }, py::arg("k"), py::arg("n"), py::arg("prior") = "inv-k");

    m.def("sample_uniform_simplex", [](std::size_t k, std::size_t count, std::uint64_t seed) {
        std::vector<std::vector<double>> out;
        for (const auto& p : sample_uniform_simplex(k, count, seed)) out.emplace_back(p.begin(), p.end());
        return out;
    }, py::arg("k"), py::arg("count"), py::arg("seed") = 0);
    m.def("estimate_mle_better_proportion",
          [](std::size_t k, std::uint64_t n, const std::string& prior, std::uint64_t count, std::uint64_t seed,
             unsigned workers) {
              const ModelDims dims(k, n);
              const auto p = prior_arg(prior);
              MonteCarloEstimate mc;
              {
                  py::gil_scoped_release release;
                  mc = estimate_mle_better_proportion(dims, p, count, seed, workers);
              }
              return estimate_dict(mc);
          },
          py::arg("k"), py::arg("n"), py::arg("prior") = "uniform", py::arg("count") = 100000,
          py::arg("seed") = 0, py::arg("workers") = 0);

    m.def("mle_avg_risk", [](std::size_t k, std::uint64_t n) { return mle_avg_risk(ModelDims(k, n)); },
          py::arg("k"), py::arg("n"));
    m.def("bayes_avg_risk", [](std::size_t k, std::uint64_t n, const std::string& prior) {
        return bayes_avg_risk(ModelDims(k, n), prior_arg(prior));
    }, py::arg("k"), py::arg("n"), py::arg("prior") = "uniform");
    m.def("proportional_decrease", [](std::size_t k, std::uint64_t n, const std::string& prior) {
        return proportional_decrease(ModelDims(k, n), prior_arg(prior));
    }, py::arg("k"), py::arg("n"), py::arg("prior") = "uniform");

    m.def("beta_cdf", [](double a, double b, double x) { return beta_cdf(BetaParams(a, b), x); },
          py::arg("a"), py::arg("b"), py::arg("x"));
    m.def("beta_median", [](double a, double b) { return beta_median(BetaParams(a, b)); }, py::arg("a"),
          py::arg("b"));
    m.def("mle_abs_risk", [](std::vector<double> theta, std::uint64_t n) {
        return mle_abs_risk(ProbVector(std::move(theta)), n);
    }, py::arg("theta"), py::arg("n"));
    m.def("bayes_abs_risk", [](std::vector<double> theta, std::uint64_t n) {
        return bayes_abs_risk(ProbVector(std::move(theta)), n);
    }, py::arg("theta"), py::arg("n"));
    m.def("avg_l1_table",
          [](std::vector<std::size_t> ks, std::vector<std::uint64_t> ns, std::uint64_t samples, std::uint64_t seed,
             unsigned workers) {
              std::vector<L1TableRow> rows;
              {
                  py::gil_scoped_release release;
                  rows = avg_l1_table(ks, ns, samples, seed, workers);
              }
              py::list out;
              for (const auto& r : rows) {
                  py::dict d;
                  d["k"] = r.k;
                  d["n"] = r.n;
                  d["mle"] = r.mle.mean;
                  d["mle_std_error"] = r.mle.std_error;
                  d["bayes"] = r.bayes.mean;
                  d["bayes_std_error"] = r.bayes.std_error;
                  d["seed"] = r.seed;
                  out.append(d);
              }
              return out;
          },
          py::arg("ks"), py::arg("ns"), py::arg("samples") = 10000, py::arg("seed") = 0, py::arg("workers") = 0);

    m.def("load_distribution", [](const std::string& path) {
        const auto dist = load_distribution_file(path);
        py::list out;
        for (const auto& c : dist.categories()) out.append(py::make_tuple(c.label, c.probability, c.stockable));
        return out;
    }, py::arg("path"));
    m.def("run_stocking_sim",
          [](const std::string& path, std::uint64_t customers, std::uint64_t reps, std::int64_t stock_total,
             std::uint64_t seed, unsigned workers) {
              const auto dist = load_distribution_file(path);
              SimConfig config;
              config.customers = customers;
              config.reps = reps;
              config.stock_total = stock_total;
              config.seed = seed;
              config.workers = workers;
              std::string text;
              {
                  py::gil_scoped_release release;
                  text = to_json(run_stocking_sim(dist, config)).dump();
              }
              return py::module_::import("json").attr("loads")(text);
          },
          py::arg("path"), py::arg("customers") = 100, py::arg("reps") = 1000, py::arg("stock_total") = 1000,
          py::arg("seed") = 0, py::arg("workers") = 0);
}
