# Copyright 2026 The mnrisk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Risk comparisons between the MLE and Dirichlet-Bayes estimators of
multinomial cell probabilities."""

from ._mnrisk import (
    DomainError,
    avg_l1_table,
    bayes_abs_risk,
    bayes_avg_risk,
    bayes_squared_risk,
    beta_cdf,
    beta_median,
    compare,
    dominance_threshold,
    estimate_mle_better_proportion,
    load_distribution,
    mle_abs_risk,
    mle_avg_risk,
    mle_region_upper_bound,
    mle_squared_risk,
    proportional_decrease,
    region_proportion_exact,
    region_proportion_lower_bound,
    run_stocking_sim,
    sample_uniform_simplex,
)

__all__ = [
    "DomainError",
    "avg_l1_table",
    "bayes_abs_risk",
    "bayes_avg_risk",
    "bayes_squared_risk",
    "beta_cdf",
    "beta_median",
    "compare",
    "dominance_threshold",
    "estimate_mle_better_proportion",
    "load_distribution",
    "mle_abs_risk",
    "mle_avg_risk",
    "mle_region_upper_bound",
    "mle_squared_risk",
    "proportional_decrease",
    "region_proportion_exact",
    "region_proportion_lower_bound",
    "run_stocking_sim",
    "sample_uniform_simplex",
]
