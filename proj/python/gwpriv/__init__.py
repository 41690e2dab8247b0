# Copyright 2026 The gwpriv Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Common information and privacy in the Gray-Wyner network."""

from gwpriv._core import (
    AuxChannel,
    GwprivError,
    JointPmf,
    binary_entropy,
    conditional_entropy,
    conditional_mutual_information,
    corner_point,
    delta_max,
    entropy,
    format_pmf,
    gk_brute_force_oracle,
    gk_common_information,
    is_achievable,
    is_achievable_with,
    join_with_aux,
    load_aux,
    load_pmf,
    markov_slack,
    max_delta_at_r0,
    mutual_information,
    pairwise_mi_bounds,
    parse_pmf,
    run_trials,
    save_aux,
    save_pmf,
    wyner_estimate,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
