# Copyright 2026 The rootspace Authors
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
"""Metric-space toolkit for monic polynomials and their root multisets.

Polynomials are passed as their n non-leading coefficients a_0..a_{n-1}
(low to high, leading coefficient 1 implicit); root multisets and tuples
as sequences of complex numbers.
"""

from ._core import (
    cauchy_bound,
    certify,
    cluster_structure,
    connect_distinct_tuples,
    discontinuity_witness,
    disk_counts,
    expand,
    multiset_metric,
    multiset_metric_naive,
    order_tuple,
    ostrowski,
    poly_metric,
    rahman_schmeisser,
    roots_of,
    solve,
    sup_metric,
    symmetric_values,
    track,
)

__all__ = [
    "cauchy_bound",
    "certify",
    "cluster_structure",
    "connect_distinct_tuples",
    "discontinuity_witness",
    "disk_counts",
    "expand",
    "multiset_metric",
    "multiset_metric_naive",
    "order_tuple",
    "ostrowski",
    "poly_metric",
    "rahman_schmeisser",
    "roots_of",
    "solve",
    "sup_metric",
    "symmetric_values",
    "track",
]
