# Copyright 2026 The rentfair Authors
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

"""Exact envy-free rent division under soft-budget preferences.

All rationals cross the boundary as strings ("19/3"); instances and results
are plain dicts mirroring the CLI's JSON documents.
"""

import json as _json

try:
    from rentfair._rentfair import (
        SizeGuardError,
        baseline_instance as _baseline,
        generate_instance as _generate,
        iteration_bound,
        oracle_instance as _oracle,
        solve_instance as _solve,
        verify_instance as _verify,
    )
except ImportError:  # running against a build tree
    from _rentfair import (
        SizeGuardError,
        baseline_instance as _baseline,
        generate_instance as _generate,
        iteration_bound,
        oracle_instance as _oracle,
        solve_instance as _solve,
        verify_instance as _verify,
    )

__all__ = [
    "SizeGuardError",
    "baseline",
    "generate",
    "iteration_bound",
    "oracle",
    "solve",
    "verify",
]


def solve(instance, objective=None, trace=False):
    """Solve an instance dict; returns the result dict."""
    return _json.loads(_solve(_json.dumps(instance), objective, trace))


def oracle(instance, guard=5):
    """Brute-force optimum of a small instance dict."""
    return _json.loads(_oracle(_json.dumps(instance), guard))


def verify(instance, result):
    """Check a result dict against its instance dict."""
    return _json.loads(_verify(_json.dumps(instance), _json.dumps(result)))


def baseline(instance):
    """Undirected envy-free allocation (no selection guarantee)."""
    return _json.loads(_baseline(_json.dumps(instance)))


def generate(n, k, seed, tightness="mid"):
    """Deterministic seeded instance dict."""
    return _json.loads(_generate(n, k, seed, tightness))
