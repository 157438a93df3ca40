# Copyright 2026 The submax Authors.
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
"""Python access to the submax instance generator, optimizer and verifier.

Instances and results are plain dicts with the same layout as the files the
command line tool reads and writes.
"""

import json

from . import _submax
from ._submax import DomainError

__all__ = ["DomainError", "generate", "run", "verify", "brute_force_opt"]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def generate(matroid, function, n, seed=1):
    return json.loads(_submax.generate(matroid, function, n, seed))


def run(instance, algorithm="full", epsilon=0.2, seed=1, threads=1):
    return json.loads(
        _submax.run(_dump(instance), algorithm, epsilon, seed, threads))


def verify(instance, result):
    return json.loads(_submax.verify(_dump(instance), _dump(result)))


def brute_force_opt(instance):
    """Returns (set, value) of an exact optimum; n <= 20."""
    elems, value = _submax.brute_force_opt(_dump(instance))
    return list(elems), value
