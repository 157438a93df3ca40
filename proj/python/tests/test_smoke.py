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

import math

import pytest

import submax

KINDS = ["laminar", "graphic", "transversal"]


@pytest.mark.parametrize("kind", KINDS)
def test_generate_is_deterministic(kind):
    a = submax.generate(kind, "coverage", 20, seed=4)
    b = submax.generate(kind, "coverage", 20, seed=4)
    assert a == b
    assert a != submax.generate(kind, "coverage", 20, seed=5)


@pytest.mark.parametrize("kind", KINDS)
def test_run_then_verify(kind):
    inst = submax.generate(kind, "facility", 30, seed=2)
    result = submax.run(inst, seed=7)
    assert result == submax.run(inst, seed=7)
    report = submax.verify(inst, result)
    assert report["ok"], report["failures"]
    assert sorted(set(result["solution"])) == result["solution"]


@pytest.mark.parametrize("kind", KINDS)
def test_full_against_brute_force(kind):
    inst = submax.generate(kind, "coverage", 10, seed=3)
    _, opt = submax.brute_force_opt(inst)
    full = submax.run(inst, epsilon=0.2)["value"]
    assert full <= opt + 1e-9
    assert full >= (1 - 1 / math.e - 0.2) * opt


def test_tampered_result_fails():
    inst = submax.generate("laminar", "coverage", 15, seed=1)
    result = submax.run(inst)
    result["value"] += 1.0
    assert submax.verify(inst, result)["failures"] == ["value_mismatch"]


def test_bad_arguments_raise():
    with pytest.raises(ValueError):
        submax.generate("laminar", "coverage", 0)
    inst = submax.generate("laminar", "coverage", 5)
    with pytest.raises(ValueError):
        submax.run(inst, epsilon=2.0)
