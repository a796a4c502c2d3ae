# Copyright 2026 The whyfail Authors.
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

import os

import pytest

import whyfail

CORPUS = os.environ.get(
    "WHYFAIL_CORPUS", os.path.join(os.path.dirname(__file__), "..", "..", "corpus"))


def corpus(name):
    d = os.path.join(CORPUS, name)
    return os.path.join(d, "program.ml5"), os.path.join(d, "tests.txt")


def test_run_partition():
    program, tests = corpus("running_example")
    report = whyfail.run(program, tests)
    assert report["failed"] == 1
    assert report["passed"] == 2
    assert report["irrelevant"] == 1


def test_explain_running_example():
    program, tests = corpus("running_example")
    report = whyfail.explain(program, tests)
    assert report["explained"]
    assert report["predicate_pretty"] == "max ≥ stus[2].score"
    assert report["point"]["describe"] == "Before line 23"


def test_localize_scores():
    program, tests = corpus("running_example")
    report = whyfail.localize(program, tests)
    assert len(report["candidate_points"]) == 3


def test_generate_is_deterministic():
    program = whyfail.load_program(corpus("missing_case")[0])
    assert whyfail.generate(program, 5, seed=4) == whyfail.generate(program, 5, seed=4)
    assert whyfail.generate(program, 0) == ""


def test_separator():
    coeffs, rhs = whyfail.max_margin_separator([[1.0, 0.0]], [[-1.0, 0.0]])
    assert coeffs == pytest.approx([1.0, 0.0])
    assert rhs == pytest.approx(0.0)
    assert whyfail.max_margin_separator([[1.0]], [[1.0]]) is None


def test_errors():
    with pytest.raises(whyfail.ParseError):
        whyfail.load_program("fn f(int x) -> int { return x; }")
    with pytest.raises(whyfail.TypeCheckError):
        whyfail.load_program("entry fn f(int x) {\n  assert y > 0;\n}\n")
    program, tests = corpus("running_example")
    with pytest.raises(whyfail.NoPassingTest):
        whyfail.explain(program, "[Stu{score: 94, ID: 1}, Stu{score: 60, ID: 2}, "
                                 "Stu{score: 100, ID: 3}]\n")
    with pytest.raises(TypeError):
        whyfail.make_config(bogus=1)
