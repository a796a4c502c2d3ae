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

"""Explains assertion failures in MiniLang programs.

The heavy lifting happens in the compiled ``_whyfail`` extension; this module
adds keyword configuration and file loading.
"""

from __future__ import annotations

import os
from typing import Any, Optional, Sequence

from ._whyfail import (
    Config,
    NoFailingTest,
    NoPassingTest,
    ParseError,
    Program,
    TypeCheckError,
    conjunctive_classifier,
    generate,
    max_margin_separator,
    normalize_tests,
    pretty,
)
from . import _whyfail

__all__ = [
    "Config",
    "NoFailingTest",
    "NoPassingTest",
    "ParseError",
    "Program",
    "TypeCheckError",
    "conjunctive_classifier",
    "explain",
    "generate",
    "load_program",
    "localize",
    "make_config",
    "max_margin_separator",
    "normalize_tests",
    "pretty",
    "run",
]


def _read(text_or_path: str) -> str:
    if "\n" not in text_or_path and os.path.isfile(text_or_path):
        with open(text_or_path, encoding="utf-8") as f:
            return f.read()
    return text_or_path


def load_program(source_or_path: str) -> Program:
    """Typechecked program from source text or a ``.ml5`` path."""
    return Program(_read(source_or_path))


def make_config(**options: Any) -> Config:
    config = Config()
    for key, value in options.items():
        if not hasattr(config, key):
            raise TypeError(f"unknown option {key!r}")
        setattr(config, key, value)
    config.validate()
    return config


def _program(program: "Program | str") -> Program:
    return program if isinstance(program, Program) else load_program(program)


def run(program: "Program | str", tests: str) -> dict:
    return _whyfail.run(_program(program), _read(tests))


def localize(program: "Program | str", tests: str, config: Optional[Config] = None,
             **options: Any) -> dict:
    return _whyfail.localize(_program(program), _read(tests), config or make_config(**options))


def explain(program: "Program | str", tests: str, config: Optional[Config] = None,
            **options: Any) -> dict:
    """Explanation report as a dict; ``report["explained"]`` tells whether one was found."""
    return _whyfail.explain(_program(program), _read(tests), config or make_config(**options))
