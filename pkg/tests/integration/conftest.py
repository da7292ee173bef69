# Copyright 2026 The minseq Authors.
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

"""Configure minseq acceptance tests."""

import logging

import pytest

from minseq.semantics import EnumerationBounds

logger = logging.getLogger(__name__)


def pytest_addoption(parser) -> None:
    parser.addoption(
        "--vars",
        action="store",
        type=int,
        default=2,
        help="Variables of the exhaustive sweeps",
    )
    parser.addoption(
        "--max-connectives",
        action="store",
        type=int,
        default=4,
        help="Connective budget of the exhaustive sweeps",
    )
    parser.addoption(
        "--jobs",
        action="store",
        type=int,
        default=1,
        help="Worker processes of the census",
    )
    parser.addoption(
        "--seed",
        action="store",
        type=int,
        default=0,
        help="Seed of the sampled derivations",
    )


@pytest.fixture(scope="module")
def formula_bounds(request) -> EnumerationBounds:
    """Bounds of the formula sweeps and the census."""
    return EnumerationBounds(request.config.option.vars, request.config.option.max_connectives)


@pytest.fixture(scope="module")
def sequent_bounds(request) -> EnumerationBounds:
    """Bounds of the sequent sweeps: up to three occurrences."""
    return EnumerationBounds(
        request.config.option.vars, request.config.option.max_connectives, 3
    )


@pytest.fixture(scope="module")
def jobs(request) -> int:
    """Census worker processes."""
    return request.config.option.jobs


@pytest.fixture(scope="module")
def seed(request) -> int:
    """Seed of sampled derivations."""
    logger.info("sampling derivations with seed %d", request.config.option.seed)
    return request.config.option.seed
