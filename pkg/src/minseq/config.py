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

"""Settings file for the command line.

Settings are read from a YAML file whose sections override the built-in defaults:

```yaml
census:
  vars: 2
  max_connectives: 3
  jobs: 4
search:
  max_depth: 24
prover:
  policy: random
  seed: 7
```
"""

__all__ = [
    "CensusSettings",
    "DegreeSettings",
    "ProverSettings",
    "SearchSettings",
    "Settings",
]

import logging
import pathlib
from typing import Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from minseq.constants import (
    DEFAULT_CENSUS_CONNECTIVES,
    DEFAULT_CENSUS_SPOT_CHECKS,
    DEFAULT_CENSUS_VARIABLES,
    DEFAULT_DEGREE_CONNECTIVES,
    DEFAULT_DEGREE_FORMULAS,
    DEFAULT_DEGREE_VARIABLES,
    DEFAULT_MAX_DEPTH,
    DEFAULT_MEMO_LIMIT,
    DEFAULT_WIDTH_SLACK,
)
from minseq.exceptions import ConfigError
from minseq.prover import Policy, SearchBounds

_logger = logging.getLogger(__name__)


class CensusSettings(BaseModel):
    """Defaults of the `census` command."""

    model_config = ConfigDict(extra="forbid")

    vars: int = Field(DEFAULT_CENSUS_VARIABLES, ge=1)
    max_connectives: int = Field(DEFAULT_CENSUS_CONNECTIVES, ge=0)
    jobs: int = Field(1, ge=1)
    spot_checks: int = Field(DEFAULT_CENSUS_SPOT_CHECKS, ge=0)


class DegreeSettings(BaseModel):
    """Defaults of the `degrees` command."""

    model_config = ConfigDict(extra="forbid")

    vars: int = Field(DEFAULT_DEGREE_VARIABLES, ge=1)
    max_connectives: int = Field(DEFAULT_DEGREE_CONNECTIVES, ge=0)
    max_formulas: int = Field(DEFAULT_DEGREE_FORMULAS, ge=1)


class SearchSettings(BaseModel):
    """Caps of backward search."""

    model_config = ConfigDict(extra="forbid")

    width_slack: int = Field(DEFAULT_WIDTH_SLACK, ge=0)
    max_depth: int = Field(DEFAULT_MAX_DEPTH, ge=1)
    memo_limit: int = Field(DEFAULT_MEMO_LIMIT, ge=1)

    def bounds(
        self, max_width: Optional[int] = None, max_depth: Optional[int] = None
    ) -> SearchBounds:
        """Build search bounds, letting explicit values win over the settings."""
        return SearchBounds(
            max_width=max_width,
            max_depth=max_depth if max_depth is not None else self.max_depth,
            memo_limit=self.memo_limit,
            width_slack=self.width_slack,
        )


class ProverSettings(BaseModel):
    """Principal selection of the completeness procedure."""

    model_config = ConfigDict(extra="forbid")

    policy: Policy = Policy.LEFTMOST
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _seeded(self) -> "ProverSettings":
        if self.policy is Policy.RANDOM and self.seed is None:
            raise ValueError("the random policy requires a seed")
        return self


class Settings(BaseModel):
    """All settings, each section defaulting to the built-in values."""

    model_config = ConfigDict(extra="forbid")

    census: CensusSettings = Field(default_factory=CensusSettings)
    degrees: DegreeSettings = Field(default_factory=DegreeSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    prover: ProverSettings = Field(default_factory=ProverSettings)

    @classmethod
    def load(cls, path: Union[str, pathlib.Path]) -> "Settings":
        """Load settings from a YAML file.

        Raises:
            ConfigError: Raised if the file cannot be read, is not YAML, or holds
                unknown keys or out-of-range values.
        """
        path = pathlib.Path(path)
        try:
            with path.open() as f:
                data = yaml.safe_load(f)
        except OSError as e:
            raise ConfigError(f"cannot read settings file {path}: {e.strerror}") from e
        except yaml.YAMLError as e:
            raise ConfigError(f"settings file {path} is not valid YAML: {e}") from e

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigError(f"settings file {path} must hold a mapping")
        try:
            settings = cls.model_validate(data)
        except ValidationError as e:
            raise ConfigError(f"invalid settings in {path}: {e}") from e
        _logger.debug("loaded settings from %s", path)
        return settings
