"""Configuration parameters for the nilpotra toolkit.

This module defines the defaults used throughout nilpotra, the resource caps
guarding collection, and the run configuration assembled by the command line.
It centralizes all configuration parameters to maintain consistency across the
application.
"""

import os
from argparse import Namespace
from dataclasses import dataclass, field
from typing import Mapping, Optional, Tuple

NILPOTRA = "nilpotra"

DEFAULT_RANK = 2
DEFAULT_CLASS = 2
DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
DEFAULT_RANDOM_WORD_LENGTH = 12

DEFAULT_MAX_WORD_LEN = 10**6
DEFAULT_MAX_WITT = 10**5
MAX_WORD_LEN_ENV = "NILPOTRA_MAX_WORD_LEN"

TEXT_FORMAT = "text"
JSON_FORMAT = "json"
OUTPUT_FORMATS: Tuple[str, ...] = (TEXT_FORMAT, JSON_FORMAT)


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Limits:
    """Resource caps applied to collection and basis construction."""

    max_word_len: int = DEFAULT_MAX_WORD_LEN
    max_witt: int = DEFAULT_MAX_WITT

    def __post_init__(self) -> None:
        _positive("max_word_len", self.max_word_len)
        _positive("max_witt", self.max_witt)

    @classmethod
    def from_env(
        cls,
        max_word_len: Optional[int] = None,
        max_witt: Optional[int] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "Limits":
        """Build limits with precedence explicit value > environment > default."""
        env = os.environ if environ is None else environ
        if max_word_len is None:
            raw = env.get(MAX_WORD_LEN_ENV)
            if raw:
                try:
                    max_word_len = int(raw)
                except ValueError:
                    raise ValueError(
                        f"{MAX_WORD_LEN_ENV} must be an integer, got {raw!r}"
                    ) from None
            else:
                max_word_len = DEFAULT_MAX_WORD_LEN
        return cls(
            max_word_len=max_word_len,
            max_witt=DEFAULT_MAX_WITT if max_witt is None else max_witt,
        )


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs besides its own positional inputs."""

    rank: int = DEFAULT_RANK
    nclass: int = DEFAULT_CLASS
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    limits: Limits = field(default_factory=Limits)
    output_format: str = TEXT_FORMAT

    def __post_init__(self) -> None:
        _positive("rank", self.rank)
        _positive("class", self.nclass)
        if self.trials < 0:
            raise ValueError(f"trials must not be negative, got {self.trials}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_args(
        cls, args: Namespace, environ: Optional[Mapping[str, str]] = None
    ) -> "RunConfig":
        """Build a configuration from parsed command line arguments."""
        return cls(
            rank=getattr(args, "rank", DEFAULT_RANK),
            nclass=getattr(args, "nclass", DEFAULT_CLASS),
            seed=getattr(args, "seed", DEFAULT_SEED),
            trials=getattr(args, "trials", DEFAULT_TRIALS),
            limits=Limits.from_env(
                getattr(args, "max_word_len", None),
                getattr(args, "max_witt", None),
                environ,
            ),
            output_format=getattr(args, "format", TEXT_FORMAT),
        )

    @property
    def is_json(self) -> bool:
        return self.output_format == JSON_FORMAT
