"""Bottom-up shift-reduce dependency transition systems without spurious ambiguity."""

from ._core import (
    CanonparseError,
    SystemSpec,
    ambiguity_report,
    canonical_oracle,
    canonicalize,
    coverage_tsv,
    is_monotonic,
    is_projective,
    main,
    parse_system,
    read_conllx,
    run,
    transform,
    verify,
)

__all__ = [
    "CanonparseError",
    "SystemSpec",
    "ambiguity_report",
    "canonical_oracle",
    "canonicalize",
    "coverage_tsv",
    "is_monotonic",
    "is_projective",
    "main",
    "parse_system",
    "read_conllx",
    "run",
    "transform",
    "verify",
]
