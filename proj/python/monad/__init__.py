"""Monads of line bundles on projective space: exact cohomology, spectra, splitting types."""

from ._core import (
    ParseError,
    chern,
    coh_table,
    family_names,
    spectrum,
    split,
    stability,
    verify_paper,
    zoo_build,
)

__all__ = [
    "ParseError",
    "chern",
    "coh_table",
    "family_names",
    "spectrum",
    "split",
    "stability",
    "verify_paper",
    "zoo_build",
]
