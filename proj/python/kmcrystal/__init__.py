"""Crystal bases of Kac-Moody algebras: tensor products, filtrations and multiplicities."""

from ._core import (
    KmcrystalError,
    cartan,
    classify,
    composition_series,
    crystal,
    lr_decompose,
    min_words,
    run_cli,
    verify_multiplicity,
    weyl_dimension,
)

__all__ = [
    "KmcrystalError",
    "cartan",
    "classify",
    "composition_series",
    "crystal",
    "lr_decompose",
    "min_words",
    "run_cli",
    "verify_multiplicity",
    "weyl_dimension",
]
