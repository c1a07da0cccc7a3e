"""numsem: exact computation with numerical semigroups."""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    NATURALS,
    AperySet,
    InvariantReport,
    NumericalSemigroup,
    apery_set,
    classify,
    from_fundamental_gaps,
    from_gaps,
    from_generators,
    fundamental_gaps,
    intersect,
    invariant_report,
    is_irreducible,
    oversemigroups,
    parse_generators,
    pseudo_frobenius_numbers,
)
