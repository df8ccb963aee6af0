"""Identity ledger: every catalogued identity, instantiable and exactly checkable.

>>> report = verify("pascal-inverse")
>>> report.ok
True
"""

from __future__ import annotations

from . import pascal, bernoulli, stirling, applications  # noqa: F401  (registration side effects)
from ._common import SPECS
from .core import (
    PROFILES,
    Catalog,
    Failure,
    Grid,
    IdentitySpec,
    Limits,
    VerifyReport,
    check_case,
    perturb,
    run,
)

CATALOG = Catalog(SPECS)

__all__ = [
    "CATALOG", "Catalog", "Failure", "Grid", "IdentitySpec", "Limits", "PROFILES",
    "VerifyReport", "check_case", "list_identities", "perturb", "run", "verify",
    "verify_all",
]


def list_identities(catalog: Catalog = CATALOG) -> list[tuple[str, str, str]]:
    """(id, anchor, domain) for every entry, in catalog order."""
    return [(s.id, s.anchor, s.domain) for s in catalog]


def verify(ident: str, grid: Grid | None = None, profile: str = "quick",
           catalog: Catalog = CATALOG) -> VerifyReport:
    spec = catalog.get(ident)
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    return run(spec, grid if grid is not None else spec.default_grid(profile))


def verify_all(profile: str = "quick", catalog: Catalog = CATALOG) -> list[VerifyReport]:
    return [verify(s.id, profile=profile, catalog=catalog) for s in catalog]
