"""Identity specs, parameter grids, and the exact verifier."""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

from ..errors import DomainViolation, UnknownIdentity
from ..matrices import LowerTri, identity
from ..ring import MultiPoly, as_poly


class Limits(NamedTuple):
    """Index ceilings for one verification profile."""

    n_sym: int  # matrix order, symbolic parameters
    n_rat: int  # matrix order, rational samples
    idx: int  # scalar indices i, m


PROFILES = {
    "quick": Limits(n_sym=5, n_rat=6, idx=5),
    "full": Limits(n_sym=7, n_rat=7, idx=7),
}


class Grid:
    """Ordered named dimensions; a dimension is an iterable or a function of the
    values already bound (so ``j`` can range up to ``i``)."""

    def __init__(self, **dims):
        if not dims:
            raise ValueError("a grid needs at least one dimension")
        self.dims = tuple(dims.items())

    def cases(self) -> Iterator[dict]:
        def walk(pos, bound):
            if pos == len(self.dims):
                yield dict(bound)
                return
            name, values = self.dims[pos]
            if callable(values):
                values = values(bound)
            for v in values:
                bound[name] = v
                yield from walk(pos + 1, bound)
            bound.pop(name, None)

        return walk(0, {})

    def __iter__(self):
        return self.cases()


Pair = tuple  # (lhs, rhs), each a MultiPoly, rational, or LowerTri


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    anchor: str
    domain: str
    instantiate: Callable[[dict], object]
    grid: Callable[[Limits], Grid]
    admits: Callable[[dict], bool] | None = None

    def default_grid(self, profile: str = "quick") -> Grid:
        return self.grid(PROFILES[profile])


@dataclass
class Failure:
    bindings: dict
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"bindings": self.bindings, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerifyReport:
    id: str
    anchor: str
    attempted: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and self.passed == self.attempted

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "attempted": self.attempted,
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def summary(self) -> str:
        return f"{self.id}: {self.passed}/{self.attempted} passed"


def _value(v):
    if isinstance(v, (LowerTri, MultiPoly)):
        return v
    return as_poly(v)


def _text(v) -> str:
    if isinstance(v, LowerTri):
        return repr(v)
    return str(v)


def _binding_text(case: dict) -> dict:
    out = {}
    for k, v in case.items():
        if isinstance(v, bool) or isinstance(v, int):
            out[k] = v
        elif isinstance(v, Fraction):
            out[k] = str(v)
        else:
            out[k] = str(v)
    return out


def _pairs(result) -> list:
    if isinstance(result, tuple) and len(result) == 2 and not isinstance(result[0], tuple):
        return [result]
    return list(result)


def check_case(spec: IdentitySpec, case: dict) -> Failure | None:
    """Evaluate one case; return a Failure or None when every side agrees exactly."""
    try:
        pairs = _pairs(spec.instantiate(case))
    except DomainViolation:
        raise
    except Exception as exc:  # a crash is a failed case, never a silent pass
        return Failure(_binding_text(case), f"error: {type(exc).__name__}: {exc}", "")
    for lhs, rhs in pairs:
        lhs, rhs = _value(lhs), _value(rhs)
        if type(lhs) is not type(rhs) or lhs != rhs:
            return Failure(_binding_text(case), _text(lhs), _text(rhs))
    return None


def _threads() -> int:
    raw = os.environ.get("DEGENMAT_THREADS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run(spec: IdentitySpec, grid: Grid) -> VerifyReport:
    cases = list(grid.cases())
    if spec.admits is not None:
        for case in cases:
            if not spec.admits(case):
                raise DomainViolation(
                    f"{spec.id}: case {_binding_text(case)} violates {spec.domain!r}"
                )
    report = VerifyReport(spec.id, spec.anchor)
    start = time.perf_counter()
    workers = _threads()
    if workers > 1 and len(cases) > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda c: check_case(spec, c), cases))
    else:
        results = [check_case(spec, c) for c in cases]
    for failure in results:
        report.attempted += 1
        if failure is None:
            report.passed += 1
        else:
            report.failures.append(failure)
    report.elapsed = time.perf_counter() - start
    return report


class Catalog:
    """Immutable, ordered collection of identity specs with unique ids."""

    def __init__(self, specs):
        self._specs = tuple(specs)
        self._by_id = {}
        for s in self._specs:
            if s.id in self._by_id:
                raise ValueError(f"duplicate identity id {s.id!r}")
            self._by_id[s.id] = s

    def __iter__(self):
        return iter(self._specs)

    def __len__(self):
        return len(self._specs)

    def __contains__(self, ident):
        return ident in self._by_id

    def get(self, ident: str) -> IdentitySpec:
        try:
            return self._by_id[ident]
        except KeyError:
            raise UnknownIdentity(ident) from None

    def ids(self) -> list[str]:
        return [s.id for s in self._specs]

    def replace(self, spec: IdentitySpec) -> "Catalog":
        return Catalog(spec if s.id == spec.id else s for s in self._specs)


def perturb(spec: IdentitySpec) -> IdentitySpec:
    """A copy of ``spec`` whose right-hand sides are shifted by one (I_n for matrices)."""

    def shifted(case):
        out = []
        for lhs, rhs in _pairs(spec.instantiate(case)):
            rhs = _value(rhs)
            if isinstance(rhs, LowerTri):
                rhs = rhs + identity(rhs.n)
            else:
                rhs = rhs + 1
            out.append((lhs, rhs))
        return out

    return replace(spec, instantiate=shifted)
