"""Exhaustive copermanental census over the (3, 3, 2, ..., 2) degree class.

Any graph sharing a permanental polynomial with a dumbbell or theta graph
must share its degree sequence, so the search space at vertex count n is
closed: the connected members are exactly the dumbbells and thetas on n
vertices, and the disconnected ones append disjoint cycles to a smaller
connected member (a lone degree-3 vertex in a component is impossible by
parity).  The census computes every candidate's polynomial, fingerprints
the coefficient vectors, and reports any exact collisions.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import IntPoly
from .graphs import (
    Cycle,
    DisjointUnion,
    Dumbbell,
    FamilySpec,
    MatrixKind,
    Theta,
    bicyclic_specs,
    generate,
    spec_label,
    spec_vertex_count,
)
from .permanent import perm_poly

CENSUS_MIN_N = 5
CENSUS_MAX_N = 16


class OutOfRange(ValueError):
    pass


class ParseError(ValueError):
    """Catalog line failed to parse; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class CensusRecord:
    n: int
    kind: str                    # MatrixKind value string
    description: str             # canonical spec label
    extension: bool              # True iff a bridge-edge (r = 0) dumbbell is involved
    coefficients: tuple[str, ...]  # decimal strings, constant term first
    fingerprint: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "kind": self.kind,
                "description": self.description,
                "extension": self.extension,
                "coefficients": list(self.coefficients),
                "fingerprint": self.fingerprint,
            },
            sort_keys=True,
            separators=(",", ":"),
        )

    @staticmethod
    def from_dict(data: dict) -> "CensusRecord":
        return CensusRecord(
            n=int(data["n"]),
            kind=str(data["kind"]),
            description=str(data["description"]),
            extension=bool(data["extension"]),
            coefficients=tuple(str(c) for c in data["coefficients"]),
            fingerprint=str(data["fingerprint"]),
        )


@dataclass(frozen=True)
class Collision:
    n: int
    kind: str
    fingerprint: str
    members: tuple[str, ...]
    involves_connected: bool


@dataclass(frozen=True)
class CensusReport:
    n_min: int
    n_max: int
    kinds: tuple[str, ...]
    include_r0: bool
    records: tuple[CensusRecord, ...]
    collisions: tuple[Collision, ...]

    @property
    def connected_collisions(self) -> list[Collision]:
        return [c for c in self.collisions if c.involves_connected]

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "kinds": list(self.kinds),
            "include_r0": self.include_r0,
            "record_count": len(self.records),
            "collisions": [
                {
                    "n": c.n,
                    "kind": c.kind,
                    "fingerprint": c.fingerprint,
                    "members": list(c.members),
                    "involves_connected": c.involves_connected,
                }
                for c in self.collisions
            ],
        }


def _cycle_partitions(total: int) -> list[tuple[int, ...]]:
    """Multisets of cycle lengths >= 3 summing to total, non-increasing."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for k in range(min(remaining, largest), 2, -1):
            if remaining - k != 0 and remaining - k < 3:
                continue
            acc.append(k)
            rec(remaining - k, k, acc)
            acc.pop()

    rec(total, total, [])
    return out


def enumerate_candidates(n: int, include_r0: bool = True) -> list[FamilySpec]:
    """Every canonical graph with degree sequence (3, 3, 2, ..., 2) on n
    vertices: connected dumbbells/thetas plus unions of one smaller such
    graph with disjoint cycles."""
    if not (CENSUS_MIN_N <= n <= CENSUS_MAX_N):
        raise OutOfRange(f"census candidates defined for {CENSUS_MIN_N} <= n <= {CENSUS_MAX_N}, got {n}")
    out: list[FamilySpec] = list(bicyclic_specs(n, include_r0=include_r0))
    for core_n in range(4, n - 2):
        for core in bicyclic_specs(core_n, include_r0=include_r0):
            for parts in _cycle_partitions(n - core_n):
                out.append(DisjointUnion((core,) + tuple(Cycle(k) for k in parts)))
    return out


def spec_is_extension(spec: FamilySpec) -> bool:
    """True iff the spec contains a bridge-edge dumbbell (r = 0)."""
    if isinstance(spec, Dumbbell):
        return spec.r == 0
    if isinstance(spec, DisjointUnion):
        return any(spec_is_extension(part) for part in spec.parts)
    return False


def spec_is_connected_bicyclic(spec: FamilySpec) -> bool:
    return isinstance(spec, (Dumbbell, Theta))


def candidate_poly(spec: FamilySpec, kind: MatrixKind) -> IntPoly:
    """Polynomial of a candidate; unions multiply their components."""
    if isinstance(spec, DisjointUnion):
        poly = IntPoly.one()
        for part in spec.parts:
            poly = poly * perm_poly(generate(part), kind)
        return poly
    return perm_poly(generate(spec), kind)


def fingerprint(kind: str, n: int, coefficients: tuple[str, ...]) -> str:
    payload = f"{kind}:{n}:" + ",".join(coefficients)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def make_record(spec: FamilySpec, kind: MatrixKind) -> CensusRecord:
    n = spec_vertex_count(spec)
    coeffs = tuple(candidate_poly(spec, kind).to_decimal_strings())
    assert len(coeffs) == n + 1 and coeffs[-1] == "1"
    return CensusRecord(
        n=n,
        kind=kind.value,
        description=spec_label(spec),
        extension=spec_is_extension(spec),
        coefficients=coeffs,
        fingerprint=fingerprint(kind.value, n, coeffs),
    )


def run_census(
    n_min: int,
    n_max: int,
    kinds: tuple[MatrixKind, ...] = (MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN),
    include_r0: bool = True,
    threads: int = 1,
) -> CensusReport:
    """Compute all candidate records in the range and list exact collisions."""
    if n_min > n_max or not (CENSUS_MIN_N <= n_min and n_max <= CENSUS_MAX_N):
        raise OutOfRange(f"census range must lie in [{CENSUS_MIN_N}, {CENSUS_MAX_N}], got [{n_min}, {n_max}]")
    jobs = [
        (spec, kind)
        for n in range(n_min, n_max + 1)
        for kind in kinds
        for spec in enumerate_candidates(n, include_r0=include_r0)
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda job: make_record(*job), jobs))
    else:
        records = [make_record(*job) for job in jobs]
    records.sort(key=lambda r: (r.n, r.kind, r.fingerprint, r.description))

    by_fp: dict[tuple[int, str, str], list[CensusRecord]] = {}
    for rec in records:
        by_fp.setdefault((rec.n, rec.kind, rec.fingerprint), []).append(rec)
    specs_by_desc = {spec_label(s): s for (s, _) in jobs}
    collisions = []
    for (n, kind, fp), group in sorted(by_fp.items()):
        if len(group) < 2:
            continue
        # Hash grouping never decides: require exact coefficient equality.
        vectors = {rec.coefficients for rec in group}
        if len(vectors) != 1:
            raise AssertionError(f"fingerprint clash without coefficient equality at {fp}")
        members = tuple(rec.description for rec in group)
        involves = any(spec_is_connected_bicyclic(specs_by_desc[d]) for d in members)
        collisions.append(Collision(n=n, kind=kind, fingerprint=fp, members=members, involves_connected=involves))
    return CensusReport(
        n_min=n_min,
        n_max=n_max,
        kinds=tuple(k.value for k in kinds),
        include_r0=include_r0,
        records=tuple(records),
        collisions=tuple(collisions),
    )


def write_catalog(records, path) -> None:
    """JSONL, one record per line, already-sorted order preserved."""
    with open(path, "w", encoding="ascii") as fh:
        for rec in records:
            fh.write(rec.to_json())
            fh.write("\n")


def read_catalog(path) -> list[CensusRecord]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for i, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
                out.append(CensusRecord.from_dict(data))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise ParseError(i, str(exc)) from exc
    return out
