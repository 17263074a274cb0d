"""Exhaustive small-instance cross-checks between independent routes.

Each check pits a production algorithm against a brute-force oracle on a
small exhaustive range.  The CLI selftest verb runs them all and fails loudly
on any mismatch; the test suite reuses them at the acceptance bounds.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, NamedTuple

from .branching import cell_dimension, enumerate_paths, vertices_at_level
from .geometry import geometric_residue_equivalent, step_residues
from .modules import (simple_dimension, simple_dimension_by_alternating_sum,
                      simple_dimension_by_paths)
from .residues import (brute_force_linkage_classes, linkage_classes,
                       residue_vector)


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def check_step_residues(max_k: int = 7, max_n: int = 4) -> CheckResult:
    """Geometric step residues must equal content vectors at z = n."""
    count = 0
    for k in range(max_k + 1):
        for v in vertices_at_level(k):
            for t in enumerate_paths(v):
                for n in range(max_n + 1):
                    count += 1
                    if step_residues(t, n) != residue_vector(t, n):
                        return CheckResult(
                            "step_residues", False,
                            f"mismatch at path {t}, n={n}")
    return CheckResult("step_residues", True, f"{count} path/parameter pairs")


def check_geometric_equivalence(max_k: int = 6, max_n: int = 4) -> CheckResult:
    """Wall-interval test must match raw residue-vector equality."""
    count = 0
    for k in range(max_k + 1):
        paths = [t for v in vertices_at_level(k) for t in enumerate_paths(v)]
        for n in range(max_n + 1):
            vectors = {t: residue_vector(t, n) for t in paths}
            for s, t in combinations(paths, 2):
                count += 1
                if geometric_residue_equivalent(s, t, n) != (vectors[s] == vectors[t]):
                    return CheckResult(
                        "geometric_equivalence", False,
                        f"k={k}, n={n}: {s} vs {t}")
    return CheckResult("geometric_equivalence", True, f"{count} path pairs")


def check_linkage(max_k: int = 7, max_n: int = 4) -> CheckResult:
    """Block chains must reproduce the residue-vector linkage closure."""
    for k in range(max_k + 1):
        for n in range(max_n + 1):
            chains = {frozenset(c) for c in linkage_classes(k, n)}
            brute = {frozenset(c) for c in brute_force_linkage_classes(k, n)}
            if chains != brute:
                return CheckResult("linkage", False,
                                   f"k={k}, n={n}: {chains} vs {brute}")
    return CheckResult("linkage", True,
                       f"levels 0..{max_k}, n 0..{max_n}")


def check_simple_dimensions(max_k: int = 8, max_n: int = 6) -> CheckResult:
    """The three simple-dimension algorithms must agree everywhere."""
    count = 0
    for k in range(max_k + 1):
        for v in vertices_at_level(k):
            for n in range(max_n + 1):
                count += 1
                a = simple_dimension_by_paths(v, n)
                b = simple_dimension(v, n)
                c = simple_dimension_by_alternating_sum(v, n)
                if not a == b == c:
                    return CheckResult(
                        "simple_dimensions", False,
                        f"{v} at n={n}: paths {a}, restriction {b}, "
                        f"alternating {c}")
    return CheckResult("simple_dimensions", True, f"{count} vertex/parameter pairs")


def check_bell_identity(max_k: int = 10) -> CheckResult:
    """Sum of squared cell dimensions at level k is the k-th Bell number."""
    bell = [1]
    # Bell triangle
    rows = [[1]]
    for _ in range(max_k):
        prev = rows[-1]
        row = [prev[-1]]
        for x in prev:
            row.append(row[-1] + x)
        rows.append(row)
        bell.append(row[0])
    for k in range(max_k + 1):
        total = sum(cell_dimension(v) ** 2 for v in vertices_at_level(k))
        if total != bell[k]:
            return CheckResult("bell_identity", False,
                               f"level {k}: {total} != {bell[k]}")
    return CheckResult("bell_identity", True, f"levels 0..{max_k}")


ALL_CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_step_residues,
    check_geometric_equivalence,
    check_linkage,
    check_simple_dimensions,
    check_bell_identity,
)


def run_selftest() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
