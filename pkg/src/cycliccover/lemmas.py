"""Brute-force oracles for the two combinatorial lemmas behind sigma.

The "alg" lemma bounds the colength of an intersection of ideals in a local
ring: if ideals I_1, ..., I_l (l >= 2) inside the maximal ideal have total
colength k and I_1 has the largest colength, then

    colength(I_2 cap ... cap I_l) <= tau(k, l).

We check it on the concrete model of monomial ideals in two variables,
where an ideal is a staircase (a downward-closed set of lattice exponents,
its standard monomials), colength is the cell count, and the standard
monomials of an intersection are the union of the staircases.  This is
desk-scale evidence, not a proof for general local rings; reports say so.

The "num" lemma is a pure integer inequality.  We verify its reduced form

    sum_{i<=m} tau(K_i, l_i) + sum_{i>m} floor(K_i / (q+1))
        <= tau(K, max(l_1, ..., l_m)),      K = sum of all K_i,

which is the inequality the sigma bookkeeping actually relies on (the
max-range in the headline statement has an ambiguous index set).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

from .combinatorics import tau
from .errors import ResourceBudgetError

DEFAULT_COLENGTH_CAP = 12
DEFAULT_TUPLE_BUDGET = 10**7

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Staircase:
    """Downward-closed finite set of lattice points (i, j), i, j >= 0.

    Models the standard monomials of a monomial ideal inside the maximal
    ideal of a 2-variable local ring; the colength of the ideal is the
    number of cells.  Must be non-empty (the ideal is proper).
    """

    cells: frozenset

    def __post_init__(self):
        if not self.cells:
            raise ValueError("staircase must contain at least the origin")
        for (i, j) in self.cells:
            if i < 0 or j < 0:
                raise ValueError(f"negative cell {(i, j)}")
            if i > 0 and (i - 1, j) not in self.cells:
                raise ValueError(f"not downward-closed at {(i, j)}")
            if j > 0 and (i, j - 1) not in self.cells:
                raise ValueError(f"not downward-closed at {(i, j)}")

    @property
    def colength(self) -> int:
        return len(self.cells)

    @classmethod
    def from_partition(cls, parts: Iterable[int]) -> "Staircase":
        """Columns of heights parts[0] >= parts[1] >= ..."""
        cells = {(i, j) for i, h in enumerate(parts) for j in range(h)}
        return cls(frozenset(cells))


def enumerate_staircases(colength: int, cap: int = DEFAULT_COLENGTH_CAP) -> List[Staircase]:
    """All staircases of the given colength; there are p(colength) of them."""
    if colength < 1:
        raise ValueError(f"colength must be >= 1, got {colength}")
    if colength >= cap:
        raise ResourceBudgetError(
            f"colength {colength} >= enumeration cap {cap}"
        )
    return [Staircase.from_partition(p) for p in _partitions(colength)]


def intersection_colength(staircases: List[Staircase]) -> int:
    """Colength of the intersection ideal: size of the union of staircases."""
    if not staircases:
        raise ValueError("need at least one staircase")
    union: set = set()
    for s in staircases:
        union |= s.cells
    return len(union)


@dataclass
class LemmaReport:
    """Outcome of one exhaustive lemma run over a parameter box."""

    lemma_id: str  # 'alg' | 'num'
    parameter_box: Dict[str, int]
    instances_checked: int
    max_slack: int | None  # min over instances of (bound - observed)
    counterexamples: List[dict] = field(default_factory=list)
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def bound_attained(self) -> bool:
        return self.max_slack == 0

    def to_record(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "parameter_box": dict(self.parameter_box),
            "instances_checked": self.instances_checked,
            "max_slack": self.max_slack,
            "counterexamples": list(self.counterexamples),
            "passed": self.passed,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [
            f"lemma {self.lemma_id}: {'PASS' if self.passed else 'FAIL'}",
            "box " + " ".join(f"{k}={v}" for k, v in sorted(self.parameter_box.items())),
            f"instances checked: {self.instances_checked}",
            f"min slack (bound - observed): {self.max_slack}",
        ]
        for c in self.counterexamples:
            lines.append(f"counterexample: {c}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


def check_lemma_alg(
    k: int,
    ell: int,
    budget: int = DEFAULT_TUPLE_BUDGET,
    cap: int = DEFAULT_COLENGTH_CAP,
) -> LemmaReport:
    """Exhaust all staircase tuples (I_1, ..., I_ell) with total colength k.

    I_1 is forced to have maximal colength by sorting the colength
    partition descending.  The shape of I_1 never enters the checked
    quantity (only I_2, ..., I_ell are intersected), so shapes are
    enumerated for slots 2..ell while I_1 contributes its p(c_1) choices
    to the instance count only.
    """
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    if k < ell:
        raise ValueError(f"need k >= ell (each ideal has colength >= 1), got k={k}")

    bound = tau(k, ell)
    checked = 0
    min_slack: int | None = None
    counterexamples: List[dict] = []

    for colengths in _partitions_into(k, ell):
        # colengths is descending, so colengths[0] is maximal: hypothesis holds.
        shape_lists = [enumerate_staircases(c, cap=cap) for c in colengths]
        n_first = len(shape_lists[0])
        combos = 1
        for lst in shape_lists[1:]:
            combos *= len(lst)
        if checked + n_first * combos > budget:
            raise ResourceBudgetError(
                f"tuple budget {budget} exceeded at colengths {colengths}",
                partial_report=LemmaReport(
                    lemma_id="alg",
                    parameter_box={"k": k, "ell": ell},
                    instances_checked=checked,
                    max_slack=min_slack,
                    counterexamples=counterexamples,
                    notes=("partial: budget exhausted",),
                ),
            )
        for rest in itertools.product(*shape_lists[1:]):
            observed = intersection_colength(list(rest))
            slack = bound - observed
            if min_slack is None or slack < min_slack:
                min_slack = slack
            if slack < 0:
                counterexamples.append({
                    "colengths": list(colengths),
                    "staircases": [sorted(s.cells) for s in rest],
                    "observed": observed,
                    "bound": bound,
                })
            checked += n_first

    return LemmaReport(
        lemma_id="alg",
        parameter_box={"k": k, "ell": ell},
        instances_checked=checked,
        max_slack=min_slack,
        counterexamples=counterexamples,
        notes=(
            "model: monomial ideals in 2 variables (staircases); "
            "evidence for the local-ring statement, not a proof",
        ),
    )


def check_lemma_num(
    max_m: int,
    max_K: int,
    max_ell: int,
    max_q: int,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> LemmaReport:
    """Exhaustively verify the reduced integer inequality over a box.

    Ranges: 1 <= m <= r <= max_m, 1 <= K_i <= max_K, 2 <= l_i <= max_ell,
    1 <= q <= max_q.  Both sides are symmetric under permuting the
    (K_i, l_i) pairs and the tail K_i, so multisets are enumerated.
    """
    for name, v in (("max_m", max_m), ("max_K", max_K),
                    ("max_ell", max_ell), ("max_q", max_q)):
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")
    if max_ell < 2:
        raise ValueError(f"max_ell must be >= 2 (each l_i >= 2), got {max_ell}")

    box = {"max_m": max_m, "max_K": max_K, "max_ell": max_ell, "max_q": max_q}
    pairs = [(K, l) for K in range(1, max_K + 1) for l in range(2, max_ell + 1)]
    checked = 0
    min_slack: int | None = None
    counterexamples: List[dict] = []

    def note_instance(lhs: int, rhs: int, witness: dict) -> None:
        nonlocal min_slack
        slack = rhs - lhs
        if min_slack is None or slack < min_slack:
            min_slack = slack
        if slack < 0:
            counterexamples.append(witness | {"lhs": lhs, "rhs": rhs})

    for m in range(1, max_m + 1):
        for head in itertools.combinations_with_replacement(pairs, m):
            head_sum = sum(tau(K, l) for K, l in head)
            head_K = sum(K for K, _ in head)
            ell = max(l for _, l in head)
            for r in range(m, max_m + 1):
                for tail in itertools.combinations_with_replacement(
                        range(1, max_K + 1), r - m):
                    K = head_K + sum(tail)
                    rhs = tau(K, ell)
                    q_range = range(1, max_q + 1) if tail else (1,)
                    for q in q_range:
                        lhs = head_sum + sum(Ki // (q + 1) for Ki in tail)
                        checked += 1
                        if checked > budget:
                            raise ResourceBudgetError(
                                f"instance budget {budget} exceeded",
                                partial_report=LemmaReport(
                                    lemma_id="num",
                                    parameter_box=box,
                                    instances_checked=checked - 1,
                                    max_slack=min_slack,
                                    counterexamples=counterexamples,
                                    notes=("partial: budget exhausted",),
                                ),
                            )
                        note_instance(lhs, rhs, {
                            "head": [list(p) for p in head],
                            "tail": list(tail),
                            "q": q,
                        })

    return LemmaReport(
        lemma_id="num",
        parameter_box=box,
        instances_checked=checked,
        max_slack=min_slack,
        counterexamples=counterexamples,
        notes=("reduced form: rhs is tau(sum K_i, max l_i over the head)",),
    )


def _partitions(n: int) -> List[Tuple[int, ...]]:
    """Partitions of n as descending tuples."""
    return list(_partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def _partitions_into(n: int, parts: int):
    """Partitions of n into exactly `parts` positive parts, descending."""
    for p in _partitions_bounded(n, n):
        if len(p) == parts:
            yield p
