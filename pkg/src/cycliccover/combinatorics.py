"""Exact integer functions controlling how much positivity a covering eats.

The two decision criteria for a degree-d cyclic covering consume the twists
L, L-M, ..., L-(d-1)M.  For the jet criterion the twist L-qM must carry jet
order k-q.  For the very-ampleness criterion the required order is the
subtler quantity sigma(k, d, q) built from

    tau(k, l)   = k - floor(k/l) - l + gamma(k, l) + 1
    gamma(k, l) = 1 if l divides k else 0

via a maximum of tau(k+1, l) over the finite range q+1 <= l <= min(d, k+1).

Everything here is plain integer arithmetic (Python ints, so no overflow)
and is safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Literal, Tuple

Kind = Literal["jet", "very"]


def gamma(k: int, ell: int) -> int:
    """Divisibility indicator: 1 if ell | k, else 0."""
    _require_positive(k=k, ell=ell)
    return 1 if k % ell == 0 else 0


def tau(k: int, ell: int) -> int:
    """k - floor(k/ell) - ell + gamma(k, ell) + 1; may be <= 0 for large ell."""
    _require_positive(k=k, ell=ell)
    return k - k // ell - ell + gamma(k, ell) + 1


def sigma(k: int, d: int, q: int) -> int:
    """Required very-ampleness order of the q-th twist for target order k.

    Defined as k for q = 0, and otherwise as

        max{ tau(k+1, l) : q+1 <= l <= min(d, k+1) } - 1.

    Only the domain the criteria actually query is legal:
    0 <= q <= min(k, d-1).  Anything else raises ValueError.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if d < 2:
        raise ValueError(f"covering degree d must be >= 2, got {d}")
    if not 0 <= q <= min(k, d - 1):
        raise ValueError(
            f"q={q} outside the criteria domain 0..min(k, d-1)="
            f"{min(k, d - 1)} for k={k}, d={d}"
        )
    if q == 0:
        return k
    top = min(d, k + 1)
    return max(tau(k + 1, ell) for ell in range(q + 1, top + 1)) - 1


@dataclass(frozen=True)
class SigmaTable:
    """All sigma(k, d, q) values with q >= 1 for a fixed degree d.

    Entries exist exactly for 1 <= q <= min(k, d-1), 0 <= k <= k_max.
    """

    d: int
    k_max: int
    entries: Dict[Tuple[int, int], int]

    def rows(self) -> list[int]:
        """Row indices q in ascending order (empty when k_max = 0)."""
        return list(range(1, min(self.k_max, self.d - 1) + 1))

    def row(self, q: int) -> list[tuple[int, int]]:
        """(k, value) pairs of row q, k ascending."""
        return [((k), self.entries[(q, k)])
                for k in range(self.k_max + 1) if (q, k) in self.entries]


def sigma_table(d: int, k_max: int) -> SigmaTable:
    """Tabulate sigma(k, d, q) over all legal pairs with k <= k_max."""
    if d < 2:
        raise ValueError(f"covering degree d must be >= 2, got {d}")
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    entries: Dict[Tuple[int, int], int] = {}
    for k in range(k_max + 1):
        for q in range(1, min(k, d - 1) + 1):
            entries[(q, k)] = sigma(k, d, q)
    return SigmaTable(d=d, k_max=k_max, entries=entries)


@dataclass(frozen=True)
class RequiredProfile:
    """Orders the twists L-qM must carry so the pullback reaches order k.

    requirements[q] is k-q for the jet criterion, and sigma(k, d, q) for
    the very-ampleness criterion (with requirements[0] = k).
    """

    kind: Kind
    k: int
    d: int
    requirements: Tuple[int, ...]


def required_profile(kind: Kind, k: int, d: int) -> RequiredProfile:
    """Requirement list indexed by q = 0..min(k, d-1)."""
    if kind not in ("jet", "very"):
        raise ValueError(f"kind must be 'jet' or 'very', got {kind!r}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if d < 2:
        raise ValueError(f"covering degree d must be >= 2, got {d}")
    qs = range(min(k, d - 1) + 1)
    if kind == "jet":
        reqs = tuple(k - q for q in qs)
    else:
        reqs = tuple(sigma(k, d, q) for q in qs)
    return RequiredProfile(kind=kind, k=k, d=d, requirements=reqs)


def _require_positive(**named: int) -> None:
    for name, value in named.items():
        if value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value}")
