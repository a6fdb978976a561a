"""Chambers as exactly-decided sign vectors.

A chamber of an arrangement is addressed by the word of signs it induces
on the oriented forms, one strict sign per hyperplane.  Realizability of
an address is decided exactly (see feasibility).  Chamber ids are the
ranks of the addresses in the canonical order: lexicographic with + < -,
so listings are reproducible across runs and schedules.

Addresses render as strings over "+-", e.g. "+-+".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from . import matroid
from .config import DEFAULT_LIMITS, Limits
from .core import MINUS, PLUS, Arrangement, subarrangement
from .errors import (
    InternalInconsistencyError,
    LengthMismatchError,
    ResourceLimitError,
)
from .feasibility import dot, feasible_point

SignVector = tuple[int, ...]


def signs_to_str(signs: Sequence[int]) -> str:
    return "".join("+" if s == PLUS else "-" for s in signs)


def str_to_signs(text: str) -> SignVector:
    out = []
    for ch in text:
        if ch == "+":
            out.append(PLUS)
        elif ch == "-":
            out.append(MINUS)
        else:
            raise ValueError(f"sign characters are '+' and '-', got {ch!r}")
    return tuple(out)


def negate(signs: SignVector) -> SignVector:
    return tuple(-s for s in signs)


def canonical_key(signs: SignVector) -> tuple[int, ...]:
    # lexicographic with + < -
    return tuple(0 if s == PLUS else 1 for s in signs)


@dataclass(frozen=True, slots=True)
class Chamber:
    id: int
    address: SignVector


class ChamberSet:
    """All chambers of an arrangement, canonically ordered and indexed."""

    def __init__(self, arrangement: Arrangement, addresses: Sequence[SignVector]):
        ordered = sorted(addresses, key=canonical_key)
        self.arrangement = arrangement
        self.chambers = tuple(Chamber(i, a) for i, a in enumerate(ordered))
        self.index = {c.address: c.id for c in self.chambers}
        if len(self.index) != len(self.chambers):
            raise InternalInconsistencyError("duplicate chamber addresses")

    def __len__(self) -> int:
        return len(self.chambers)

    def __iter__(self) -> Iterator[Chamber]:
        return iter(self.chambers)

    def __getitem__(self, chamber_id: int) -> Chamber:
        return self.chambers[chamber_id]

    def contains_address(self, signs: SignVector) -> bool:
        return tuple(signs) in self.index

    def by_address(self, signs: SignVector) -> Chamber:
        return self.chambers[self.index[tuple(signs)]]

    def antipode(self, chamber: Chamber) -> Chamber:
        return self.by_address(negate(chamber.address))


def _check_length(arr: Arrangement, signs: Sequence[int]) -> SignVector:
    signs = tuple(signs)
    if len(signs) != arr.n:
        raise LengthMismatchError(f"sign vector of length {len(signs)} for n={arr.n}")
    if any(s not in (PLUS, MINUS) for s in signs):
        raise ValueError("sign entries must be +1 or -1")
    return signs


def witness_point(arr: Arrangement, signs: Sequence[int]):
    """A rational point realizing the sign vector, or None."""
    signs = _check_length(arr, signs)
    return feasible_point(arr.primitive_rows, signs)


def is_realizable(arr: Arrangement, signs: Sequence[int]) -> bool:
    return witness_point(arr, signs) is not None


def enumerate_chambers(arr: Arrangement, limits: Limits = DEFAULT_LIMITS) -> ChamberSet:
    """All realizable sign vectors, built one hyperplane at a time.

    Each chamber of the first k-1 hyperplanes carries a rational witness
    point; the side the witness is on extends for free, the other side is
    decided by one exact feasibility test.
    """
    rows = arr.primitive_rows
    origin = (Fraction(0),) * arr.dim
    states: list[tuple[SignVector, tuple[Fraction, ...]]] = [((), origin)]
    for k in range(arr.n):
        prefix = rows[: k + 1]
        row = rows[k]
        next_states = []
        for address, point in states:
            value = dot(row, point)
            if value != 0:
                side = PLUS if value > 0 else MINUS
                next_states.append((address + (side,), point))
                candidates = (-side,)
            else:
                candidates = (PLUS, MINUS)
            for side in candidates:
                extended = address + (side,)
                witness = feasible_point(prefix, extended)
                if witness is not None:
                    next_states.append((extended, witness))
        if len(next_states) > limits.max_chambers:
            raise ResourceLimitError(
                f"more than {limits.max_chambers} chambers; raise the cap to proceed"
            )
        states = next_states
    return ChamberSet(arr, [address for address, _ in states])


def enumerate_addresses_bruteforce(
    arr: Arrangement, limits: Limits = DEFAULT_LIMITS
) -> list[SignVector]:
    """Realizable addresses by testing all 2^n sign vectors; oracle twin
    of enumerate_chambers."""
    if arr.n > limits.max_bruteforce_n:
        raise ResourceLimitError(f"2^{arr.n} sign vectors exceed the brute-force cap")
    found = [
        signs
        for signs in product((PLUS, MINUS), repeat=arr.n)
        if is_realizable(arr, signs)
    ]
    return sorted(found, key=canonical_key)


def epsilon(arr: Arrangement, j: int, sigma: int, chamber: Chamber) -> int:
    """Side report of one chamber for hyperplane j, under orientation sigma."""
    j = arr.check_index(j)
    return sigma * chamber.address[j]


def epsilon_tuple(
    arr: Arrangement, j: int, sigma: int, chambers: Sequence[Chamber]
) -> SignVector:
    return tuple(epsilon(arr, j, sigma, c) for c in chambers)


def circuit_missing_signs(
    arr: Arrangement, indices: Sequence[int], limits: Limits = DEFAULT_LIMITS
) -> frozenset[SignVector]:
    """The two unrealizable addresses of a circuit subarrangement.

    A circuit of size v has exactly 2^v - 2 chambers, so exactly one
    antipodal pair of addresses is missing.
    """
    matroid.require_circuit(arr, indices)
    sub = subarrangement(arr, indices)
    realized = enumerate_chambers(sub, limits).index
    missing = [
        signs
        for signs in product((PLUS, MINUS), repeat=sub.n)
        if signs not in realized
    ]
    if len(missing) != 2 or missing[0] != negate(missing[1]):
        raise InternalInconsistencyError(
            "a circuit must miss exactly one antipodal pair of addresses"
        )
    return frozenset(missing)


# ---------------------------------------------------------------------------
# Braid arrangements: chambers are total orders of the coordinates.

def braid_permutation(ell: int, address: SignVector) -> tuple[int, ...]:
    """Coordinates sorted increasingly, as encoded by a braid address.

    Entry + for the pair (i, j), i < j, means x_i > x_j.  Returns 0-based
    coordinates (p_1, ..., p_ell) with x_{p_1} < ... < x_{p_ell}.
    """
    if len(address) != ell * (ell - 1) // 2:
        raise LengthMismatchError("address length does not match the braid size")
    wins = [0] * ell
    pos = 0
    for i in range(ell):
        for j in range(i + 1, ell):
            if address[pos] == PLUS:
                wins[i] += 1
            else:
                wins[j] += 1
            pos += 1
    if sorted(wins) != list(range(ell)):
        raise InternalInconsistencyError(
            "address encodes a cyclic comparison pattern, not a total order"
        )
    return tuple(sorted(range(ell), key=lambda c: wins[c]))


def braid_order_label(perm: Sequence[int]) -> str:
    """Render a coordinate order as e.g. "x1<x3<x2"."""
    return "<".join(f"x{p + 1}" for p in perm)
