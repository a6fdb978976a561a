"""Exact rational central arrangements and their linear algebra.

An arrangement is an ordered list of nonzero rational linear forms on
R^dim, each vanishing on a hyperplane through the origin.  The sign of a
form orients its hyperplane: the positive side of form a is {x : a(x) > 0},
so flipping the sign of a form flips that orientation.  Forms are stored
exactly as given (scale and orientation are observable); a primitive
integer copy of each form backs rank computations and feasibility tests.

Everything here is exact: coefficients are arbitrary-precision rationals
and rank is computed by fraction-free integer elimination.  No floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    DuplicateHyperplaneError,
    FormatError,
    IndexOutOfRangeError,
    MalformedRationalError,
    ZeroFormError,
)

PLUS = 1
MINUS = -1

Rational = Fraction
LinearForm = tuple[Fraction, ...]
IntRow = tuple[int, ...]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse "p", "-p" or "p/q" exactly; reject anything else."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise MalformedRationalError(f"not an exact rational: {text!r}")
    num, _, den = text.partition("/")
    if den:
        d = int(den)
        if d == 0:
            raise MalformedRationalError(f"zero denominator: {text!r}")
        return Fraction(int(num), d)
    return Fraction(int(num))


def format_rational(value: Fraction) -> str:
    return str(value)


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise MalformedRationalError(f"cannot interpret {value!r} as an exact rational")


def _primitive(form: LinearForm) -> IntRow:
    """Scale a rational form by a positive rational to a gcd-1 integer row."""
    den = lcm(*(c.denominator for c in form))
    ints = [int(c * den) for c in form]
    g = gcd(*ints)
    return tuple(v // g for v in ints)


def _axis_key(row: IntRow) -> IntRow:
    """Primitive row with the leading nonzero made positive.

    Two forms define the same hyperplane exactly when their keys agree.
    """
    lead = next(v for v in row if v)
    return row if lead > 0 else tuple(-v for v in row)


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement: dim, ordered forms, display labels."""

    dim: int
    forms: tuple[LinearForm, ...]
    labels: tuple[str, ...]
    primitive_rows: tuple[IntRow, ...] = field(
        init=False, compare=False, repr=False, default=()
    )

    def __post_init__(self):
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 1:
            raise DimensionMismatchError(f"dim must be a positive integer, got {self.dim!r}")
        if not self.forms:
            raise FormatError("an arrangement needs at least one hyperplane")
        for k, form in enumerate(self.forms):
            if len(form) != self.dim:
                raise DimensionMismatchError(
                    f"form {k} has {len(form)} coefficients, expected {self.dim}"
                )
            if all(c == 0 for c in form):
                raise ZeroFormError(f"form {k} is zero and defines no hyperplane")
        if len(self.labels) != len(self.forms):
            raise FormatError(
                f"{len(self.labels)} labels for {len(self.forms)} hyperplanes"
            )
        rows = tuple(_primitive(form) for form in self.forms)
        seen: dict[IntRow, int] = {}
        for k, row in enumerate(rows):
            key = _axis_key(row)
            if key in seen:
                raise DuplicateHyperplaneError(
                    f"forms {seen[key]} and {k} are proportional"
                )
            seen[key] = k
        object.__setattr__(self, "primitive_rows", rows)

    @property
    def n(self) -> int:
        return len(self.forms)

    def check_index(self, j: int) -> int:
        if not isinstance(j, int) or isinstance(j, bool) or not 0 <= j < self.n:
            raise IndexOutOfRangeError(f"hyperplane index {j!r} not in 0..{self.n - 1}")
        return j


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"H{k + 1}" for k in range(n))


def make_arrangement(dim: int, rows: Iterable[Iterable], labels=None) -> Arrangement:
    """Build an Arrangement from ints, strings or Fractions."""
    forms = tuple(tuple(_to_fraction(c) for c in row) for row in rows)
    if labels is None:
        labels = default_labels(len(forms))
    return Arrangement(dim=dim, forms=forms, labels=tuple(labels))


def builtin_braid(ell: int) -> Arrangement:
    """The arrangement x_i = x_j (i < j) in R^ell, forms x_i - x_j."""
    if ell < 2:
        raise ValueError(f"braid arrangement needs ell >= 2, got {ell}")
    rows = []
    labels = []
    for i in range(ell):
        for j in range(i + 1, ell):
            row = [0] * ell
            row[i] = 1
            row[j] = -1
            rows.append(row)
            labels.append(f"H{i + 1}{j + 1}")
    return make_arrangement(ell, rows, labels)


def builtin_boolean(d: int) -> Arrangement:
    """The d coordinate hyperplanes x_1, ..., x_d in R^d."""
    if d < 1:
        raise ValueError(f"boolean arrangement needs d >= 1, got {d}")
    rows = [[1 if c == k else 0 for c in range(d)] for k in range(d)]
    return make_arrangement(d, rows, [f"x{k + 1}" for k in range(d)])


def subarrangement(arr: Arrangement, indices: Sequence[int]) -> Arrangement:
    """Restriction to a subset of hyperplanes, in increasing index order."""
    idx = sorted({arr.check_index(j) for j in indices})
    if not idx:
        raise FormatError("a subarrangement needs at least one hyperplane")
    return Arrangement(
        dim=arr.dim,
        forms=tuple(arr.forms[j] for j in idx),
        labels=tuple(arr.labels[j] for j in idx),
    )


def flip_orientation(arr: Arrangement, j: int) -> Arrangement:
    """Same hyperplanes, with the j-th form negated (orientation flipped)."""
    j = arr.check_index(j)
    forms = list(arr.forms)
    forms[j] = tuple(-c for c in forms[j])
    return Arrangement(dim=arr.dim, forms=tuple(forms), labels=arr.labels)


def disjoint_union(a1: Arrangement, a2: Arrangement) -> Arrangement:
    """Concatenate two arrangements living on disjoint coordinate blocks."""
    if a1.dim != a2.dim:
        raise DimensionMismatchError("both factors must share the ambient dimension")
    support1 = {c for row in a1.primitive_rows for c, v in enumerate(row) if v}
    support2 = {c for row in a2.primitive_rows for c, v in enumerate(row) if v}
    if support1 & support2:
        raise ValueError("factors must use disjoint coordinate blocks")
    return Arrangement(
        dim=a1.dim,
        forms=a1.forms + a2.forms,
        labels=a1.labels + a2.labels,
    )


# ---------------------------------------------------------------------------
# JSON schema: {"dim": int, "forms": [["p", "-p", "p/q", ...], ...],
#               "labels": ["H1", ...]}  (labels optional on input)

def parse_arrangement(text) -> Arrangement:
    """Parse and validate an arrangement document."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top-level value must be an object")
    unknown = set(doc) - {"dim", "forms", "labels"}
    if unknown:
        raise FormatError(f"unknown keys: {sorted(unknown)}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise FormatError('"dim" must be an integer')
    forms_doc = doc.get("forms")
    if not isinstance(forms_doc, list) or not forms_doc:
        raise FormatError('"forms" must be a nonempty array')
    forms = []
    for row in forms_doc:
        if not isinstance(row, list):
            raise FormatError("each form must be an array of rational strings")
        forms.append(tuple(parse_rational(c) for c in row))
    labels = doc.get("labels")
    if labels is None:
        labels = default_labels(len(forms))
    elif not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise FormatError('"labels" must be an array of strings')
    return Arrangement(dim=dim, forms=tuple(forms), labels=tuple(labels))


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {
        "dim": arr.dim,
        "forms": [[format_rational(c) for c in form] for form in arr.forms],
        "labels": list(arr.labels),
    }


def serialize_arrangement(arr: Arrangement) -> str:
    """Canonical byte-stable serialization (reduced rationals, fixed layout)."""
    return json.dumps(arrangement_to_dict(arr), sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Fraction-free exact linear algebra.

EchelonBasis = tuple[tuple[int, IntRow], ...]  # (pivot column, row), sorted


def _gcd_reduce(row: list[int]) -> list[int]:
    g = gcd(*row)
    if g > 1:
        return [v // g for v in row]
    return row


def try_extend_basis(basis: EchelonBasis, row: Sequence[int]):
    """Insert an integer row into an echelon basis.

    Returns the extended basis, or None when the row is already in the span.
    """
    r = list(row)
    for pivot, brow in basis:
        coeff = r[pivot]
        if coeff:
            lead = brow[pivot]
            r = _gcd_reduce([x * lead - coeff * y for x, y in zip(r, brow)])
    for col, value in enumerate(r):
        if value:
            return tuple(sorted(basis + ((col, tuple(r)),)))
    return None


def matrix_rank(rows: Iterable[Sequence[int]]) -> int:
    basis: EchelonBasis = ()
    for row in rows:
        extended = try_extend_basis(basis, row)
        if extended is not None:
            basis = extended
    return len(basis)


def rank(arr: Arrangement, subset: Iterable[int]) -> int:
    """Rank of the forms indexed by subset; rank of the empty set is 0."""
    idx = sorted({arr.check_index(j) for j in subset})
    return matrix_rank(arr.primitive_rows[j] for j in idx)


def full_rank(arr: Arrangement) -> int:
    return matrix_rank(arr.primitive_rows)
