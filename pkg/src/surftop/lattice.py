"""Exact linear algebra for symmetric integer bilinear forms.

Everything here runs over arbitrary-precision integers (and exact
rationals where division is unavoidable); no floating point is used
anywhere. A form is carried by its Gram matrix in some integral basis,
and all derived quantities (determinant, signature, parity) are basis
invariants or computed by explicit congruence.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric n x n integer matrix; rank 0 (empty form) is allowed."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ValueError("Gram matrix entries must be integers")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows) -> "GramMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [list(row) for row in self.entries]}

    @classmethod
    def from_dict(cls, obj) -> "GramMatrix":
        if not isinstance(obj, dict):
            raise ValueError("Gram object must be a mapping")
        if set(obj) != {"n", "entries"}:
            raise ValueError("Gram object must have exactly the fields 'n' and 'entries'")
        n, entries = obj["n"], obj["entries"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("'n' must be a non-negative integer")
        if not isinstance(entries, list) or len(entries) != n:
            raise ValueError("'entries' must be a list of n rows")
        if any(not isinstance(row, list) for row in entries):
            raise ValueError("'entries' rows must be lists")
        return cls(tuple(tuple(row) for row in entries))


@dataclass(frozen=True)
class FormInvariants:
    """Congruence invariants of a symmetric integer form.

    For nondegenerate forms rank = b_plus + b_minus and the determinant
    sign is (-1)**b_minus; degenerate forms report b_plus + b_minus < rank.
    """

    rank: int
    b_plus: int
    b_minus: int
    signature: int
    parity: Parity
    determinant: int

    def __post_init__(self):
        if min(self.rank, self.b_plus, self.b_minus) < 0:
            raise ValueError("rank and b+/b- must be non-negative")
        if self.signature != self.b_plus - self.b_minus:
            raise ValueError("signature must equal b_plus - b_minus")
        inertia = self.b_plus + self.b_minus
        if self.determinant != 0:
            if inertia != self.rank:
                raise ValueError("nondegenerate form needs b_plus + b_minus = rank")
            if (self.determinant > 0) != (self.b_minus % 2 == 0):
                raise ValueError("determinant sign must be (-1)**b_minus")
        elif inertia >= self.rank and self.rank > 0:
            raise ValueError("degenerate form needs b_plus + b_minus < rank")


def diag(*values: int) -> GramMatrix:
    """Diagonal form <v1> + <v2> + ... as a Gram matrix."""
    n = len(values)
    return GramMatrix(
        tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n))
    )


def block_diag(*blocks: GramMatrix) -> GramMatrix:
    """Orthogonal direct sum of Gram matrices."""
    n = sum(b.n for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.n
    return GramMatrix.from_rows(rows)


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: Bareiss guarantees prev | (a_ij*a_kk - a_ik*a_kj)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(m: GramMatrix) -> int:
    """Exact determinant; the empty form has determinant 1."""
    return _bareiss_det([list(r) for r in m.entries])


def parity(m: GramMatrix) -> Parity:
    """EVEN iff every diagonal entry is even.

    Off-diagonal terms contribute doubly to Q(x,x), so this is equivalent
    to Q(x,x) being even for all integer vectors x. The empty form is EVEN.
    """
    if all(m.entries[i][i] % 2 == 0 for i in range(m.n)):
        return Parity.EVEN
    return Parity.ODD


def is_unimodular(m: GramMatrix) -> bool:
    return determinant(m) in (1, -1)


def _congruence_signs(m: GramMatrix) -> tuple[int, int]:
    """Count positive and negative diagonal entries after symmetric
    congruence diagonalization over exact rationals (Sylvester's law).

    A zero pivot with a nonzero off-diagonal entry in its row is repaired
    by adding +/- that row and column into the pivot row and column; the
    sign is chosen so the new pivot is nonzero (at least one choice works
    since 2 is invertible in Q). A fully zero pivot row is a kernel
    direction and contributes to neither count.
    """
    n = m.n
    a = [[Fraction(v) for v in row] for row in m.entries]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if j is None:
                continue
            s = 1 if 2 * a[k][j] + a[j][j] != 0 else -1
            for t in range(n):
                a[k][t] += s * a[j][t]
            for t in range(n):
                a[t][k] += s * a[t][j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f == 0:
                continue
            for t in range(n):
                a[i][t] -= f * a[k][t]
            for t in range(n):
                a[t][i] -= f * a[t][k]
    return pos, neg


def invariants(m: GramMatrix) -> FormInvariants:
    """Full invariant tuple (rank, b+, b-, signature, parity, determinant)."""
    pos, neg = _congruence_signs(m)
    return FormInvariants(
        rank=m.n,
        b_plus=pos,
        b_minus=neg,
        signature=pos - neg,
        parity=parity(m),
        determinant=determinant(m),
    )


DEFAULT_ENTRY_CAP = 10**6


def random_unimodular_transform(
    m: GramMatrix, seed: int, steps: int, max_entry: int = DEFAULT_ENTRY_CAP
) -> GramMatrix:
    """Congruent matrix P^T m P for a seed-determined unimodular P.

    P is a product of at most `steps` elementary integer operations
    (add +/- one row into another with the matching column operation,
    swap two basis vectors, negate one); an addition step that would push
    any entry beyond max_entry in absolute value is skipped, so entry
    growth stays bounded. steps = 0 returns m unchanged.
    """
    n = m.n
    if n == 0 or steps == 0:
        return m
    rng = random.Random(seed)
    a = [list(row) for row in m.entries]
    # additions do the real mixing; swaps and negations only reshuffle
    kinds = ("add", "add", "add", "swap", "negate") if n >= 2 else ("negate",)
    for _ in range(steps):
        kind = rng.choice(kinds)
        if kind == "negate":
            i = rng.randrange(n)
            for t in range(n):
                a[i][t] = -a[i][t]
            for t in range(n):
                a[t][i] = -a[t][i]
        elif kind == "swap":
            i, j = rng.sample(range(n), 2)
            a[i], a[j] = a[j], a[i]
            for t in range(n):
                a[t][i], a[t][j] = a[t][j], a[t][i]
        else:
            i, j = rng.sample(range(n), 2)
            s = rng.choice((1, -1))
            b = [r[:] for r in a]
            for t in range(n):
                b[i][t] += s * b[j][t]
            for t in range(n):
                b[t][i] += s * b[t][j]
            if any(abs(v) > max_entry for r in b for v in r):
                continue
            a = b
    return GramMatrix.from_rows(a)


def brute_force_isometry(
    a: GramMatrix, b: GramMatrix, bound: int
) -> tuple[tuple[int, ...], ...] | None:
    """Exhaustive search for P with P^T a P = b and det P = +/-1.

    Searches integer matrices with entries in [-bound, bound], filling
    columns left to right in lexicographic entry order and pruning any
    partial column set that already violates the target Gram products.
    Returns the first complete match (a tuple of rows), or None when no
    matrix in range works. Intended for rank <= 3 and small bounds.
    """
    n = a.n
    if b.n != n:
        raise ValueError("forms must have equal rank")
    if n == 0:
        return ()
    candidates = list(itertools.product(range(-bound, bound + 1), repeat=n))
    ae = a.entries
    be = b.entries

    def a_times(v):
        return [sum(ae[r][s] * v[s] for s in range(n)) for r in range(n)]

    cols: list[tuple[int, ...]] = []
    a_cols: list[list[int]] = []

    def extend(i: int):
        for v in candidates:
            ok = True
            for j in range(i):
                if sum(a_cols[j][r] * v[r] for r in range(n)) != be[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            av = a_times(v)
            if sum(av[r] * v[r] for r in range(n)) != be[i][i]:
                continue
            cols.append(v)
            a_cols.append(av)
            if i + 1 == n:
                rows = [[cols[c][r] for c in range(n)] for r in range(n)]
                if _bareiss_det(rows) in (1, -1):
                    return tuple(tuple(r) for r in rows)
            else:
                found = extend(i + 1)
                if found is not None:
                    return found
            cols.pop()
            a_cols.pop()
        return None

    return extend(0)
