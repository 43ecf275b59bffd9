"""Exact point counting for explicit surface models over small finite fields.

Fields GF(p^k) are built for k <= 3 with a deterministic irreducible
modulus; elements are coefficient tuples and all arithmetic is exact.
Counting is always direct enumeration of normalized projective
representatives (first nonzero coordinate 1); closed forms such as
(q+1)^2 for P1 x P1 are asserted in tests, never used as the
implementation. Zeta data is carried extensionally as count sequences
over q = p, p^2, p^3.

Enumeration is desk-scale by design: extension degrees stop at 3 and q
is capped (default 343). Smoothness of user-supplied forms mod p is not
verified; Weil-bound checks are authoritative only for the shipped
models at their good primes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classification import class_to_dict
from .errors import NotPrimeError, UnsupportedDegreeError, ZeroFormError
from .surfaces import catalog_lookup, compute_invariants, homeomorphic, intersection_form_class

DEFAULT_MAX_Q = 343


def is_prime(n: int) -> bool:
    """Trial division; plenty for the desk-scale characteristics used here."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    """GF(p^k) with elements as length-k coefficient tuples over Z/p.

    The tuple (c0, ..., c_{k-1}) stands for c0 + c1 x + ... modulo a
    monic irreducible of degree k (k = 1 needs no modulus). Elements are
    immutable and hashable; the field object holds no mutable state.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, q={self.q})"

    def from_int(self, a: int) -> tuple[int, ...]:
        return (a % self.p,) + (0,) * (self.k - 1)

    def elements(self):
        """All q elements, coefficient tuples in lexicographic order."""
        return itertools.product(range(self.p), repeat=self.k)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        raw = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    raw[i + j] += x * y
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = raw[i] % p
            if c:
                base = i - k
                for t in range(k + 1):
                    raw[base + t] -= c * mod[t]
            raw[i] = 0
        return tuple(v % p for v in raw[:k])

    def pow(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponent; use inv")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.q - 2)


def _has_root(coeffs: tuple[int, ...], p: int) -> bool:
    for a in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * a + c) % p
        if acc == 0:
            return True
    return False


def build_field(p: int, k: int) -> FiniteField:
    """Deterministic field constructor.

    For k >= 2 the modulus is the first monic irreducible of degree k in
    lexicographic order of its low coefficient tuple (c0, ..., c_{k-1});
    irreducibility for degree <= 3 is exactly the absence of roots.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not 1 <= k <= 3:
        raise UnsupportedDegreeError(f"extension degree {k} outside 1..3")
    if k == 1:
        return FiniteField(p, 1, None)
    for tail in itertools.product(range(p), repeat=k):
        candidate = tail + (1,)
        if not _has_root(candidate, p):
            return FiniteField(p, k, candidate)
    raise AssertionError("unreachable: irreducibles of every degree exist")


@dataclass(frozen=True)
class PointCount:
    variety: str
    q: int
    count: int


@dataclass(frozen=True)
class ZetaData:
    """Counts of one variety over q = p, p^2, ... (extensional zeta data)."""

    variety: str
    p: int
    counts: tuple[PointCount, ...]

    def __post_init__(self):
        qs = [c.q for c in self.counts]
        if qs != sorted(set(qs)):
            raise ValueError("counts must be ordered by strictly increasing q")
        if any(c.variety != self.variety for c in self.counts):
            raise ValueError("counts must all concern the same variety")


def projective_points(field: FiniteField, n: int):
    """Normalized representatives of P^n: first nonzero coordinate is 1."""
    one = field.one
    zero = field.zero
    for pivot in range(n + 1):
        prefix = (zero,) * pivot + (one,)
        for tail in itertools.product(
            itertools.product(range(field.p), repeat=field.k), repeat=n - pivot
        ):
            yield prefix + tail


def _check_scale(field: FiniteField, max_q: int):
    if field.q > max_q:
        raise ValueError(
            f"q = {field.q} exceeds the enumeration cap {max_q}; raise max_q to force it"
        )


def count_p1xp1(field: FiniteField, max_q: int = DEFAULT_MAX_Q) -> PointCount:
    """Points of P1 x P1 by direct enumeration of representative pairs."""
    _check_scale(field, max_q)
    line = list(projective_points(field, 1))
    n = sum(1 for _pair in itertools.product(line, line))
    return PointCount(variety="P1xP1", q=field.q, count=n)


def count_blowup_p2(field: FiniteField, max_q: int = DEFAULT_MAX_Q) -> PointCount:
    """Points of the blowup of P2 at [1:0:0], counted on its incidence model.

    The model is {([x0:x1:x2], [y0:y1]) : x1 y1 = x2 y0} inside P2 x P1.
    """
    _check_scale(field, max_q)
    n = 0
    lines = list(projective_points(field, 1))
    for x in projective_points(field, 2):
        x1, x2 = x[1], x[2]
        for y in lines:
            if field.mul(x1, y[1]) == field.mul(x2, y[0]):
                n += 1
    return PointCount(variety="Bl1P2", q=field.q, count=n)


def count_hypersurface_p3(
    coeffs: dict[tuple[int, int, int, int], int],
    field: FiniteField,
    variety: str = "hypersurface",
    max_q: int = DEFAULT_MAX_Q,
) -> PointCount:
    """Zeros in P3 of a homogeneous integer form, by full enumeration.

    coeffs maps exponent quadruples to integer coefficients; they are
    reduced mod p, and a form vanishing identically mod p is refused.
    """
    _check_scale(field, max_q)
    degrees = {sum(e) for e in coeffs}
    if len(degrees) > 1:
        raise ValueError("form is not homogeneous")
    if any(len(e) != 4 or min(e) < 0 for e in coeffs):
        raise ValueError("exponents must be quadruples of non-negative integers")
    reduced = {e: c % field.p for e, c in coeffs.items() if c % field.p}
    if not reduced:
        raise ZeroFormError("form vanishes identically mod p")
    terms = [(e, field.from_int(c)) for e, c in sorted(reduced.items())]
    one = field.one
    zero = field.zero
    pow_cache: dict[tuple, tuple] = {}

    def power(x, e):
        if e == 0:
            return one
        if e == 1:
            return x
        key = (x, e)
        v = pow_cache.get(key)
        if v is None:
            v = field.pow(x, e)
            pow_cache[key] = v
        return v

    n = 0
    for point in projective_points(field, 3):
        total = zero
        for exps, c in terms:
            mono = one
            for x, e in zip(point, exps):
                if e:
                    if x == zero:
                        mono = zero
                        break
                    mono = field.mul(mono, power(x, e))
            if mono != zero:
                total = field.add(total, mono if c == one else field.mul(c, mono))
        if total == zero:
            n += 1
    return PointCount(variety=variety, q=field.q, count=n)


def fermat_form(d: int) -> dict[tuple[int, int, int, int], int]:
    """x0^d + x1^d + x2^d + x3^d (smooth mod p exactly when p does not divide d)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return {
        (d, 0, 0, 0): 1,
        (0, d, 0, 0): 1,
        (0, 0, d, 0): 1,
        (0, 0, 0, d): 1,
    }


# shipped countable models: variety id -> (catalog surface, fermat degree or None)
MODELS = {
    "P1xP1": ("P1xP1", None),
    "Bl1P2": ("Bl1P2", None),
    **{f"fermat{d}": (f"deg{d}", d) for d in range(1, 7)},
}


def model_surface_name(variety: str) -> str:
    """Catalog surface carrying the Betti data of a countable model."""
    return MODELS[variety][0]


def model_has_good_reduction(variety: str, p: int) -> bool:
    """True when the shipped model is smooth mod p (Fermat: p does not divide d)."""
    d = MODELS[variety][1]
    return True if d is None else d % p != 0


def count_variety(
    variety: str, field: FiniteField, max_q: int = DEFAULT_MAX_Q
) -> PointCount:
    """Count a shipped model by id; KeyError for unknown ids."""
    if variety not in MODELS:
        raise KeyError(f"no countable model named {variety!r}")
    if variety == "P1xP1":
        return count_p1xp1(field, max_q=max_q)
    if variety == "Bl1P2":
        return count_blowup_p2(field, max_q=max_q)
    d = MODELS[variety][1]
    return count_hypersurface_p3(fermat_form(d), field, variety=variety, max_q=max_q)


def zeta_counts(
    variety: str, p: int, degrees: int, max_q: int = DEFAULT_MAX_Q
) -> ZetaData:
    """Counts of one model over GF(p), ..., GF(p^degrees)."""
    counts = tuple(
        count_variety(variety, build_field(p, k), max_q=max_q)
        for k in range(1, degrees + 1)
    )
    return ZetaData(variety=variety, p=p, counts=counts)


def weil_bound_check(c: PointCount, b2: int) -> bool:
    """|N - 1 - q^2| <= b2 * q for a smooth surface with b1 = 0.

    Frobenius eigenvalues on middle cohomology have absolute value q,
    while b0 and b4 contribute 1 and q^2.
    """
    return abs(c.count - 1 - c.q * c.q) <= b2 * c.q


def counterexample_report(
    primes: list[int], degrees: int = 2, max_q: int = DEFAULT_MAX_Q
) -> dict:
    """Equal zeta data vs distinct homeomorphism type, in one structured report.

    For each prime and each extension degree up to `degrees`, counts the
    points of P1 x P1 and of P2 blown up at a point; alongside, decides
    homeomorphism and classifies both intersection forms. The conclusion
    records that matching count sequences cannot detect the differing
    intersection-form parity.
    """
    if not primes:
        raise ValueError("need at least one prime")
    if not 1 <= degrees <= 3:
        raise ValueError("degrees must be between 1 and 3")
    quadric = catalog_lookup("P1xP1")
    blowup = catalog_lookup("Bl1P2")
    homeo = homeomorphic(quadric, blowup)
    classes = {
        "P1xP1": class_to_dict(intersection_form_class(quadric)),
        "Bl1P2": class_to_dict(intersection_form_class(blowup)),
    }
    inv = {
        s.name: {
            "b2": compute_invariants(s).b2,
            "sigma": compute_invariants(s).sigma,
            "parity": compute_invariants(s).parity.value,
        }
        for s in (quadric, blowup)
    }
    per_prime = []
    all_equal = True
    for p in primes:
        rows = []
        for k in range(1, degrees + 1):
            f = build_field(p, k)
            a = count_p1xp1(f, max_q=max_q)
            b = count_blowup_p2(f, max_q=max_q)
            equal = a.count == b.count
            all_equal = all_equal and equal
            rows.append({"q": f.q, "P1xP1": a.count, "Bl1P2": b.count, "equal": equal})
        per_prime.append({"p": p, "counts": rows})
    if all_equal and not homeo:
        conclusion = (
            "point counts agree over every tested field, yet the surfaces are not "
            "homeomorphic: zeta data does not determine homeomorphism type"
        )
    else:
        conclusion = "expected counterexample conditions were NOT met; see the data"
    return {
        "surfaces": ["P1xP1", "Bl1P2"],
        "degrees": degrees,
        "primes": per_prime,
        "all_counts_equal": all_equal,
        "homeomorphic": homeo,
        "form_classes": classes,
        "invariants": inv,
        "conclusion": conclusion,
    }
