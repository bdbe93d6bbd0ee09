"""Graded sparse vectors over an infinite indexed basis, and exact linear algebra.

Basis symbols are (family, index) pairs where the index is an integer or a
half-integer.  Half-integers are stored as doubled integers so all index
arithmetic stays in machine integers.  Vectors are finite formal linear
combinations with `Scalar` coefficients; zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .scalar import ONE, Scalar, _fmt_rat

EVEN, ODD = 0, 1


class HalfInt:
    """An element of (1/2)Z, stored as twice its value.

    Integers and proper half-integers share the type; the parity of
    ``twice`` tells them apart.
    """

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @staticmethod
    def of(value) -> "HalfInt":
        """Build from an int, Fraction with denominator 1 or 2, or HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        f = Fraction(value)
        if f.denominator == 1:
            return HalfInt(2 * f.numerator)
        if f.denominator == 2:
            return HalfInt(f.numerator)
        raise ValueError(f"{value} is not a half-integer")

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfInt) and self.twice == other.twice

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice < other.twice

    def __le__(self, other: "HalfInt") -> bool:
        return self.twice <= other.twice

    def __hash__(self):
        return hash(self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice))

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def hi(value) -> HalfInt:
    return HalfInt.of(value)


# Family -> parity.  Families with integer indices and families with proper
# half-integer indices are disjoint, except the module families u/w whose
# index lattice depends on the weight and is validated by their builders.
FAMILY_PARITY: Dict[str, int] = {
    # even families
    "G": EVEN, "V": EVEN, "L": EVEN, "H": EVEN,
    "x": EVEN, "y": EVEN, "X": EVEN, "Y": EVEN,
    "eps": EVEN, "f": EVEN, "g": EVEN, "u": EVEN,
    # odd families
    "phi": ODD, "a": ODD, "b": ODD, "A": ODD, "B": ODD,
    "gamma": ODD, "w": ODD,
}

_INT_INDEXED = {"G", "V", "L", "H", "x", "y", "X", "Y", "eps", "f", "g"}
_HALF_INDEXED = {"phi", "a", "b", "A", "B", "gamma"}


class BasisKey:
    """One indexed basis symbol: (family, index), parity fixed by the family."""

    __slots__ = ("family", "index")

    def __init__(self, family: str, index):
        index = HalfInt.of(index)
        if family not in FAMILY_PARITY:
            raise ValueError(f"unknown family {family!r}")
        if family in _INT_INDEXED and not index.is_integer():
            raise ValueError(f"family {family!r} takes integer indices, got {index}")
        if family in _HALF_INDEXED and index.is_integer():
            raise ValueError(f"family {family!r} takes half-integer indices, got {index}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("BasisKey is immutable")

    @property
    def parity(self) -> int:
        return FAMILY_PARITY[self.family]

    def shifted(self, dtwice: int) -> "BasisKey":
        return BasisKey(self.family, HalfInt(self.index.twice + dtwice))

    def __eq__(self, other) -> bool:
        return (isinstance(other, BasisKey)
                and self.family == other.family and self.index == other.index)

    def __lt__(self, other: "BasisKey") -> bool:
        return (self.family, self.index.twice) < (other.family, other.index.twice)

    def __hash__(self):
        return hash((self.family, self.index.twice))

    def __str__(self) -> str:
        return f"{self.family}_{self.index}"

    def __repr__(self) -> str:
        return f"BasisKey({self})"


def key(family: str, index) -> BasisKey:
    return BasisKey(family, index)


class Vector:
    """Finite formal linear combination of basis symbols over Q(sqrt 2).

    The key type only needs hashing and a total order (BasisKey, or pair
    tuples for the adjoint-superalgebra symbols), so the same class backs
    every linear-algebra computation in the package.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict] = None):
        t = {}
        if terms:
            for k, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar(c)
                if not c.is_zero():
                    t[k] = c
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @staticmethod
    def zero() -> "Vector":
        return Vector()

    @staticmethod
    def unit(k, coeff: Scalar = ONE) -> "Vector":
        return Vector({k: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, k) -> Scalar:
        return self.terms.get(k, Scalar(0))

    def keys(self):
        return self.terms.keys()

    def items(self):
        return self.terms.items()

    def sorted_items(self) -> List[Tuple[object, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __add__(self, other: "Vector") -> "Vector":
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        return Vector(t) if t else _ZERO_VEC

    def __neg__(self) -> "Vector":
        return Vector({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def scale(self, c: Scalar) -> "Vector":
        if not isinstance(c, Scalar):
            c = Scalar(c)
        if c.is_zero():
            return _ZERO_VEC
        return Vector({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((str(k), c) for k, c in self.terms.items())))

    def mapped(self, fn) -> "Vector":
        """Push through a linear map given on keys: sum of coeff * fn(key)."""
        out = Vector.zero()
        for k, c in self.terms.items():
            out = out + fn(k).scale(c)
        return out

    def restrict(self, pred) -> "Vector":
        return Vector({k: c for k, c in self.terms.items() if pred(k)})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            parts.append(f"({c})*{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Vector<{self}>"


_ZERO_VEC = Vector()


def vec_linear(u: Vector, v: Vector, c: Scalar) -> Vector:
    """u + c*v with zero-coefficient cleanup."""
    return u + v.scale(c)


class RowBasis:
    """Incrementally maintained reduced row echelon span of Vectors.

    Used for relation spans, canonical forms, rank computations and for
    expressing a vector in a given row span.  Pivots are the minimal keys
    under the key order; rows are kept pivot-normalized and mutually reduced,
    so reduction against the basis is a canonical normal form.
    """

    def __init__(self, track: bool = False):
        self.rows: List[Vector] = []
        self.pivots: List = []          # pivot key of each row
        self.track = track
        self.coords: List[Dict[int, Scalar]] = []   # row as combo of inserted originals
        self._n_orig = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector):
        """Return (residual, combo) with v = residual + sum combo[i]*original_i.

        combo is None unless tracking is enabled.
        """
        combo: Optional[Dict[int, Scalar]] = {} if self.track else None
        changed = True
        while changed:
            changed = False
            for i, p in enumerate(self.pivots):
                c = v.terms.get(p)
                if c is not None:
                    v = v - self.rows[i].scale(c)
                    if combo is not None:
                        for j, w in self.coords[i].items():
                            s = combo.get(j, Scalar(0)) + w * c
                            if s.is_zero():
                                combo.pop(j, None)
                            else:
                                combo[j] = s
                    changed = True
        return v, combo

    def add(self, v: Vector) -> bool:
        """Insert v's residual into the span; returns True if the rank grew."""
        idx = self._n_orig
        self._n_orig += 1
        res, combo = self.reduce(v)
        if res.is_zero():
            return False
        pivot = min(res.terms.keys())
        inv = res.terms[pivot].inverse()
        res = res.scale(inv)
        if self.track:
            coord = {j: -w * inv for j, w in (combo or {}).items()}
            coord[idx] = coord.get(idx, Scalar(0)) + inv
            coord = {j: w for j, w in coord.items() if not w.is_zero()}
        # back-reduce existing rows to keep the span in RREF
        for i in range(len(self.rows)):
            c = self.rows[i].terms.get(pivot)
            if c is not None:
                self.rows[i] = self.rows[i] - res.scale(c)
                if self.track:
                    for j, w in coord.items():
                        s = self.coords[i].get(j, Scalar(0)) - w * c
                        if s.is_zero():
                            self.coords[i].pop(j, None)
                        else:
                            self.coords[i][j] = s
        self.rows.append(res)
        self.pivots.append(pivot)
        if self.track:
            self.coords.append(coord)
        return True


def solve_exact(rows: Iterable[Vector], target: Vector) -> Optional[List[Scalar]]:
    """Express target in the span of rows, exactly.

    Returns coefficients c with target = sum c[i]*rows[i], or None when the
    target is outside the span (NoSolution is a value, not an error).
    """
    rows = list(rows)
    basis = RowBasis(track=True)
    inserted: List[int] = []    # original index of each accepted row
    for i, r in enumerate(rows):
        if basis.add(r):
            inserted.append(i)
        else:
            inserted.append(i)  # duplicates still consume an original slot
    res, combo = basis.reduce(target)
    if not res.is_zero():
        return None
    out = [Scalar(0)] * len(rows)
    for j, w in (combo or {}).items():
        out[j] = out[j] + w
    return out


def span_rank(vectors: Iterable[Vector]) -> int:
    basis = RowBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank


def nullspace(vectors: List[Vector]) -> List[List[Scalar]]:
    """Exact kernel of the linear map e_i -> vectors[i].

    Returns a list of coefficient lists c with sum c[i]*vectors[i] = 0,
    one per nullspace dimension.
    """
    basis = RowBasis(track=True)
    call_to_orig: List[int] = []
    out: List[List[Scalar]] = []
    for i, v in enumerate(vectors):
        res, combo = basis.reduce(v)
        if res.is_zero():
            coeffs = [Scalar(0)] * len(vectors)
            coeffs[i] = ONE
            for j, w in (combo or {}).items():
                coeffs[call_to_orig[j]] = coeffs[call_to_orig[j]] - w
            out.append(coeffs)
        else:
            basis.add(v)
            call_to_orig.append(i)
    return out


def format_index(i: HalfInt) -> str:
    return str(i)


def parse_index(text: str) -> HalfInt:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        if int(den) != 2:
            raise ValueError(f"bad half-integer {text!r}")
        return HalfInt(int(num))
    return HalfInt(2 * int(text))


def parse_key(text: str) -> BasisKey:
    """Inverse of ``str(BasisKey)``, e.g. ``"phi_-3/2"`` or ``"G_4"``."""
    fam, _, idx = text.partition("_")
    if not idx:
        raise ValueError(f"cannot parse key {text!r}")
    return BasisKey(fam, parse_index(idx))
