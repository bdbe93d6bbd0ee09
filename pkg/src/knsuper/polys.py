"""Exact univariate polynomial, Laurent polynomial and rational function
arithmetic over Q(sqrt 2).

`Poly` is dense (coefficient list), `LaurentPoly` sparse (exponent dict);
`RatFn` keeps num/den coprime with monic denominator so equality is plain
structural comparison.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .scalar import ONE, ZERO, Scalar


class Poly:
    """Polynomial sum c_k z^k, coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: List[Scalar]):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly([c])

    @staticmethod
    def monomial(c: Scalar, k: int) -> "Poly":
        return Poly([ZERO] * k + [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return P_ZERO
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def scale(self, c: Scalar) -> "Poly":
        return Poly([x * c for x in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([self.coeffs[k] * Scalar(k) for k in range(1, len(self.coeffs))])

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [ZERO] * max(0, self.degree() - other.degree() + 1)
        rem = list(self.coeffs)
        dlead = other.lead()
        dd = other.degree()
        while len(rem) - 1 >= dd and rem:
            c = rem[-1] / dlead
            k = len(rem) - 1 - dd
            q[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(q), Poly(rem)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.lead().inverse())

    def pow(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a Poly")
        out, base = P_ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval_scalar(self, x: Scalar) -> Scalar:
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_ratfn(self, x: "RatFn") -> "RatFn":
        """Evaluate at a rational function (exact composition)."""
        out = RatFn.const(ZERO)
        for c in reversed(self.coeffs):
            out = out * x + RatFn.const(c)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self.coeff(k)
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append("z" if c == ONE else f"({c})*z")
            else:
                parts.append(f"z^{k}" if c == ONE else f"({c})*z^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


P_ZERO = Poly([])
P_ONE = Poly([ONE])
P_Z = Poly([ZERO, ONE])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over the field Q(sqrt 2)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


class RatFn:
    """Rational function num/den, gcd(num, den) = 1, den monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = P_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = P_ZERO, P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.lead()
            if lead != ONE:
                inv = lead.inverse()
                num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    @staticmethod
    def const(c: Scalar) -> "RatFn":
        return RatFn(Poly.const(c))

    @staticmethod
    def z() -> "RatFn":
        return RatFn(P_Z)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def __add__(self, other: "RatFn") -> "RatFn":
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFn":
        return RatFn(-self.num, self.den)

    def __sub__(self, other: "RatFn") -> "RatFn":
        return self + (-other)

    def __mul__(self, other: "RatFn") -> "RatFn":
        return RatFn(self.num * other.num, self.den * other.den)

    def scale(self, c: Scalar) -> "RatFn":
        return RatFn(self.num.scale(c), self.den)

    def inverse(self) -> "RatFn":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFn(self.den, self.num)

    def __truediv__(self, other: "RatFn") -> "RatFn":
        return self * other.inverse()

    def derivative(self) -> "RatFn":
        # quotient rule; RatFn normalization re-cancels common factors
        return RatFn(self.num.derivative() * self.den - self.num * self.den.derivative(),
                     self.den * self.den)

    def pow(self, n: int) -> "RatFn":
        if n < 0:
            return self.inverse().pow(-n)
        out, base = RatFn.const(ONE), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def subs(self, x: "RatFn") -> "RatFn":
        """Substitute z -> x(z), exactly."""
        return self.num.eval_ratfn(x) / self.den.eval_ratfn(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFn) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFn({self})"


class LaurentPoly:
    """Sparse Laurent polynomial sum c_k y^k, k in Z, over Q(sqrt 2)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, Scalar]] = None):
        t = {}
        if coeffs:
            for k, c in coeffs.items():
                if not isinstance(c, Scalar):
                    c = Scalar(c)
                if not c.is_zero():
                    t[k] = c
        object.__setattr__(self, "coeffs", t)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def const(c: Scalar) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def monomial(c: Scalar, k: int) -> "LaurentPoly":
        return LaurentPoly({k: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Scalar:
        return self.coeffs.get(k, ZERO)

    def support(self) -> List[int]:
        return sorted(self.coeffs)

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = t.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(k, None)
            else:
                t[k] = s
        return LaurentPoly(t)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        t: Dict[int, Scalar] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                s = t.get(k)
                p = a * b
                s = p if s is None else s + p
                if s.is_zero():
                    t.pop(k, None)
                else:
                    t[k] = s
        return LaurentPoly(t)

    def scale(self, c: Scalar) -> "LaurentPoly":
        return LaurentPoly({k: v * c for k, v in self.coeffs.items()})

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by y^d."""
        return LaurentPoly({k + d: c for k, c in self.coeffs.items()})

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({k - 1: c * Scalar(k) for k, c in self.coeffs.items() if k != 0})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append("y" if c == ONE else f"({c})*y")
            else:
                parts.append(f"y^{k}" if c == ONE else f"({c})*y^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly({0: ONE})
LP_Y = LaurentPoly({1: ONE})
