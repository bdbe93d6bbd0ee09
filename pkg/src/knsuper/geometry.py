"""Tensor densities on the punctured sphere and the two graded operations.

A density of weight w is f(z)(dz)^w with f a rational function.  The two
bilinear operations are

    mul:      (f, w1), (g, w2)  ->  (f g, w1 + w2)
    bracket:  (f, w1), (g, w2)  ->  (w2 f' g - w1 f g', w1 + w2 + 1)

Two puncture sets are supported: {0, oo} (Laurent world) and {alpha,
-alpha, oo} with alpha = s^2 a nonzero rational square, so that sqrt(alpha)
and sqrt(2 alpha) exist exactly in Q(sqrt 2).

The indexed bases realized here (weights 0, -1, -1/2) follow the usual
three-puncture conventions: even functions (z^2-alpha^2)^k, z(z^2-alpha^2)^k,
vector fields built on the same ladder, and sqrt(2)-normalized odd
half-densities.  `expand_in_basis` inverts the realization exactly by
clearing the (z^2-alpha^2)-denominator and stripping leading monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import NotInAlgebra, UnknownFamily
from .kernel import BasisKey, HalfInt, Vector, hi
from .polys import P_ONE, P_Z, Poly, RatFn
from .scalar import ONE, SQRT2, Scalar


@dataclass(frozen=True)
class GeometryConfig:
    """Puncture data: "two" = {0, oo}; "three" = {alpha, -alpha, oo}, alpha = s^2."""

    punctures: str = "three"
    sqrt_alpha: Fraction = Fraction(1)

    def __post_init__(self):
        if self.punctures not in ("two", "three"):
            raise ValueError("punctures must be 'two' or 'three'")
        if self.punctures == "three" and self.sqrt_alpha == 0:
            raise ValueError("sqrt_alpha must be nonzero")

    @property
    def alpha(self) -> Scalar:
        return Scalar(Fraction(self.sqrt_alpha) ** 2)

    @property
    def alpha2(self) -> Scalar:
        return Scalar(Fraction(self.sqrt_alpha) ** 4)

    def quadratic(self) -> Poly:
        """z^2 - alpha^2, the denominator-clearing polynomial."""
        a = self.alpha
        return Poly([-(a * a), Scalar(0), ONE])


@dataclass(frozen=True)
class Density:
    """f(z) (dz)^w with exact rational f and half-integer weight w."""

    weight: HalfInt
    fn: RatFn

    def is_zero(self) -> bool:
        return self.fn.is_zero()

    def scale(self, c: Scalar) -> "Density":
        return Density(self.weight, self.fn.scale(c))

    def __add__(self, other: "Density") -> "Density":
        if not self.fn.is_zero() and not other.fn.is_zero() and self.weight != other.weight:
            raise ValueError("cannot add densities of different weights")
        w = other.weight if self.fn.is_zero() else self.weight
        return Density(w, self.fn + other.fn)

    def __str__(self) -> str:
        w = self.weight
        return f"{self.fn} (dz)^{{{w}}}"


def density_mul(u: Density, v: Density) -> Density:
    """Weight-additive product f g (dz)^(w1+w2)."""
    return Density(u.weight + v.weight, u.fn * v.fn)


def density_bracket(u: Density, v: Density) -> Density:
    """(w2 f' g - w1 f g') (dz)^(w1+w2+1); exact differentiation."""
    l = Scalar(u.weight.as_fraction())
    m = Scalar(v.weight.as_fraction())
    fn = (u.fn.derivative() * v.fn).scale(m) - (u.fn * v.fn.derivative()).scale(l)
    return Density(u.weight + v.weight + hi(1), fn)


# (weight, ladder-degree offset added to the index, sqrt2 normalization)
_THREE_FAMILIES: Dict[str, Tuple[HalfInt, Fraction, bool]] = {
    "G": (hi(0), Fraction(0), False),
    "V": (hi(-1), Fraction(1), False),
    "phi": (hi(Fraction(-1, 2)), Fraction(1, 2), True),
}
_TWO_FAMILIES: Dict[str, Tuple[HalfInt, Fraction, bool]] = {
    "eps": (hi(0), Fraction(0), False),
    "L": (hi(-1), Fraction(1), False),
    "a": (hi(Fraction(-1, 2)), Fraction(1, 2), False),
}


def _ladder_core(cfg: GeometryConfig, d: int) -> RatFn:
    """Monic ladder function of cleared degree d.

    Three punctures: (z^2-alpha^2)^k for d = 2k, z (z^2-alpha^2)^k for
    d = 2k+1 (negative k gives denominators).  Two punctures: z^d.
    """
    if cfg.punctures == "two":
        return RatFn(P_Z).pow(d)
    q = RatFn(cfg.quadratic())
    k, r = divmod(d, 2)
    core = q.pow(k)
    if r:
        core = core * RatFn(P_Z)
    return core


def _family_table(cfg: GeometryConfig):
    return _THREE_FAMILIES if cfg.punctures == "three" else _TWO_FAMILIES


def make_kn_basis(cfg: GeometryConfig, k: BasisKey) -> Density:
    """The exact density realizing one indexed basis symbol."""
    table = _family_table(cfg)
    if k.family not in table:
        raise UnknownFamily(f"family {k.family!r} has no density realization "
                            f"for {cfg.punctures} punctures")
    weight, offset, root2 = table[k.family]
    return ladder_density(cfg, weight, k.index, offset, root2)


def ladder_density(cfg: GeometryConfig, weight: HalfInt, index: HalfInt,
                   offset: Fraction, root2: bool) -> Density:
    d = index.as_fraction() + offset
    if d.denominator != 1:
        raise ValueError(f"index {index} does not sit on the family's lattice")
    fn = _ladder_core(cfg, int(d))
    if root2:
        fn = fn.scale(SQRT2)
    return Density(weight, fn)


def expand_ladder(cfg: GeometryConfig, d: Density, offset: Fraction,
                  root2: bool, family: str) -> Vector:
    """Exact coordinates of a density in one indexed ladder.

    Clears the puncture denominator, then strips leading monomials; each
    ladder element is monic of a distinct cleared degree, so the loop is
    canonical.  Raises NotInAlgebra when the denominator keeps factors other
    than powers of the puncture polynomial (poles off the puncture set).
    """
    fn = d.fn
    if fn.is_zero():
        return Vector.zero()
    clear = 0
    if cfg.punctures == "two":
        # denominator must be a power of z
        den = fn.den
        low = next(i for i, c in enumerate(den.coeffs) if not c.is_zero())
        if Poly(list(den.coeffs[low:])).degree() != 0:
            raise NotInAlgebra(f"poles of {fn} off the puncture set {{0, oo}}")
        clear = low
        num = fn.num.scale(den.coeffs[low].inverse())
    else:
        q = RatFn(cfg.quadratic())
        cur = fn
        while not cur.is_poly():
            nxt = cur * q
            if nxt.den.degree() >= cur.den.degree():
                raise NotInAlgebra(f"poles of {fn} off the puncture set")
            cur = nxt
            clear += 1
        num = cur.num.scale(cur.den.coeffs[0].inverse())

    scale = SQRT2 if root2 else ONE
    out: Dict[BasisKey, Scalar] = {}
    rem = num
    step = 2 if cfg.punctures == "three" else 1
    while not rem.is_zero():
        deg = rem.degree()
        c = rem.lead() / scale
        idx = Fraction(deg - step * clear) - offset
        out[BasisKey(family, hi(idx))] = c
        lead_elem = _ladder_core(cfg, deg - step * clear) * _ladder_core(cfg, step * clear)
        # lead_elem is the cleared form of the ladder element: monic, degree deg
        rem = rem - lead_elem.num.scale(c * scale)
    return Vector(out)


def expand_in_basis(cfg: GeometryConfig, d: Density,
                    family: Optional[str] = None) -> Vector:
    """Coordinates of d in the G/V/phi (or eps/L/a) basis of its weight."""
    table = _family_table(cfg)
    if family is None:
        matches = [f for f, (w, _, _) in table.items() if w == d.weight]
        if not matches:
            raise UnknownFamily(f"no realized family of weight {d.weight}")
        family = matches[0]
    weight, offset, root2 = table[family]
    if not d.is_zero() and d.weight != weight:
        raise UnknownFamily(f"density of weight {d.weight} cannot expand "
                            f"in family {family!r} of weight {weight}")
    return expand_ladder(cfg, d, offset, root2, family)


def jkn_product(cfg: GeometryConfig, u: Density, v: Density,
                unital: bool = False) -> Density:
    """Jordan product on weights {0, -1/2}: mul on even pairs, half the
    mul on mixed pairs (full mul in the unital variant), bracket on odd pairs."""
    wu, wv = u.weight.twice, v.weight.twice
    if wu not in (0, -1) or wv not in (0, -1):
        raise ValueError("jordan product needs weights 0 or -1/2")
    if wu == 0 and wv == 0:
        return density_mul(u, v)
    if wu == -1 and wv == -1:
        return density_bracket(u, v)
    out = density_mul(u, v)
    return out if unital else out.scale(Scalar(Fraction(1, 2)))


def lkn_bracket(cfg: GeometryConfig, u: Density, v: Density) -> Density:
    """Lie superbracket on weights {-1, -1/2}: bracket except on odd pairs,
    where it is half the mul."""
    wu, wv = u.weight.twice, v.weight.twice
    if wu not in (-2, -1) or wv not in (-2, -1):
        raise ValueError("lie bracket needs weights -1 or -1/2")
    if wu == -1 and wv == -1:
        return density_mul(u, v).scale(Scalar(Fraction(1, 2)))
    return density_bracket(u, v)


def mobius_pullback(cfg: GeometryConfig, d: Density) -> Density:
    """Pull a density in the coordinate w = (z-alpha)/(z+alpha) back to z.

    Substitutes w(z) and multiplies by (dw/dz)^weight, with dw/dz =
    2 alpha/(z+alpha)^2; for half-integer weights the square root
    sqrt(2 alpha) = s sqrt(2) is exact because alpha = s^2.
    """
    if cfg.punctures != "three":
        raise ValueError("pullback targets the three-puncture configuration")
    a = cfg.alpha
    z_plus = Poly([a, ONE])
    omega = RatFn(Poly([-a, ONE]), z_plus)
    dw = RatFn(Poly.const(Scalar(2) * a), z_plus * z_plus)
    fn = d.fn.subs(omega)
    t = d.weight.twice
    if t % 2 == 0:
        jac = dw.pow(t // 2)
    else:
        k = (t - 1) // 2
        root = RatFn(Poly.const(Scalar(Fraction(cfg.sqrt_alpha)) * SQRT2), z_plus)
        jac = dw.pow(k) * root
    return Density(d.weight, fn * jac)
