"""The 4-dimensional quotient algebra A_lambda = k D_inf / <h + h^-1 - lambda>.

Imposing h + h^-1 = lambda forces the reduction rules h g = lambda g - g h
and h^2 = lambda h - 1, so every word in g, h, h^-1 collapses into the
ordered basis (1, g, h, gh).  This module implements that arithmetic, the
idempotent pair e1/e2, the nilpotent lines of the corners, the simple-module
candidates for each lambda, and exact checkers for the dihedral module
axioms, irreducibility (Burnside span) and isomorphism of small modules.

Every candidate module the corner analysis suggests is run through the
axiom checker and returned flagged; nothing is assumed, nothing silently
dropped.  (The 1-dimensional candidates with h acting by lambda/2 only
satisfy h^2 = lambda h - 1 when lambda = +-2; for other lambda they are
returned with a fail verdict.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import linalg
from .field import Scalar

_BASIS_NAMES = ("1", "g", "h", "gh")


class ALambdaElement:
    """Element of A_lambda in the ordered basis (1, g, h, gh)."""

    __slots__ = ("lam", "coeffs")

    def __init__(self, lam: Scalar, coeffs):
        cs = tuple(c if isinstance(c, Scalar) else Scalar.from_rational(c, lam.order)
                   for c in coeffs)
        if len(cs) != 4:
            raise ValueError("A_lambda elements have 4 coefficients")
        self.lam = lam
        self.coeffs = cs

    @classmethod
    def basis(cls, lam: Scalar, name: str) -> "ALambdaElement":
        coeffs = [0, 0, 0, 0]
        coeffs[_BASIS_NAMES.index(name)] = 1
        return cls(lam, coeffs)

    @classmethod
    def zero(cls, lam: Scalar) -> "ALambdaElement":
        return cls(lam, [0, 0, 0, 0])

    @classmethod
    def one(cls, lam: Scalar) -> "ALambdaElement":
        return cls.basis(lam, "1")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ALambdaElement):
            return NotImplemented
        return self.lam == other.lam and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lam, self.coeffs))

    def __add__(self, other):
        self._check(other)
        return ALambdaElement(self.lam, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return ALambdaElement(self.lam, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return ALambdaElement(self.lam, [-a for a in self.coeffs])

    def scale(self, s) -> "ALambdaElement":
        s = s if isinstance(s, Scalar) else Scalar.from_rational(s, self.lam.order)
        return ALambdaElement(self.lam, [s * a for a in self.coeffs])

    def __mul__(self, other):
        self._check(other)
        return alambda_multiply(self, other)

    def __pow__(self, n: int) -> "ALambdaElement":
        if n < 0:
            raise ValueError("negative powers not supported in A_lambda")
        out = ALambdaElement.one(self.lam)
        for _ in range(n):
            out = out * self
        return out

    def _check(self, other):
        if not isinstance(other, ALambdaElement):
            raise TypeError("expected an ALambdaElement")
        if other.lam != self.lam:
            raise ValueError("mismatched lambda")

    def __str__(self):
        parts = []
        for c, name in zip(self.coeffs, _BASIS_NAMES):
            if not c.is_zero():
                parts.append(f"({c})*{name}" if name != "1" else f"({c})")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


@lru_cache(maxsize=64)
def _basis_product_table(lam: Scalar):
    # rows/cols indexed by (1, g, h, gh); entries are coefficient 4-tuples
    one = Scalar.one(lam.order)
    zero = Scalar.zero(lam.order)
    l = lam

    def v(c1=zero, cg=zero, ch=zero, cgh=zero):
        return (c1, cg, ch, cgh)

    e1, eg, eh, egh = v(one), v(cg=one), v(ch=one), v(cgh=one)
    table = {
        (0, 0): e1, (0, 1): eg, (0, 2): eh, (0, 3): egh,
        (1, 0): eg, (1, 1): e1, (1, 2): egh, (1, 3): eh,
        # h*g = lambda g - gh, h*h = lambda h - 1, h*gh = g
        (2, 0): eh, (2, 1): v(cg=l, cgh=-one), (2, 2): v(-one, ch=l), (2, 3): eg,
        # gh*g = lambda - h, gh*h = lambda gh - g, gh*gh = 1
        (3, 0): egh, (3, 1): v(l, ch=-one), (3, 2): v(cg=-one, cgh=l), (3, 3): e1,
    }
    return table


def alambda_multiply(x: ALambdaElement, y: ALambdaElement) -> ALambdaElement:
    """Product reduced to the (1, g, h, gh) basis."""
    if x.lam != y.lam:
        raise ValueError("mismatched lambda")
    table = _basis_product_table(x.lam)
    acc = [Scalar.zero(x.lam.order) for _ in range(4)]
    for i, xi in enumerate(x.coeffs):
        if xi.is_zero():
            continue
        for j, yj in enumerate(y.coeffs):
            if yj.is_zero():
                continue
            f = xi * yj
            for k, c in enumerate(table[(i, j)]):
                if not c.is_zero():
                    acc[k] = acc[k] + f * c
    return ALambdaElement(x.lam, acc)


def generator_image(lam: Scalar, letter: str) -> ALambdaElement:
    """Image of g, h or h^-1 in A_lambda (h^-1 = lambda - h)."""
    if letter == "g":
        return ALambdaElement.basis(lam, "g")
    if letter == "h":
        return ALambdaElement.basis(lam, "h")
    if letter == "h^-1":
        return ALambdaElement(lam, [lam, 0, -Scalar.one(lam.order), 0])
    raise ValueError(f"unknown generator {letter!r}")


def reduce_word(lam: Scalar, word) -> ALambdaElement:
    """Reduce a word over {"g", "h", "h^-1"} to the 4-dimensional basis."""
    out = ALambdaElement.one(lam)
    for letter in word:
        out = out * generator_image(lam, letter)
    return out


# -- idempotents, corners, radicals ------------------------------------------

def idempotent_pair(lam: Scalar) -> tuple[ALambdaElement, ALambdaElement]:
    """e1 = (1+g)/2, e2 = (1-g)/2, verified before returning."""
    half = Fraction(1, 2)
    e1 = ALambdaElement(lam, [half, half, 0, 0])
    e2 = ALambdaElement(lam, [half, -half, 0, 0])
    one = ALambdaElement.one(lam)
    zero = ALambdaElement.zero(lam)
    assert e1 * e1 == e1 and e2 * e2 == e2, "idempotent relation failed"
    assert e1 * e2 == zero and e2 * e1 == zero, "orthogonality failed"
    assert e1 + e2 == one, "decomposition of 1 failed"
    return e1, e2


@dataclass(frozen=True)
class CornerData:
    """One corner e*A (right) or A*e (left): idempotent, 2-element basis,
    and the nilpotent line (None until computed)."""

    idempotent: ALambdaElement
    basis: tuple[ALambdaElement, ALambdaElement]
    radical_line: Optional[ALambdaElement]
    side: str          # "plus" or "minus"
    left: bool = False


def _corner_basis(lam: Scalar, side: str, left: bool):
    one = Scalar.one(lam.order)
    if side == "plus":
        sg = one
    elif side == "minus":
        sg = -one
    else:
        raise ValueError("side must be 'plus' or 'minus'")
    a = ALambdaElement(lam, [one, sg, 0, 0])                 # 1 +- g
    if left:
        # h^-1 +- gh = (lambda - h) +- gh
        b = ALambdaElement(lam, [lam, 0, -one, sg])
    else:
        # h +- gh
        b = ALambdaElement(lam, [0, 0, one, sg])
    return a, b


def corner_data(lam: Scalar, side: str, left: bool = False) -> CornerData:
    """Corner of A_lambda at e1 (plus) or e2 (minus), with its radical line."""
    e1, e2 = idempotent_pair(lam)
    e = e1 if side == "plus" else e2
    a, b = _corner_basis(lam, side, left)
    corner = CornerData(e, (a, b), None, side, left)
    r = radical_line(corner, lam)
    return CornerData(e, (a, b), r, side, left)


def radical_line(corner: CornerData, lam: Scalar) -> ALambdaElement:
    """The nilpotent line b - (lambda/2) a of a corner, verified exactly.

    Checks r^2 = 0 and that r kills the corner basis from the side the
    corner lives on before returning.
    """
    a, b = corner.basis
    r = b - a.scale(lam * Fraction(1, 2))
    zero = ALambdaElement.zero(lam)
    assert r * r == zero, "radical line does not square to zero"
    if corner.left:
        assert (a * r == zero and b * r == zero), "corner does not kill radical"
    else:
        assert (r * a == zero and r * b == zero), "radical does not kill corner"
    return r


def corner_power_identity(x1: Scalar, x2: Scalar, lam: Scalar, n: int,
                          side: str = "plus") -> bool:
    """Whether (x1*a + x2*b)^n = (2 x1 + lambda x2)^(n-1) (x1*a + x2*b)
    holds in the right corner, evaluated by repeated multiplication."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, b = _corner_basis(lam, side, left=False)
    elt = a.scale(x1) + b.scale(x2)
    lhs = elt ** n
    factor = (x1 + x1 + lam * x2) ** (n - 1)
    rhs = elt.scale(factor)
    return lhs == rhs


# -- finite-dimensional dihedral representations ------------------------------

@dataclass(frozen=True)
class FinRep:
    """Matrices of g, h (and the exact inverse of h) for a 1- or 2-dim rep."""

    G: tuple
    H: tuple
    Hinv: tuple

    @property
    def dim(self) -> int:
        return len(self.G)

    @property
    def order(self) -> int:
        return self.G[0][0].order

    @classmethod
    def from_matrices(cls, G, H) -> "FinRep":
        """Build a rep candidate; Hinv is the exact matrix inverse of H."""
        g = tuple(tuple(r) for r in G)
        h = tuple(tuple(r) for r in H)
        hinv = tuple(tuple(r) for r in linalg.mat_inverse([list(r) for r in H]))
        return cls(g, h, hinv)


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Optional[str] = None

    def __bool__(self):
        return self.ok


def module_axiom_check(rep: FinRep) -> CheckResult:
    """Verify h*h^-1 = 1, g^2 = 1 and g h g = h^-1 as exact matrices."""
    order = rep.order
    ident = linalg.identity(rep.dim, order)
    G = [list(r) for r in rep.G]
    H = [list(r) for r in rep.H]
    Hinv = [list(r) for r in rep.Hinv]
    if not linalg.mat_eq(linalg.mat_mul(H, Hinv), ident):
        return CheckResult(False, "h h^-1 != 1")
    if not linalg.mat_eq(linalg.mat_mul(G, G), ident):
        return CheckResult(False, "g^2 != 1")
    ghg = linalg.mat_mul(G, linalg.mat_mul(H, G))
    if not linalg.mat_eq(ghg, Hinv):
        return CheckResult(False, "g h g != h^-1")
    return CheckResult(True)


def is_irreducible(rep: FinRep) -> bool:
    """Burnside span criterion: no eigenvalue computation needed.

    For dim 2, the rep is irreducible iff words of length <= 3 in the two
    generator images span the full 4-dimensional matrix space (the span
    filtration of an algebra with 1 stabilizes as soon as it stops growing,
    so length 3 always decides for 2x2).
    """
    if not module_axiom_check(rep):
        raise ValueError("is_irreducible requires an axiom-passing rep")
    if rep.dim == 1:
        return True
    gens = [[list(r) for r in rep.G], [list(r) for r in rep.H]]
    words = [linalg.identity(rep.dim, rep.order)]
    layer = [linalg.identity(rep.dim, rep.order)]
    for _ in range(3):
        layer = [linalg.mat_mul(w, m) for w in layer for m in gens]
        words.extend(layer)
    flat = [[c for row in w for c in row] for w in words]
    return linalg.row_span_rank(flat) == rep.dim ** 2


def rep_iso_check(r1: FinRep, r2: FinRep) -> bool:
    """Whether an invertible intertwiner T with T G1 = G2 T, T H1 = H2 T exists.

    Solves the linear system exactly; for dim 2 an invertible element exists
    in the solution space iff det is not identically zero on it, which is
    decided by evaluating det on the basis vectors and their pairwise sums
    (det is a quadratic form in the coordinates).
    """
    for r in (r1, r2):
        if not module_axiom_check(r):
            raise ValueError("rep_iso_check requires axiom-passing reps")
        if r.dim > 2:
            raise ValueError("rep_iso_check handles dims <= 2 only")
    if r1.dim != r2.dim:
        return False
    d = r1.dim
    order = r1.order
    zero = Scalar.zero(order)
    # Unknowns T[i][j] flattened row-major; rows of the system come from
    # (T A1 - A2 T)[i][j] = 0 for A in {G, H}.
    rows = []
    for A1, A2 in ((r1.G, r2.G), (r1.H, r2.H)):
        for i in range(d):
            for j in range(d):
                row = [zero] * (d * d)
                for k in range(d):
                    row[i * d + k] = row[i * d + k] + A1[k][j]
                    row[k * d + j] = row[k * d + j] - A2[i][k]
                rows.append(row)
    kernel = linalg.nullspace(rows)
    if not kernel:
        return False
    if d == 1:
        return True

    def det_of(vec):
        return vec[0] * vec[3] - vec[1] * vec[2]

    candidates = list(kernel)
    candidates += [[a + b for a, b in zip(u, v)]
                   for i, u in enumerate(kernel) for v in kernel[i + 1:]]
    return any(not det_of(v).is_zero() for v in candidates)


# -- the simple-module candidates ---------------------------------------------

@dataclass(frozen=True)
class SimpleCandidate:
    """One candidate simple module with its axiom verdict."""

    label: str                 # "s0+", "s0-", "slam+", "slam-"
    lam: Scalar
    rep: FinRep
    axiom: CheckResult

    @property
    def dim(self) -> int:
        return self.rep.dim


def _scalar_matrix(values, order):
    return tuple(tuple(v if isinstance(v, Scalar) else Scalar.from_rational(v, order)
                       for v in row) for row in values)


def simple_modules(lam: Scalar) -> list[SimpleCandidate]:
    """The candidate simple modules of A_lambda, axiom-checked.

    lambda = 0: two 2-dimensional modules (the corners themselves), with
    g = diag(+-1, -+1) and h the rotation sending the first basis vector to
    minus the second.  lambda != 0: two 1-dimensional candidates with
    g -> +-1 and h -> lambda/2; these satisfy h^2 = lambda h - 1 only when
    lambda = +-2 and are flagged accordingly, not dropped.
    """
    order = lam.order
    one = Scalar.one(order)
    out = []
    if lam.is_zero():
        for label, gsign in (("s0+", one), ("s0-", -one)):
            G = _scalar_matrix([[gsign, 0], [0, -gsign]], order)
            H = _scalar_matrix([[0, 1], [-1, 0]], order)
            rep = FinRep.from_matrices(G, H)
            out.append(SimpleCandidate(label, lam, rep, module_axiom_check(rep)))
        return out
    half_lam = lam * Fraction(1, 2)
    for label, gval in (("slam+", one), ("slam-", -one)):
        G = _scalar_matrix([[gval]], order)
        H = _scalar_matrix([[half_lam]], order)
        rep = FinRep.from_matrices(G, H)
        out.append(SimpleCandidate(label, lam, rep, module_axiom_check(rep)))
    return out


def alambda_report(lam: Scalar) -> dict:
    """Structured summary used by the CLI: products, idempotents, radicals,
    simple-module candidates with axiom/irreducibility flags."""
    e1, e2 = idempotent_pair(lam)
    products = {}
    for i, x in enumerate(_BASIS_NAMES):
        for j, y in enumerate(_BASIS_NAMES):
            prod = alambda_multiply(ALambdaElement.basis(lam, x),
                                    ALambdaElement.basis(lam, y))
            products[f"{x}*{y}"] = str(prod)
    corners = {}
    for side in ("plus", "minus"):
        for left in (False, True):
            c = corner_data(lam, side, left)
            key = f"{'left' if left else 'right'}_{side}"
            corners[key] = {
                "idempotent": str(c.idempotent),
                "basis": [str(b) for b in c.basis],
                "radical_line": str(c.radical_line),
            }
    simples = []
    for cand in simple_modules(lam):
        entry = {
            "label": cand.label,
            "dim": cand.dim,
            "g": [[str(c) for c in row] for row in cand.rep.G],
            "h": [[str(c) for c in row] for row in cand.rep.H],
            "axiom_pass": cand.axiom.ok,
        }
        if cand.axiom.ok:
            entry["irreducible"] = is_irreducible(cand.rep)
        else:
            entry["axiom_witness"] = cand.axiom.witness
        simples.append(entry)
    return {
        "lambda": str(lam),
        "basis_products": products,
        "idempotents": {"e1": str(e1), "e2": str(e2)},
        "corners": corners,
        "simple_modules": simples,
    }
