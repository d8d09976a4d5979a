"""Degree-truncated Nichols algebra computation.

The degree-n component of the Nichols algebra of a finite-dimensional
braided vector space V is realized as the image of the quantum
symmetrizer: the sum over S_n of the braid lifts of permutations (each
permutation is lifted along any reduced word; the braid equation makes the
lift reduced-word independent).  dim B^n(V) is then the exact rank of that
matrix over Q(zeta_N).

The sum over S_n is evaluated with the length-additive coset factorization
  Sym_n = (sum_{j=1..n} c_j c_{j+1} ... c_{n-1}) . (Sym_{n-1} (x) id),
which is the same matrix as the naive n!-term sum (the tests compare the
two for small n).  Infinite-dimensional modules are rejected: their
braiding indices grow without bound, so no finite window is c-stable.

Operations refuse degrees past the configured cap instead of switching to
approximation; the floating-point route exists only as an independent
cross-check oracle (linalg.numeric_rank).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Optional, Sequence

from . import linalg
from .field import Scalar
from .ydmod import BasisVector, YDModule, braid_word_at

DEGREE_CAP = 7

Word = tuple  # tuple of BasisVector


def braid_at(m: YDModule, i: int, w: Word):
    """Apply c to letters (i, i+1) of w, 1-indexed; returns (coeff, word)."""
    return braid_word_at(m, Scalar.one(m.order), tuple(w), i)


def reduced_word(p: Sequence[int]) -> tuple[int, ...]:
    """A reduced word (as 1-based adjacent transposition indices) for p.

    p is in one-line notation; repeatedly removing the first descent yields
    identity = p s_{i_1} ... s_{i_k}, so p = s_{i_k} ... s_{i_1}.
    """
    q = list(p)
    picked = []
    while True:
        i = next((j for j in range(len(q) - 1) if q[j] > q[j + 1]), None)
        if i is None:
            break
        q[i], q[i + 1] = q[i + 1], q[i]
        picked.append(i + 1)
    return tuple(reversed(picked))


def reduced_word_alt(p: Sequence[int]) -> tuple[int, ...]:
    """An independently chosen reduced word (last descent first)."""
    q = list(p)
    picked = []
    while True:
        i = next((j for j in range(len(q) - 2, -1, -1) if q[j] > q[j + 1]), None)
        if i is None:
            break
        q[i], q[i + 1] = q[i + 1], q[i]
        picked.append(i + 1)
    return tuple(reversed(picked))


@dataclass(frozen=True)
class MonomialOperator:
    """Composition of braidings along a position chain.

    Monomial: every word maps to a single scalar multiple of a word of the
    same length.  ``positions`` are applied right to left, matching operator
    composition c_{i1} o ... o c_{ik}.
    """

    module: YDModule
    positions: tuple[int, ...]

    def apply(self, w: Word):
        coeff = Scalar.one(self.module.order)
        word = tuple(w)
        for i in reversed(self.positions):
            coeff, word = braid_word_at(self.module, coeff, word, i)
        return coeff, word

    def matrix(self, length: int, basis=None):
        words = word_basis(self.module, length, basis)
        index = {w: k for k, w in enumerate(words)}
        out = linalg.zeros(len(words), len(words), self.module.order)
        for k, w in enumerate(words):
            coeff, image = self.apply(w)
            out[index[image]][k] = coeff
        return out


def lift_permutation(m: YDModule, p: Sequence[int],
                     cap: int = DEGREE_CAP) -> MonomialOperator:
    """Braid lift of a permutation of {1..n} along a reduced word.

    Well-defined independently of the chosen reduced word because the
    braiding satisfies the braid equation.
    """
    if len(p) > cap:
        raise ValueError(f"degree {len(p)} exceeds the configured cap {cap}")
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{p!r} is not a permutation in one-line notation")
    return MonomialOperator(m, reduced_word(p))


def word_basis(m: YDModule, length: int, basis=None) -> list[Word]:
    if m.dim is None:
        raise ValueError("word basis requires a finite-dimensional module")
    letters = list(basis) if basis is not None else m.basis()
    return [tuple(w) for w in iter_product(letters, repeat=length)]


def _tensor_with_identity(prev, d: int, order: int):
    size = len(prev) * d
    out = linalg.zeros(size, size, order)
    for p, row in enumerate(prev):
        for q, val in enumerate(row):
            if not val.is_zero():
                for a in range(d):
                    out[p * d + a][q * d + a] = val
    return out


def quantum_symmetrizer(m: YDModule, degree: int, basis=None,
                        cap: int = DEGREE_CAP):
    """Matrix of the degree-n quantum symmetrizer in the word basis of V^(x)n.

    Equals the sum of lift_permutation over all of S_n; computed by the
    coset factorization described in the module docstring.
    """
    if m.dim is None:
        raise ValueError("quantum symmetrizer requires a finite-dimensional module")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if degree > cap:
        raise ValueError(f"degree {degree} exceeds the configured cap {cap}")
    letters = list(basis) if basis is not None else m.basis()
    current = linalg.identity(m.dim, m.order)
    for n in range(2, degree + 1):
        current = _symmetrizer_step(m, current, letters, n)
    return current


def quantum_symmetrizer_naive(m: YDModule, degree: int, basis=None,
                              cap: int = DEGREE_CAP):
    """The definitional n!-term sum; kept as the oracle for the fast route."""
    from itertools import permutations

    if degree > cap:
        raise ValueError(f"degree {degree} exceeds the configured cap {cap}")
    words = word_basis(m, degree, basis)
    out = linalg.zeros(len(words), len(words), m.order)
    for p in permutations(range(1, degree + 1)):
        mat = lift_permutation(m, p, cap).matrix(degree, basis)
        for i in range(len(words)):
            for j in range(len(words)):
                if not mat[i][j].is_zero():
                    out[i][j] = out[i][j] + mat[i][j]
    return out


@dataclass(frozen=True)
class HilbertPrefix:
    """dims[n] = dim B^n(V) for n = 0..N."""

    dims: tuple[int, ...]

    def __post_init__(self):
        if not self.dims or self.dims[0] != 1:
            raise ValueError("dims[0] must be 1")
        if any(d < 0 for d in self.dims):
            raise ValueError("graded dimensions are non-negative")

    def __iter__(self):
        return iter(self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def __len__(self):
        return len(self.dims)


def graded_dims(m: YDModule, max_degree: int, basis=None,
                cap: int = DEGREE_CAP) -> HilbertPrefix:
    """Exact graded dimensions of the Nichols algebra up to max_degree."""
    if m.dim is None:
        raise ValueError("graded_dims requires a finite-dimensional module; "
                         "infinite-support families are classified by rule R1")
    if max_degree > cap:
        raise ValueError(f"max degree {max_degree} exceeds the configured cap {cap}")
    dims = [1]
    if max_degree >= 1:
        dims.append(m.dim)
    d = m.dim
    letters = list(basis) if basis is not None else m.basis()
    current = linalg.identity(d, m.order)
    for n in range(2, max_degree + 1):
        current = _symmetrizer_step(m, current, letters, n)
        dims.append(linalg.exact_rank(current))
    return HilbertPrefix(tuple(dims))


def _symmetrizer_step(m, prev, letters, n):
    # one degree of the iteration inside quantum_symmetrizer
    d = len(letters)
    expanded = _tensor_with_identity(prev, d, m.order)
    words = [tuple(w) for w in iter_product(letters, repeat=n)]
    index = {w: k for k, w in enumerate(words)}
    size = len(words)
    result = [row[:] for row in expanded]
    for j in range(1, n):
        chain = tuple(range(j, n))
        for k, w in enumerate(words):
            coeff = Scalar.one(m.order)
            word = w
            for i in reversed(chain):
                coeff, word = braid_word_at(m, coeff, word, i)
            target = result[index[word]]
            src = expanded[k]
            for col in range(size):
                v = src[col]
                if not v.is_zero():
                    target[col] = target[col] + coeff * v
    return result


# -- growth analysis ----------------------------------------------------------

POLYNOMIAL = "PolynomialDegree"
TERMINATES = "TerminatesAt"
SUPERPOLYNOMIAL = "SuperPolynomialSuspected"
INCONCLUSIVE = "Inconclusive"

_RATIO_MARGIN = 0.25


@dataclass(frozen=True)
class GrowthFit:
    kind: str
    value: Optional[int] = None

    def __str__(self):
        if self.value is None:
            return self.kind
        return f"{self.kind}({self.value})"

    def as_json(self):
        out = {"kind": self.kind}
        if self.value is not None:
            out["value"] = self.value
        return out


def growth_fit(prefix) -> GrowthFit:
    """Heuristic GK-dimension estimate from a Hilbert prefix.

    Order of tests: a tail of >= 3 zeros means the algebra terminates
    (estimate 0); persistently large dim ratios suggest superpolynomial
    growth; otherwise the estimate is the minimal degree of a polynomial
    interpolating the cumulative sums on the last half of the prefix.
    Always an estimate from a truncation, never a proof.
    """
    dims = list(prefix.dims if isinstance(prefix, HilbertPrefix) else prefix)
    if len(dims) < 4:
        raise ValueError("growth_fit needs a prefix of length >= 4")
    # a zero followed by a nonzero cannot happen for monomial braidings;
    # treat it as evidence of a bug rather than growth data
    for i in range(len(dims) - 1):
        if dims[i] == 0 and dims[i + 1] != 0:
            return GrowthFit(INCONCLUSIVE)
    if dims[-1] == 0:
        zeros = 0
        for d in reversed(dims):
            if d != 0:
                break
            zeros += 1
        if zeros >= 3:
            return GrowthFit(TERMINATES, len(dims) - zeros)
        return GrowthFit(INCONCLUSIVE)
    half = (len(dims) + 1) // 2
    ratios = [dims[i + 1] / dims[i] for i in range(len(dims) - 1)]
    tail = ratios[-half:]
    if tail and all(r >= 1 + _RATIO_MARGIN for r in tail):
        return GrowthFit(SUPERPOLYNOMIAL)
    sums = []
    acc = 0
    for d in dims:
        acc += d
        sums.append(acc)
    pts = sums[-half:]
    level = pts
    degree = 0
    while len(set(level)) > 1:
        level = [b - a for a, b in zip(level, level[1:])]
        degree += 1
    return GrowthFit(POLYNOMIAL, degree)
