"""Involutive transforms of the triple-product operator and its components.

For fixed parameters (u1, u2) the operator A u = (u1 conj(u)) u2 supports
three commuting involutions:

    +   Hermitian conjugation, (A u, v) = (u, A+ v),
    *   inversion of the multiplicative order of the three factors,
    v   conjugation of the central argument followed by conjugation
        of the whole product.

Words over {+, *, v} form the group (Z/2)^3; every transformed operator
has a closed form of the shape (x c) y or x (c y) with optionally
conjugated factors.  The closed forms are not hard-coded per word: they
are derived mechanically by applying the generator rewrites to the base
form, in every generator order, and the derivation fails loudly if any
two orders disagree.  Averaging the eight transformed operators with
sign patterns (eps_+, eps_*, eps_v) in {-1,+1}^3 yields components that
scale by the corresponding eps under each involution; the two-operation
averages over {+, *} reproduce the triple anticommutator, commutator and
associator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .core import DimensionError, Hyper, conjugate, inner, multiply, norm


@dataclass(frozen=True)
class OpWord:
    """Which of the three involutions are applied (order never matters)."""

    plus: bool = False
    star: bool = False
    vee: bool = False

    def compose(self, other: "OpWord") -> "OpWord":
        return OpWord(self.plus ^ other.plus, self.star ^ other.star, self.vee ^ other.vee)

    @property
    def label(self) -> str:
        s = ("+" if self.plus else "") + ("*" if self.star else "") + ("v" if self.vee else "")
        return s or "e"


IDENTITY_WORD = OpWord()
ALL_WORDS = tuple(
    OpWord(plus=bool(b & 1), star=bool(b & 2), vee=bool(b & 4)) for b in range(8)
)
TWO_OP_WORDS = ALL_WORDS[:4]  # e, +, *, +*


@dataclass(frozen=True)
class SignTriple:
    """Eigenvalue pattern (eps_+, eps_*, eps_v), each +1 or -1."""

    eps_plus: int
    eps_star: int
    eps_vee: int

    def __post_init__(self) -> None:
        for name in ("eps_plus", "eps_star", "eps_vee"):
            if getattr(self, name) not in (-1, 1):
                raise ValueError(f"{name} must be +1 or -1, got {getattr(self, name)!r}")

    @property
    def label(self) -> str:
        parts = ("+1" if e > 0 else "-1"
                 for e in (self.eps_plus, self.eps_star, self.eps_vee))
        return "({},{},{})".format(*parts)


# Ordered so that the sign pattern of the reconstruction coefficients is
# exactly the order-8 Hadamard matrix: bit 0 of the index flips eps_+,
# bit 1 flips eps_*, bit 2 flips eps_v.
ALL_SIGN_TRIPLES = tuple(
    SignTriple(1 - 2 * (b & 1), 1 - 2 * ((b >> 1) & 1), 1 - 2 * ((b >> 2) & 1))
    for b in range(8)
)


# -- closed-form derivation --------------------------------------------------


@dataclass(frozen=True)
class _Form:
    """Template (x c) y or x (c y): which parameter sits left, which factors
    carry a conjugation bar, and the bracketing."""

    left: int            # 1 or 2: index of the parameter in the left slot
    bar_left: bool
    bar_central: bool    # True: central factor is conj(u); False: plain u
    bar_right: bool
    left_assoc: bool     # True: (left central) right; False: left (central right)


_BASE_FORM = _Form(left=1, bar_left=False, bar_central=True, bar_right=False, left_assoc=True)


def _gen_plus(f: _Form) -> _Form:
    # Hermitian conjugation swaps the parameter subscripts in place.
    return _Form(3 - f.left, f.bar_left, f.bar_central, f.bar_right, f.left_assoc)


def _gen_star(f: _Form) -> _Form:
    # Order inversion reverses the three factors: (x c) y -> y (c x).
    return _Form(3 - f.left, f.bar_right, f.bar_central, f.bar_left, not f.left_assoc)


def _conjugate_form(f: _Form) -> _Form:
    # conj((x c) y) = conj(y) (conj(c) conj(x)): reverse, bar every factor.
    return _Form(3 - f.left, not f.bar_right, not f.bar_central, not f.bar_left,
                 not f.left_assoc)


def _gen_vee(f: _Form) -> _Form:
    # Replace the central argument by its conjugate, then conjugate the product.
    toggled = _Form(f.left, f.bar_left, not f.bar_central, f.bar_right, f.left_assoc)
    return _conjugate_form(toggled)


_GENERATORS = {"plus": _gen_plus, "star": _gen_star, "vee": _gen_vee}


def _derive_forms() -> dict[OpWord, _Form]:
    """Derive the closed form of every word from the generator rewrites.

    Applies the word's generators in every order and requires all orders to
    agree, so the commutativity of the rewrite system is checked rather than
    assumed.
    """
    forms: dict[OpWord, _Form] = {}
    for word in ALL_WORDS:
        gens = [g for g, on in (("plus", word.plus), ("star", word.star), ("vee", word.vee)) if on]
        candidates = set()
        for order in permutations(gens):
            f = _BASE_FORM
            for g in order:
                f = _GENERATORS[g](f)
            candidates.add(f)
        if len(candidates) != 1:
            raise RuntimeError(f"generator rewrites disagree for word {word.label}: {candidates}")
        forms[word] = candidates.pop()
    if len(set(forms.values())) != len(ALL_WORDS):
        raise RuntimeError("derived closed forms are not pairwise distinct")
    for word in ALL_WORDS:
        for name, gen in _GENERATORS.items():
            stepped = word.compose(OpWord(**{name: True}))
            if gen(forms[word]) != forms[stepped]:
                raise RuntimeError(f"rewrite of {word.label} by {name} is not {stepped.label}")
    return forms


_FORMS = _derive_forms()


# -- the operator ------------------------------------------------------------


@dataclass(frozen=True)
class TripleOperator:
    """The map u -> (u1 conj(u)) u2 with fixed parameters u1, u2."""

    u1: Hyper
    u2: Hyper

    def __post_init__(self) -> None:
        if self.u1.dim != self.u2.dim:
            raise DimensionError(
                f"operator parameters must share a dimension: {self.u1.dim} != {self.u2.dim}"
            )

    @property
    def dim(self) -> int:
        return self.u1.dim


def apply(op: TripleOperator, word: OpWord, u: Hyper) -> Hyper:
    """Evaluate the word-transformed operator at u."""
    if u.dim != op.dim:
        raise DimensionError(f"dimension mismatch: operand {u.dim} vs operator {op.dim}")
    form = _FORMS[word]
    params = (op.u1, op.u2)
    left = params[form.left - 1]
    right = params[2 - form.left]
    if form.bar_left:
        left = conjugate(left)
    if form.bar_right:
        right = conjugate(right)
    central = conjugate(u) if form.bar_central else u
    if form.left_assoc:
        return multiply(multiply(left, central), right)
    return multiply(left, multiply(central, right))


def adjoint_residual(op: TripleOperator, u: Hyper, v: Hyper,
                     word: OpWord = IDENTITY_WORD) -> float:
    """|(A^w u, v) - (u, A^{w+} v)|: how far the +-partner is from the true adjoint."""
    lhs = inner(apply(op, word, u), v)
    rhs = inner(u, apply(op, word.compose(OpWord(plus=True)), v))
    return abs(lhs - rhs)


def materialize(op: TripleOperator, word: OpWord = IDENTITY_WORD) -> np.ndarray:
    """Dense dim x dim matrix of the word-transformed operator (column k is
    the image of basis element k).  Second, matrix-level route to the adjoint:
    the +-partner's matrix must be the transpose."""
    n = op.dim
    mat = np.empty((n, n))
    for k in range(n):
        mat[:, k] = apply(op, word, Hyper.basis(n, k)).coeffs
    return mat


# -- symmetric / skew-symmetric components -----------------------------------


def _word_sign(word: OpWord, eps_plus: int, eps_star: int, eps_vee: int = 1) -> int:
    s = 1
    if word.plus:
        s *= eps_plus
    if word.star:
        s *= eps_star
    if word.vee:
        s *= eps_vee
    return s


def component2(op: TripleOperator, eps_plus: int, eps_star: int, u: Hyper) -> Hyper:
    """Average over {e, +, *, +*} with signs eps_+^a eps_*^b.

    (+1,+1) is the triple anticommutator, (-1,-1) the triple commutator,
    (-1,+1) the associator and (+1,-1) vanishes identically.
    """
    if eps_plus not in (-1, 1) or eps_star not in (-1, 1):
        raise ValueError("eigenvalue signs must be +1 or -1")
    acc = Hyper.zero(op.dim)
    for word in TWO_OP_WORDS:
        acc = acc + _word_sign(word, eps_plus, eps_star) * apply(op, word, u)
    return acc / 4


def component3(op: TripleOperator, signs: SignTriple, u: Hyper) -> Hyper:
    """Average over all eight words with signs eps_+^a eps_*^b eps_v^c."""
    acc = Hyper.zero(op.dim)
    for word in ALL_WORDS:
        acc = acc + _word_sign(word, signs.eps_plus, signs.eps_star, signs.eps_vee) * apply(op, word, u)
    return acc / 8


def _transformed_component3(op: TripleOperator, signs: SignTriple,
                            gen: OpWord, u: Hyper) -> Hyper:
    # Transform of the component operator: each term's word composes with gen.
    acc = Hyper.zero(op.dim)
    for word in ALL_WORDS:
        acc = acc + _word_sign(word, signs.eps_plus, signs.eps_star, signs.eps_vee) * apply(op, word.compose(gen), u)
    return acc / 8


def component3_eigen_residuals(op: TripleOperator, signs: SignTriple,
                               u: Hyper, v: Hyper) -> tuple[float, float, float]:
    """Residuals of the three eigen-relations of a component B = component3.

    Returns (r_plus, r_star, r_vee):
      r_plus  = |(B u, v) - eps_+ (u, B v)|       adjoint must scale B by eps_+
      r_star  = |B^* u - eps_* B u|                order inversion, term by term
      r_vee   = |B^v u - eps_v B u|                central/total conjugation

    The + relation is checked through the inner-product pairing, which
    exercises the Hermitian-conjugation content; * and v are definitional
    rewrites applied to every term.
    """
    base = component3(op, signs, u)
    r_plus = abs(inner(base, v) - signs.eps_plus * inner(u, component3(op, signs, v)))
    star = _transformed_component3(op, signs, OpWord(star=True), u)
    r_star = norm(star - signs.eps_star * base)
    vee = _transformed_component3(op, signs, OpWord(vee=True), u)
    r_vee = norm(vee - signs.eps_vee * base)
    return r_plus, r_star, r_vee
