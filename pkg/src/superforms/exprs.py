"""Composable matrix-level automorphism expressions.

An expression is a tuple of *steps written in composition order* (like
``f = step0 after step1 after ...``), so evaluation applies the steps from the
right end of the tuple to the left.  Steps:

* ``("conj",)``                 — entrywise coefficient conjugation;
* ``("negst",)``                — negated supertranspose;
* ``("pi",)``                   — parity swap (equal block sizes only);
* ``("neg",)``                  — negation;
* ``("delta", lam)``            — scale the B block by ``lam``, C by ``lam^-1``;
* ``("ad", label, K, K_inv)``   — conjugation by a constant invertible grid;
* ``("ginv",)``                 — matrix inverse (group-level expressions only).
"""

from __future__ import annotations

from typing import Sequence, Tuple

from . import linalg
from .matrices import (
    SuperMatrix, const_mul, inverse, mul_const, parity_swap, scale_offdiagonal,
    supertranspose,
)
from .algebra import scalar
from .scalars import GaussianRational

Step = Tuple


def ad_step(label: str, grid) -> Step:
    return ("ad", label, tuple(tuple(r) for r in grid), tuple(tuple(r) for r in linalg.invert(grid)))


def conj_step() -> Step:
    return ("conj",)


def negst_step() -> Step:
    return ("negst",)


def pi_step() -> Step:
    return ("pi",)


def neg_step() -> Step:
    return ("neg",)


def delta_step(lam: GaussianRational) -> Step:
    return ("delta", lam)


def ginv_step() -> Step:
    return ("ginv",)


def apply_expr(steps: Sequence[Step], x: SuperMatrix, allow_inverse: bool = False) -> SuperMatrix:
    for step in reversed(steps):
        tag = step[0]
        if tag == "conj":
            x = x.conjugate_entries()
        elif tag == "negst":
            x = -supertranspose(x)
        elif tag == "pi":
            x = parity_swap(x)
        elif tag == "neg":
            x = -x
        elif tag == "delta":
            x = scale_offdiagonal(x, scalar(x.sig, step[1]))
        elif tag == "ad":
            x = const_mul(step[2], mul_const(x, step[3]))
        elif tag == "ginv":
            if not allow_inverse:
                raise ValueError("matrix inverse is a group-level step")
            x = inverse(x)
        else:
            raise ValueError(f"unknown step {tag!r}")
    return x


def step_display(step: Step) -> str:
    tag = step[0]
    if tag == "conj":
        return "ConjugateEntries"
    if tag == "negst":
        return "NegateSupertranspose"
    if tag == "pi":
        return "ParitySwap"
    if tag == "neg":
        return "Negate"
    if tag == "delta":
        from .scalars import format_scalar
        return f"ScaleOffDiagonal({format_scalar(step[1])})"
    if tag == "ad":
        return f"Ad({step[1]})"
    if tag == "ginv":
        return "GroupInverse"
    return repr(step)


def expr_display(steps: Sequence[Step]) -> list:
    return [step_display(s) for s in steps]
