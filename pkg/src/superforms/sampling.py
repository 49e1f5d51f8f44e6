"""Deterministic sampling of algebra elements and Lie-superalgebra points.

All randomness flows through :func:`rng_for`, which seeds ``random.Random``
with a string (string seeding hashes with SHA-512 internally, so streams are
stable across processes and do not depend on ``PYTHONHASHSEED``).  Every
consumer derives its stream from ``(seed, *tags)``, which is what makes the
whole suite byte-reproducible.

Coefficients are drawn from the small exact pool {0, +-1, +-i, +-1/2},
weighted toward zero so sampled elements stay sparse.
"""

from __future__ import annotations

import random
from typing import Optional

from .algebra import AlgebraSignature, EVEN, ODD, SuperNumber, basis_keys, scalar
from .liealg import MatrixKind, TensorElement, basis_of, matrix_of
from .matrices import SuperMatrix
from .scalars import GaussianRational, HALF, I, MINUS_I, MINUS_ONE, ONE, ZERO

MINUS_HALF = GaussianRational(-1, 0, 2)

# zero is deliberately over-weighted
_POOL = (ZERO, ZERO, ZERO, ZERO, ONE, MINUS_ONE, I, MINUS_I, HALF, MINUS_HALF)
_NONZERO_POOL = (ONE, MINUS_ONE, I, MINUS_I, HALF, MINUS_HALF)


def rng_for(seed: int, *tags: str) -> random.Random:
    return random.Random(f"{seed}|" + "|".join(tags))


def random_scalar(rng: random.Random) -> GaussianRational:
    return rng.choice(_POOL)


def random_nonzero_scalar(rng: random.Random) -> GaussianRational:
    return rng.choice(_NONZERO_POOL)


def random_element(sig: AlgebraSignature, rng: random.Random, parity: Optional[int] = None) -> SuperNumber:
    terms = {}
    for key in basis_keys(sig, parity):
        c = random_scalar(rng)
        if not c.is_zero():
            terms[key] = c
    return SuperNumber.from_terms(sig, terms)


def random_even(sig: AlgebraSignature, rng: random.Random) -> SuperNumber:
    return random_element(sig, rng, EVEN)


def random_odd(sig: AlgebraSignature, rng: random.Random) -> SuperNumber:
    return random_element(sig, rng, ODD)


def random_invertible_even(sig: AlgebraSignature, rng: random.Random) -> SuperNumber:
    x = random_even(sig, rng)
    if x.body().is_zero():
        x = x + scalar(sig, random_nonzero_scalar(rng))
    return x


def random_self_conjugate_even(sig: AlgebraSignature, rng: random.Random) -> SuperNumber:
    """A random even element fixed by the conjugation (b + conj(b) form)."""
    b = random_even(sig, rng)
    return b + b.conjugate()


def random_tensor(kind: MatrixKind, sig: AlgebraSignature, rng: random.Random) -> TensorElement:
    """A random point of ``g(A)`` in tensor form (parity-matched coefficients)."""
    coeffs = {}
    for v in basis_of(kind):
        c = random_element(sig, rng, v.parity)
        if not c.is_zero():
            coeffs[v.index] = c
    return TensorElement(kind, sig, coeffs, check=False)


def random_point(kind: MatrixKind, sig: AlgebraSignature, rng: random.Random) -> SuperMatrix:
    """A random point of ``g(A)`` as a matrix (exact member by construction)."""
    return matrix_of(random_tensor(kind, sig, rng))
