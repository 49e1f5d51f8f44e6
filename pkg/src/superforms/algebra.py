"""Finite-dimensional Grassmann coefficient algebras with conjugation.

A coefficient algebra here is generated over Q(i) by

* ``odd_pairs`` conjugate pairs of odd generators  (written ``t1, t1~, t2, ...``),
* ``odd_selfreal`` self-conjugate odd generators   (only with standard conjugation),
* ``even_nilpotents`` square-zero even generators  (written ``e1, e2, ...``),

subject to supercommutativity (odd generators anticommute, odd squares vanish)
and ``e_j^2 = 0``.  Two antilinear conjugations are supported, both extended to
products as algebra homomorphisms (``conj(ab) = conj(a) conj(b)``):

* ``standard``:  swaps each pair ``t_k <-> t_k~``, fixes self-real odd and even
  generators; it is involutive.
* ``graded``:    ``t_k -> t_k~``, ``t_k~ -> -t_k``, fixes even generators; its
  square is the parity sign (``+`` on even elements, ``-`` on odd ones).

Internally a monomial is a single int key: the low 8 bits are the odd-generator
mask (ids ``2k``/``2k+1`` for the k-th pair, then self-real ids), the bits above
are the even-nilpotent mask.  Reordering signs come from inversion counts of the
odd masks and are cached globally, since they do not depend on the signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .scalars import GaussianRational, ONE, ZERO

STANDARD = "standard"
GRADED = "graded"

EVEN = 0
ODD = 1

MAX_ODD = 8
MAX_EVEN_NILPOTENT = 4

_ODD_BITS = 8  # odd mask lives in the low 8 bits of a monomial key


class NotInvertible(ValueError):
    """Raised when inverting an element whose body (constant term) is zero."""


class MorphismError(ValueError):
    """Raised when generator images do not define a valid algebra morphism."""


@dataclass(frozen=True)
class AlgebraSignature:
    """Shape of a coefficient algebra: generator counts plus conjugation kind."""

    odd_pairs: int = 0
    odd_selfreal: int = 0
    even_nilpotents: int = 0
    conjugation: str = STANDARD

    def __post_init__(self):
        if self.odd_pairs < 0 or self.odd_selfreal < 0 or self.even_nilpotents < 0:
            raise ValueError("negative generator count")
        if self.conjugation not in (STANDARD, GRADED):
            raise ValueError(f"unknown conjugation kind {self.conjugation!r}")
        if self.conjugation == GRADED and self.odd_selfreal:
            raise ValueError("graded conjugation admits no self-real odd generators")
        if 2 * self.odd_pairs + self.odd_selfreal > MAX_ODD:
            raise ValueError(f"at most {MAX_ODD} odd generators supported")
        if self.even_nilpotents > MAX_EVEN_NILPOTENT:
            raise ValueError(f"at most {MAX_EVEN_NILPOTENT} even nilpotent generators supported")

    @property
    def odd_total(self) -> int:
        return 2 * self.odd_pairs + self.odd_selfreal

    @property
    def dimension(self) -> int:
        """Dimension over Q(i)."""
        return 1 << (self.odd_total + self.even_nilpotents)

    def extended(self, extra_even: int = 1) -> "AlgebraSignature":
        """The same signature with ``extra_even`` more even nilpotent generators."""
        return AlgebraSignature(
            self.odd_pairs, self.odd_selfreal, self.even_nilpotents + extra_even, self.conjugation
        )


# ---------------------------------------------------------------------------
# monomial keys
# ---------------------------------------------------------------------------

def make_key(odd_mask: int, even_mask: int) -> int:
    return odd_mask | (even_mask << _ODD_BITS)


def odd_mask_of(key: int) -> int:
    return key & 0xFF


def even_mask_of(key: int) -> int:
    return key >> _ODD_BITS


def key_parity(key: int) -> int:
    return (key & 0xFF).bit_count() & 1


_MUL_CACHE: Dict[Tuple[int, int], Optional[Tuple[int, int]]] = {}


def mono_mul(k1: int, k2: int) -> Optional[Tuple[int, int]]:
    """Product of two monomial keys: ``None`` if zero, else ``(key, sign)``.

    The sign is the parity of merging the two ascending odd-generator lists,
    i.e. the number of pairs (i in k1, j in k2) with i > j.
    """
    cached = _MUL_CACHE.get((k1, k2))
    if cached is not None or (k1, k2) in _MUL_CACHE:
        return cached
    o1, o2 = k1 & 0xFF, k2 & 0xFF
    e1, e2 = k1 >> _ODD_BITS, k2 >> _ODD_BITS
    if (o1 & o2) or (e1 & e2):
        result = None
    else:
        inversions = 0
        rest = o2
        while rest:
            low = rest & -rest
            # bits of o1 strictly above this bit of o2
            inversions += (o1 & ~(low | (low - 1))).bit_count()
            rest ^= low
        sign = -1 if (inversions & 1) else 1
        result = (make_key(o1 | o2, e1 | e2), sign)
    _MUL_CACHE[(k1, k2)] = result
    return result


def _sort_sign(ids: list) -> int:
    """Parity sign for sorting a list of distinct odd-generator ids ascending."""
    inversions = 0
    for a in range(len(ids)):
        for b in range(a + 1, len(ids)):
            if ids[a] > ids[b]:
                inversions += 1
    return -1 if (inversions & 1) else 1


_CONJ_CACHE: Dict[Tuple[int, int, str, int], Tuple[int, int]] = {}


def _conj_key(sig: AlgebraSignature, omask: int) -> Tuple[int, int]:
    """Image (key-mask, sign) of an odd monomial mask under conjugation."""
    cache_key = (sig.odd_pairs, sig.odd_selfreal, sig.conjugation, omask)
    hit = _CONJ_CACHE.get(cache_key)
    if hit is not None:
        return hit
    pair_ids = 2 * sig.odd_pairs
    mapped = []
    sign = 1
    rest = omask
    while rest:
        low = rest & -rest
        gid = low.bit_length() - 1
        rest ^= low
        if gid >= pair_ids:           # self-real: fixed (standard conjugation only)
            mapped.append(gid)
        elif sig.conjugation == STANDARD:
            mapped.append(gid ^ 1)    # swap t_k <-> t_k~
        else:                         # graded: t -> t~, t~ -> -t
            if gid & 1:
                mapped.append(gid - 1)
                sign = -sign
            else:
                mapped.append(gid + 1)
    sign *= _sort_sign(mapped)
    out_mask = 0
    for gid in mapped:
        out_mask |= 1 << gid
    result = (out_mask, sign)
    _CONJ_CACHE[cache_key] = result
    return result


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

class SuperNumber:
    """An element of a coefficient algebra: monomial-key -> Q(i) coefficient.

    Instances are treated as immutable; the term dict never contains zero
    coefficients.  Construct with the module helpers (``scalar``, ``theta``,
    ``epsilon``, ...) or :meth:`from_terms`.
    """

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: AlgebraSignature, terms: Dict[int, GaussianRational]):
        self.sig = sig
        self._terms = terms

    # -- construction --------------------------------------------------------

    @staticmethod
    def from_terms(sig: AlgebraSignature, terms: Dict[int, GaussianRational]) -> "SuperNumber":
        return SuperNumber(sig, {k: c for k, c in terms.items() if not c.is_zero()})

    @staticmethod
    def zero(sig: AlgebraSignature) -> "SuperNumber":
        return SuperNumber(sig, {})

    # -- inspection -----------------------------------------------------------

    def items(self) -> Iterator[Tuple[int, GaussianRational]]:
        return iter(self._terms.items())

    def coefficient(self, key: int) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def body(self) -> GaussianRational:
        """The constant (degree-zero) coefficient."""
        return self._terms.get(0, ZERO)

    def soul(self) -> "SuperNumber":
        """The nilpotent part: everything except the constant term."""
        return SuperNumber(self.sig, {k: c for k, c in self._terms.items() if k != 0})

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def is_even(self) -> bool:
        return all(key_parity(k) == EVEN for k in self._terms)

    def is_odd(self) -> bool:
        return all(key_parity(k) == ODD for k in self._terms)

    def parity(self) -> Optional[int]:
        """EVEN, ODD, or ``None`` for mixed.  The zero element counts as even."""
        if not self._terms:
            return EVEN
        parities = {key_parity(k) for k in self._terms}
        if len(parities) > 1:
            return None
        return parities.pop()

    def parity_part(self, parity: int) -> "SuperNumber":
        return SuperNumber(self.sig, {k: c for k, c in self._terms.items() if key_parity(k) == parity})

    def is_invertible(self) -> bool:
        return not self.body().is_zero()

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ------------------------------------------------------------

    def _check_sig(self, other: "SuperNumber"):
        if self.sig != other.sig:
            raise ValueError("mixing elements of different coefficient algebras")

    def __add__(self, other: "SuperNumber") -> "SuperNumber":
        self._check_sig(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            cur = out.get(k)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SuperNumber(self.sig, out)

    def __sub__(self, other: "SuperNumber") -> "SuperNumber":
        self._check_sig(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            cur = out.get(k)
            s = -c if cur is None else cur - c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SuperNumber(self.sig, out)

    def __neg__(self) -> "SuperNumber":
        return SuperNumber(self.sig, {k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperNumber):
            self._check_sig(other)
            out: Dict[int, GaussianRational] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    merged = mono_mul(k1, k2)
                    if merged is None:
                        continue
                    key, sign = merged
                    c = c1 * c2
                    if sign < 0:
                        c = -c
                    cur = out.get(key)
                    s = c if cur is None else cur + c
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
            return SuperNumber(self.sig, out)
        if isinstance(other, GaussianRational):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, GaussianRational):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c: GaussianRational) -> "SuperNumber":
        if c.is_zero():
            return SuperNumber(self.sig, {})
        return SuperNumber(self.sig, {k: v * c for k, v in self._terms.items()})

    def conjugate(self) -> "SuperNumber":
        out: Dict[int, GaussianRational] = {}
        for k, c in self._terms.items():
            omask, sign = _conj_key(self.sig, odd_mask_of(k))
            key = make_key(omask, even_mask_of(k))
            cc = c.conjugate()
            if sign < 0:
                cc = -cc
            cur = out.get(key)
            s = cc if cur is None else cur + cc
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SuperNumber(self.sig, out)

    def inverse(self) -> "SuperNumber":
        """Exact inverse via the geometric series of the nilpotent part."""
        b = self.body()
        if b.is_zero():
            raise NotInvertible("element has zero body")
        binv = b.inverse()
        # self = b (1 + n) with n nilpotent; inverse = b^-1 sum (-n)^k
        n = self.soul().scaled(binv)
        acc = scalar(self.sig, ONE)
        power = scalar(self.sig, ONE)
        while True:
            power = -(power * n)
            if power.is_zero():
                break
            acc = acc + power
        return acc.scaled(binv)

    # -- comparison / display ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperNumber):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self):
        return hash((self.sig, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from .literals import format_number
        return f"<{format_number(self)}>"


# ---------------------------------------------------------------------------
# generator accessors
# ---------------------------------------------------------------------------

def scalar(sig: AlgebraSignature, value: GaussianRational) -> SuperNumber:
    if value.is_zero():
        return SuperNumber(sig, {})
    return SuperNumber(sig, {0: value})


def one(sig: AlgebraSignature) -> SuperNumber:
    return scalar(sig, ONE)


def theta(sig: AlgebraSignature, pair: int) -> SuperNumber:
    """The first member ``t_{pair+1}`` of an odd conjugate pair (0-indexed)."""
    if not 0 <= pair < sig.odd_pairs:
        raise IndexError("pair index out of range")
    return SuperNumber(sig, {make_key(1 << (2 * pair), 0): ONE})


def theta_bar(sig: AlgebraSignature, pair: int) -> SuperNumber:
    """The second member ``t_{pair+1}~`` of an odd conjugate pair (0-indexed)."""
    if not 0 <= pair < sig.odd_pairs:
        raise IndexError("pair index out of range")
    return SuperNumber(sig, {make_key(1 << (2 * pair + 1), 0): ONE})


def theta_selfreal(sig: AlgebraSignature, index: int) -> SuperNumber:
    """The ``index``-th self-conjugate odd generator (0-indexed)."""
    if not 0 <= index < sig.odd_selfreal:
        raise IndexError("self-real index out of range")
    return SuperNumber(sig, {make_key(1 << (2 * sig.odd_pairs + index), 0): ONE})


def epsilon(sig: AlgebraSignature, index: int = 0) -> SuperNumber:
    """The ``index``-th even square-zero generator (0-indexed)."""
    if not 0 <= index < sig.even_nilpotents:
        raise IndexError("even nilpotent index out of range")
    return SuperNumber(sig, {make_key(0, 1 << index): ONE})


def odd_generator(sig: AlgebraSignature, gid: int) -> SuperNumber:
    """Odd generator by raw id (pairs first at ``2k``/``2k+1``, then self-real)."""
    if not 0 <= gid < sig.odd_total:
        raise IndexError("odd generator id out of range")
    return SuperNumber(sig, {make_key(1 << gid, 0): ONE})


def basis_keys(sig: AlgebraSignature, parity: Optional[int] = None) -> list:
    """All monomial keys of the algebra, optionally restricted to one parity.

    Keys are listed in increasing numeric order, which makes every
    coordinate-based computation in the package deterministic.
    """
    keys = []
    for emask in range(1 << sig.even_nilpotents):
        for omask in range(1 << sig.odd_total):
            key = make_key(omask, emask)
            if parity is None or key_parity(key) == parity:
                keys.append(key)
    keys.sort()
    return keys


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

class AlgebraMorphism:
    """A Q(i)-linear algebra homomorphism determined by generator images.

    Images must preserve parity and the square-zero relations; whether the
    morphism intertwines the conjugations is checked on generators (it then
    propagates to the whole algebra by multiplicativity and antilinearity of
    the conjugations).
    """

    __slots__ = ("src", "tgt", "odd_images", "even_images", "respects_conjugation", "_cache")

    def __init__(
        self,
        src: AlgebraSignature,
        tgt: AlgebraSignature,
        odd_images: Iterable[SuperNumber],
        even_images: Iterable[SuperNumber],
        require_conjugation: bool = False,
    ):
        self.src = src
        self.tgt = tgt
        self.odd_images = list(odd_images)
        self.even_images = list(even_images)
        if len(self.odd_images) != src.odd_total:
            raise MorphismError("wrong number of odd generator images")
        if len(self.even_images) != src.even_nilpotents:
            raise MorphismError("wrong number of even generator images")
        for img in self.odd_images:
            if img.sig != tgt or not img.is_odd():
                raise MorphismError("odd generator image must be an odd element of the target")
        for img in self.even_images:
            if img.sig != tgt or not img.is_even():
                raise MorphismError("even generator image must be an even element of the target")
            if not (img * img).is_zero():
                raise MorphismError("even generator image must square to zero")
        self._cache: Dict[int, SuperNumber] = {}
        self.respects_conjugation = self._conjugation_ok()
        if require_conjugation and not self.respects_conjugation:
            raise MorphismError("generator images do not intertwine the conjugations")

    def _conjugation_ok(self) -> bool:
        if self.src.conjugation != self.tgt.conjugation:
            return False
        for gid in range(self.src.odd_total):
            g = odd_generator(self.src, gid)
            if self.apply(g.conjugate()) != self.apply(g).conjugate():
                return False
        for j in range(self.src.even_nilpotents):
            e = epsilon(self.src, j)
            if self.apply(e.conjugate()) != self.apply(e).conjugate():
                return False
        return True

    def _image_of_key(self, key: int) -> SuperNumber:
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        img = one(self.tgt)
        omask = odd_mask_of(key)
        while omask:
            low = omask & -omask
            img = img * self.odd_images[low.bit_length() - 1]
            omask ^= low
        emask = even_mask_of(key)
        while emask:
            low = emask & -emask
            img = img * self.even_images[low.bit_length() - 1]
            emask ^= low
        self._cache[key] = img
        return img

    def apply(self, x: SuperNumber) -> SuperNumber:
        if x.sig != self.src:
            raise ValueError("element does not belong to the morphism's source algebra")
        acc = SuperNumber.zero(self.tgt)
        for key, c in x.items():
            acc = acc + self._image_of_key(key).scaled(c)
        return acc


def identity_morphism(sig: AlgebraSignature) -> AlgebraMorphism:
    return AlgebraMorphism(
        sig, sig,
        [odd_generator(sig, g) for g in range(sig.odd_total)],
        [epsilon(sig, j) for j in range(sig.even_nilpotents)],
    )


def adjoin_dual(sig: AlgebraSignature):
    """Adjoin one even square-zero generator: ``A -> A(eps)``.

    Returns ``(ext, include, project, eps)`` where ``include: A -> A(eps)`` is
    the inclusion, ``project: A(eps) -> A`` kills the new generator, and ``eps``
    is the new generator as an element of the extension.  Both morphisms
    intertwine the conjugations (the new generator is self-conjugate).
    """
    ext = sig.extended(1)
    new_index = sig.even_nilpotents
    include = AlgebraMorphism(
        sig, ext,
        [odd_generator(ext, g) for g in range(sig.odd_total)],
        [epsilon(ext, j) for j in range(sig.even_nilpotents)],
    )
    project = AlgebraMorphism(
        ext, sig,
        [odd_generator(sig, g) for g in range(sig.odd_total)],
        [epsilon(sig, j) for j in range(sig.even_nilpotents)] + [SuperNumber.zero(sig)],
    )
    return ext, include, project, epsilon(ext, new_index)


def dual_scale_morphism(sig: AlgebraSignature, a: SuperNumber, eps_index: Optional[int] = None) -> AlgebraMorphism:
    """The endomorphism of ``A(eps)`` fixing every generator except ``eps -> a*eps``.

    ``sig`` is the extended signature; ``a`` may live in it (its coefficient on
    monomials involving the scaled generator must vanish) and must be even.
    The morphism intertwines conjugation exactly when ``conj(a) == a``.
    """
    if eps_index is None:
        eps_index = sig.even_nilpotents - 1
    if a.sig != sig:
        raise ValueError("scaling element must live in the extended algebra")
    if not a.is_even():
        raise MorphismError("scaling element must be even")
    eps = epsilon(sig, eps_index)
    even_images = [
        a * eps if j == eps_index else epsilon(sig, j)
        for j in range(sig.even_nilpotents)
    ]
    return AlgebraMorphism(
        sig, sig,
        [odd_generator(sig, g) for g in range(sig.odd_total)],
        even_images,
    )


def kill_pair_projection(sig: AlgebraSignature, pair: int) -> AlgebraMorphism:
    """Project onto the algebra with one fewer odd pair (the last-index pair
    re-labelled), sending both members of the given pair to zero.

    The target keeps all other generators; the map intertwines conjugation
    because conjugation permutes each pair separately.
    """
    if not 0 <= pair < sig.odd_pairs:
        raise IndexError("pair index out of range")
    tgt = AlgebraSignature(sig.odd_pairs - 1, sig.odd_selfreal, sig.even_nilpotents, sig.conjugation)
    odd_images = []
    for gid in range(sig.odd_total):
        k, member = divmod(gid, 2)
        if gid >= 2 * sig.odd_pairs:  # self-real block shifts down one pair
            odd_images.append(odd_generator(tgt, gid - 2))
        elif k == pair:
            odd_images.append(SuperNumber.zero(tgt))
        elif k > pair:
            odd_images.append(odd_generator(tgt, 2 * (k - 1) + member))
        else:
            odd_images.append(odd_generator(tgt, gid))
    return AlgebraMorphism(
        sig, tgt, odd_images,
        [epsilon(tgt, j) for j in range(sig.even_nilpotents)],
    )


def include_pairs(src: AlgebraSignature, tgt: AlgebraSignature) -> AlgebraMorphism:
    """Inclusion of a smaller signature into a larger one (same conjugation),
    matching pairs, self-real generators and even generators by index."""
    if (src.conjugation != tgt.conjugation or src.odd_pairs > tgt.odd_pairs
            or src.odd_selfreal > tgt.odd_selfreal or src.even_nilpotents > tgt.even_nilpotents):
        raise MorphismError("source signature does not embed in target")
    odd_images = []
    for gid in range(src.odd_total):
        if gid < 2 * src.odd_pairs:
            odd_images.append(odd_generator(tgt, gid))
        else:
            odd_images.append(odd_generator(tgt, 2 * tgt.odd_pairs + (gid - 2 * src.odd_pairs)))
    return AlgebraMorphism(
        src, tgt, odd_images,
        [epsilon(tgt, j) for j in range(src.even_nilpotents)],
    )
