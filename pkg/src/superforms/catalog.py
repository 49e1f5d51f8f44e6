"""Catalog of real-structure descriptors for the sl and osp families.

Each descriptor packages one antilinear involution of a matrix Lie
superalgebra functor: a composable expression (see :mod:`superforms.exprs`),
the conjugation kind of the coefficient algebras it acts over, parameter data,
applicability conditions, and how the map lifts to the supergroup.

Names and side conditions (h = half the odd block size for osp):

========  ======  ==========  =====================================  =======
name      family  params      conditions                             lift
========  ======  ==========  =====================================  =======
sigma1    sl      p<=m, q<=n  —                                      inv-neg
sigma2    sl      —           m, n even                               direct
sigma3    sl      —           m == n                                  direct
sigma4    sl      —           m == n, m even                          inv-neg
omega1    sl      —           n even                                  direct
omega2    sl      p<=m, q<=n  —                                      inv-neg
omega3    sl      —           m == n                                  direct
xi1       osp     p<=m        —                                       direct
xi2       osp     p<=h        m even                                  direct
psi1      osp     p<=m, q<=h  —                                       direct
psi2      osp     —           m even                                  direct
========  ======  ==========  =====================================  =======

sigma/xi descriptors act over standard-conjugation coefficient algebras,
omega/psi over graded-conjugation ones.  ``inv-neg`` lifts compose the base
expression with negation and the matrix inverse, which turns the base
antiautomorphism into a multiplicative map on group points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .algebra import GRADED, STANDARD
from .exprs import (
    Step, ad_step, conj_step, delta_step, expr_display, ginv_step, neg_step,
    negst_step, pi_step,
)
from .liealg import OSP, SL, MatrixKind
from .matrices import block_diag_grid, identity_grid, signature_grid, symplectic_grid
from .scalars import I, MINUS_ONE, ONE, ZERO


class InapplicableDescriptor(ValueError):
    """The named descriptor does not exist for this family/shape/parameters."""


SL_NAMES = ("sigma1", "sigma2", "sigma3", "sigma4", "omega1", "omega2", "omega3")
OSP_NAMES = ("xi1", "xi2", "psi1", "psi2")

# descriptors whose group lift is (negate then invert) rather than the same formula
INVERSE_NEG = frozenset({"sigma1", "sigma4", "omega2"})

PARAM_ARITY = {
    "sigma1": 2, "omega2": 2, "psi1": 2,
    "xi1": 1, "xi2": 1,
}

NOTE_SIGMA1 = (
    "sigma1: the inner conjugating matrix is diag(I_m^p, I_n^q); "
    "the q-signed block is sized to the lower-right block."
)
NOTE_XI2_DEFAULT = (
    "xi2: stored form Ad(diag(J_m, S)) * conj with S the p-signed symplectic "
    "twist of the odd block; this is the antilinear involutive completion of "
    "the linear strict variant (available via strict mode)."
)
NOTE_XI2_STRICT = (
    "xi2 strict variant: complex-linear Ad(diag(J_m, I_h^p, I_h^p)) with no "
    "conjugation; its antilinearity, involutivity, and twisted-naturality "
    "failures are reported as flagged, not failed."
)
NOTE_PSI1 = (
    "psi1: the odd-block twist is read as diag(I_h^q, I_h^q) composed with the "
    "symplectic unit; other readings of the same data exist, so psi1 results "
    "carry this note."
)


@dataclass(frozen=True)
class Descriptor:
    name: str
    kind: MatrixKind
    conjugation: str
    steps: Tuple[Step, ...]
    params: Tuple[Tuple[str, int], ...] = ()
    notes: Tuple[str, ...] = ()
    strict: bool = False
    expected_flagged: frozenset = frozenset()
    lift_form: str = "direct"

    def display(self, group: bool = False) -> str:
        shape = f"({self.kind.m}|{self.kind.n})"
        fam = {SL: "SL", OSP: "OSp"}[self.kind.family] if group else self.kind.family
        name = self.name.capitalize() if group else self.name
        params = ""
        if self.params:
            params = "(" + ",".join(str(v) for _, v in self.params) + ")"
        return f"{fam}{shape}:{name}{params}"

    def param_dict(self) -> Dict[str, int]:
        return dict(self.params)

    def lift_steps(self) -> Tuple[Step, ...]:
        if self.lift_form == "inverse-neg":
            return (ginv_step(), neg_step()) + self.steps
        return self.steps


def names_for(kind: MatrixKind) -> Tuple[str, ...]:
    return SL_NAMES if kind.family == SL else OSP_NAMES


def applicable_names(kind: MatrixKind) -> Tuple[str, ...]:
    out = []
    for name in names_for(kind):
        try:
            build(name, kind)
            out.append(name)
        except InapplicableDescriptor:
            pass
    return tuple(out)


def _sig_label(symbol: str, n: int, p: int) -> str:
    return f"I_{n}^{p}" if 0 < p < n else ("1_" + str(n) if p == n else f"-1_{n}")


def _check_range(name: str, value: int, low: int, high: int, what: str):
    if not low <= value <= high:
        raise InapplicableDescriptor(f"{name}: parameter {what}={value} out of range [{low}, {high}]")


def build(name: str, kind: MatrixKind, p: Optional[int] = None, q: Optional[int] = None,
          strict: bool = False) -> Descriptor:
    """Construct a descriptor, validating applicability; raises otherwise.

    Parameters default to their maximal values (p = m and q = n style).  The
    ``strict`` flag selects the literal catalog variant where one exists
    (only xi2); elsewhere it is accepted and recorded as a no-op note.
    """
    m, n = kind.m, kind.n
    family = kind.family
    if family == SL and name not in SL_NAMES:
        raise InapplicableDescriptor(f"{name}: not a descriptor of the sl family")
    if family == OSP and name not in OSP_NAMES:
        raise InapplicableDescriptor(f"{name}: not a descriptor of the osp family")
    if family not in (SL, OSP):
        raise InapplicableDescriptor(f"descriptors are defined for sl and osp, not {family}")

    notes = []
    if strict and name != "xi2":
        notes.append(f"{name}: no strict variant exists; strict flag has no effect.")

    h = n // 2
    arity = PARAM_ARITY.get(name, 0)
    if arity == 0 and (p is not None or q is not None):
        raise InapplicableDescriptor(f"{name} takes no parameters")
    if arity == 1 and q is not None:
        raise InapplicableDescriptor(f"{name} takes a single parameter p")

    if name == "sigma1":
        p = m if p is None else p
        q = n if q is None else q
        _check_range(name, p, 0, m, "p")
        _check_range(name, q, 0, n, "q")
        k_grid = block_diag_grid(signature_grid(m, p), signature_grid(n, q))
        label = f"diag({_sig_label('I', m, p)}, {_sig_label('I', n, q)})"
        return Descriptor(
            name, kind, STANDARD,
            (negst_step(), ad_step(label, k_grid), conj_step(), delta_step(I)),
            params=(("p", p), ("q", q)),
            notes=tuple(notes) + (NOTE_SIGMA1,),
            strict=strict,
            lift_form="inverse-neg",
        )

    if name == "sigma2":
        if m % 2 or n % 2:
            raise InapplicableDescriptor("sigma2 needs both block sizes even")
        k_grid = block_diag_grid(symplectic_grid(m), symplectic_grid(n))
        return Descriptor(
            name, kind, STANDARD,
            (ad_step(f"diag(J_{m}, J_{n})", k_grid), conj_step()),
            notes=tuple(notes), strict=strict,
        )

    if name == "sigma3":
        if m != n:
            raise InapplicableDescriptor("sigma3 needs equal block sizes")
        return Descriptor(name, kind, STANDARD, (pi_step(), conj_step()),
                          notes=tuple(notes), strict=strict)

    if name == "sigma4":
        if m != n or m % 2:
            raise InapplicableDescriptor("sigma4 needs equal even block sizes")
        return Descriptor(
            name, kind, STANDARD, (negst_step(), pi_step(), conj_step()),
            notes=tuple(notes), strict=strict, lift_form="inverse-neg",
        )

    if name == "omega1":
        if n % 2:
            raise InapplicableDescriptor("omega1 needs an even lower block size")
        k_grid = block_diag_grid(identity_grid(m), symplectic_grid(n))
        return Descriptor(
            name, kind, GRADED,
            (conj_step(), ad_step(f"diag(1_{m}, J_{n})", k_grid)),
            notes=tuple(notes), strict=strict,
        )

    if name == "omega2":
        p = m if p is None else p
        q = n if q is None else q
        _check_range(name, p, 0, m, "p")
        _check_range(name, q, 0, n, "q")
        k_grid = block_diag_grid(signature_grid(m, p), signature_grid(n, q))
        label = f"diag({_sig_label('I', m, p)}, {_sig_label('I', n, q)})"
        return Descriptor(
            name, kind, GRADED,
            (negst_step(), conj_step(), ad_step(label, k_grid)),
            params=(("p", p), ("q", q)),
            notes=tuple(notes), strict=strict, lift_form="inverse-neg",
        )

    if name == "omega3":
        if m != n:
            raise InapplicableDescriptor("omega3 needs equal block sizes")
        return Descriptor(
            name, kind, GRADED, (conj_step(), pi_step(), delta_step(I)),
            notes=tuple(notes), strict=strict,
        )

    if name == "xi1":
        p = m if p is None else p
        _check_range(name, p, 0, m, "p")
        k_grid = block_diag_grid(signature_grid(m, p), identity_grid(n))
        return Descriptor(
            name, kind, STANDARD,
            (ad_step(f"diag({_sig_label('I', m, p)}, 1_{n})", k_grid), conj_step()),
            params=(("p", p),),
            notes=tuple(notes), strict=strict,
        )

    if name == "xi2":
        if m % 2:
            raise InapplicableDescriptor("xi2 needs an even upper block size")
        p = h if p is None else p
        _check_range(name, p, 0, h, "p")
        s = signature_grid(h, p)
        if strict:
            # literal variant: complex-linear Ad(diag(J_m, I_h^p, I_h^p)), no conj
            k_grid = block_diag_grid(symplectic_grid(m), s, s)
            label = f"diag(J_{m}, {_sig_label('I', h, p)}, {_sig_label('I', h, p)})"
            return Descriptor(
                name, kind, STANDARD, (ad_step(label, k_grid),),
                params=(("p", p),),
                notes=(NOTE_XI2_STRICT,) + tuple(notes),
                strict=True,
                expected_flagged=frozenset(
                    {"antilinearity", "involutivity", "naturality"}
                ),
            )
        twist = [[ZERO] * n for _ in range(n)]
        for a in range(h):
            twist[a][h + a] = s[a][a]
            twist[h + a][a] = MINUS_ONE * s[a][a]
        k_grid = block_diag_grid(symplectic_grid(m), twist)
        label = f"diag(J_{m}, [[0, {_sig_label('I', h, p)}], [{_sig_label('-I', h, p)}, 0]])"
        return Descriptor(
            name, kind, STANDARD, (ad_step(label, k_grid), conj_step()),
            params=(("p", p),),
            notes=(NOTE_XI2_DEFAULT,) + tuple(notes),
        )

    if name == "psi1":
        p = m if p is None else p
        q = h if q is None else q
        _check_range(name, p, 0, m, "p")
        _check_range(name, q, 0, h, "q")
        s = signature_grid(h, q)
        twist = [[ZERO] * n for _ in range(n)]
        for a in range(h):
            twist[a][h + a] = s[a][a]
            twist[h + a][a] = MINUS_ONE * s[a][a]
        k_grid = block_diag_grid(signature_grid(m, p), twist)
        label = (f"diag({_sig_label('I', m, p)}, [[0, {_sig_label('I', h, q)}], "
                 f"[{_sig_label('-I', h, q)}, 0]])")
        return Descriptor(
            name, kind, GRADED, (conj_step(), ad_step(label, k_grid)),
            params=(("p", p), ("q", q)),
            notes=(NOTE_PSI1,) + tuple(notes),
        )

    if name == "psi2":
        if m % 2:
            raise InapplicableDescriptor("psi2 needs an even upper block size")
        k_grid = block_diag_grid(symplectic_grid(m), identity_grid(n))
        return Descriptor(
            name, kind, GRADED,
            (conj_step(), ad_step(f"diag(J_{m}, 1_{n})", k_grid)),
            notes=tuple(notes), strict=strict,
        )

    raise InapplicableDescriptor(f"unknown descriptor {name!r}")


def corrupted_sigma1(kind: MatrixKind, p: Optional[int] = None, q: Optional[int] = None) -> Descriptor:
    """Negative control: sigma1 with its leading negation dropped.

    The result is still antilinear and involutive (squaring cancels the global
    sign), but the supertranspose without the compensating negation is an
    antiautomorphism, so the bracket-morphism identity must fail — the harness
    is expected to detect exactly that.
    """
    base = build("sigma1", kind, p, q)
    steps = (neg_step(),) + base.steps  # -(-st(...)) = +st(...)
    return Descriptor(
        "sigma1-corrupted", kind, STANDARD, steps,
        params=base.params,
        notes=("negative control: leading negation removed from sigma1",),
        lift_form="inverse-neg",
    )


def descriptor_summary(desc: Descriptor, group: bool = False) -> Dict:
    """Stable JSON-friendly description of a descriptor."""
    return {
        "name": desc.name,
        "display": desc.display(group=group),
        "family": desc.kind.family,
        "m": desc.kind.m,
        "n": desc.kind.n,
        "params": desc.param_dict(),
        "conjugation": desc.conjugation,
        "strict": desc.strict,
        "lift_form": desc.lift_form if group else None,
        "steps": expr_display(desc.lift_steps() if group else desc.steps),
    }
