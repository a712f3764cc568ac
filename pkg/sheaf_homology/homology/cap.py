#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: cap.py
# @Created:   2026-09-21 09:40:17
# @Modified:  2026-10-16 18:22:05

"""Cap product H_p(X, F) ⊗ H^q(X, F') → H_{p−q}(X, F ⊗ F').

On chains, with c = (x_0 < … < x_p; a) and a cochain φ,

    c ∩ φ = (−1)^{pq} (x_q < … < x_p; ρ_{x_0→x_q}(a) ⊗ φ(x_0 < … < x_q)),

which satisfies ∂(c ∩ φ) = (∂c) ∩ φ + (−1)^{p−q−1} c ∩ δφ.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..errors import ComplexError
from ..log import child_logger
from ..poset import Chain, MonotoneMap
from ..report import Report
from ..sheaf import Sheaf, inverse_image, tensor
from ..zlinalg import FgAbGroup, Vector
from .bar import BarComplex, bar_complex, bar_pushforward, cobar_complex, cobar_pullback

logger = child_logger(__name__)


def cap_sign(p: int, q: int) -> int:
    return -1 if (p * q) % 2 else 1


def _check_degrees(p: int, q: int) -> None:
    if q < 0 or p < q:
        raise ComplexError(f"cap product needs p >= q >= 0, got p={p}, q={q}")


def cap_chain(
    chains: BarComplex,
    cochains: BarComplex,
    target: BarComplex,
    p: int,
    q: int,
    c: Sequence[int],
    phi: Sequence[int],
) -> List[int]:
    """c ∩ φ as a vector of `target`, the bar complex of F ⊗ F'."""
    _check_degrees(p, q)
    f = chains.sheaf
    sign = cap_sign(p, q)
    blocks: Dict[Chain, List[int]] = {}
    for sigma in chains.chains.get(p, []):
        a = chains.block(p, c, sigma)
        if not any(a):
            continue
        b = cochains.block(q, phi, sigma[: q + 1])
        if not any(b):
            continue
        moved = f.restriction(sigma[0], sigma[q])(a)
        values = [sign * u * v for u in moved for v in b]
        acc = blocks.setdefault(sigma[q:], [0] * len(values))
        for i, v in enumerate(values):
            acc[i] += v
    return target.vector(p - q, blocks)


def _warn_if_not_derived(f: Sheaf, g: Sheaf) -> None:
    if not (f.has_free_stalks() or g.has_free_stalks()):
        logger.warning(
            "both sheaves have torsion stalks; the cap target is the stalkwise "
            "tensor product, not the derived one"
        )


@dataclass(frozen=True)
class CapPairing:
    """The pairing on generators of H_p(X, F) and H^q(X, F')."""

    p: int
    q: int
    homology: FgAbGroup
    cohomology: FgAbGroup
    target: FgAbGroup
    # (i, j) -> class of α_i ∩ β_j in `target`
    table: Dict[Tuple[int, int], Vector]

    def __call__(self, alpha: Sequence[int], beta: Sequence[int]) -> Vector:
        out = [0] * self.target.ngens
        for (i, j), value in self.table.items():
            k = alpha[i] * beta[j]
            if k:
                out = [o + k * v for o, v in zip(out, value)]
        return self.target.canonical(out)

    def is_zero(self) -> bool:
        return all(self.target.is_zero_element(v) for v in self.table.values())

    def image(self) -> List[Vector]:
        """Canonical coordinates of every generator pairing."""
        return [self.target.canonical(v) for _, v in sorted(self.table.items())]


def cap_product(f: Sheaf, g: Sheaf, p: int, q: int) -> CapPairing:
    _check_degrees(p, q)
    _warn_if_not_derived(f, g)
    chains, cochains = bar_complex(f), cobar_complex(g)
    target = bar_complex(tensor(f, g))
    hp = chains.complex.homology_data(p)
    hq = cochains.complex.homology_data(-q)
    ht = target.complex.homology_data(p - q)
    table = {}
    for i in range(hp.group.ngens):
        c = hp.cycles.column(i)
        for j in range(hq.group.ngens):
            phi = hq.cycles.column(j)
            table[(i, j)] = ht.classify(cap_chain(chains, cochains, target, p, q, c, phi))
    return CapPairing(p, q, hp.group, hq.group, ht.group, table)


def cap_naturality_check(fmap: MonotoneMap, f: Sheaf, g: Sheaf, p: int, q: int) -> Report:
    """f_*(α ∩ f^*β) = f_*(α) ∩ β for every generator α of H_p(X, f⁻¹F)
    and β of H^q(Y, F')."""
    _check_degrees(p, q)
    _warn_if_not_derived(f, g)
    pulled_f, pulled_g = inverse_image(fmap, f), inverse_image(fmap, g)
    x_chains = bar_complex(pulled_f)
    x_cochains = cobar_complex(pulled_g)
    x_target = bar_complex(tensor(pulled_f, pulled_g))
    y_chains, y_cochains = bar_complex(f), cobar_complex(g)

    push_f = bar_pushforward(fmap, f).component(p)
    push_fg = bar_pushforward(fmap, tensor(f, g)).component(p - q)
    pull_g = cobar_pullback(fmap, g).component(-q)
    # same layout as the target of push_fg
    y_target = bar_complex(tensor(f, g))
    classes = y_target.complex.homology_data(p - q)

    hp = x_chains.complex.homology_data(p)
    hq = y_cochains.complex.homology_data(-q)
    report = Report("cap naturality")
    report.add_column("H_p(X, f^-1 F)", [hp.group])
    report.add_column("H^q(Y, F')", [hq.group])
    report.add_column("H_{p-q}(Y, F (x) F')", [classes.group])
    for i in range(hp.group.ngens):
        alpha = hp.cycles.column(i)
        pushed = push_f(alpha)
        for j in range(hq.group.ngens):
            beta = hq.cycles.column(j)
            lhs = push_fg(
                cap_chain(x_chains, x_cochains, x_target, p, q, alpha, pull_g(beta))
            )
            rhs = cap_chain(y_chains, y_cochains, y_target, p, q, pushed, beta)
            difference = [u - v for u, v in zip(lhs, rhs)]
            if not classes.group.is_zero_element(classes.classify(difference)):
                report.fail(
                    f"projection formula fails for generators {i} and {j}",
                    p - q,
                    classes.classify(rhs),
                    classes.classify(lhs),
                )
    return report
