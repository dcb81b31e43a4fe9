"""Buchberger's algorithm with the two standard pair-elimination criteria.

Desk-scale inputs (few variables, moderate degrees) do not need F4/F5;
plain Buchberger with the product (coprime leading terms) and chain
criteria, normal selection, and full interreduction is enough and keeps
the code auditable.

The total degree of every intermediate polynomial is capped (environment
variable ``VRG_MAX_DEGREE``, default 200) so runaway inputs fail fast
instead of consuming the machine.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegreeCapExceededError
from .orders import MonomialOrder
from .poly import Exponent, Poly, VarTable, canonical

DEFAULT_MAX_DEGREE = 200


def max_degree_cap() -> int:
    raw = os.environ.get("VRG_MAX_DEGREE", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_DEGREE
    except ValueError:
        return DEFAULT_MAX_DEGREE


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis; generators in canonical associate form."""

    generators: tuple[Poly, ...]
    order: MonomialOrder
    ambient: VarTable

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _lcm_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides_exp(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _monic(p: Poly, key) -> Poly:
    _, c = p.leading(key)
    return p / c


def _reduce(p: Poly, basis: list[tuple[Exponent, Poly]], key) -> Poly:
    """Full normal form of p modulo the listed (leading exponent, poly) pairs."""
    work = p.terms_dict()
    out: dict[Exponent, Fraction] = {}
    while work:
        exp = max(work, key=key)
        coeff = work.pop(exp)
        for lt, g in basis:
            if _divides_exp(lt, exp):
                shift = tuple(a - b for a, b in zip(exp, lt))
                factor = coeff / g.coefficient(lt)
                for eg, cg in g.items():
                    t = tuple(a + b for a, b in zip(shift, eg))
                    if t == exp:
                        continue
                    s = work.get(t, Fraction(0)) - factor * cg
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            out[exp] = coeff
    return Poly(p.n, out)


def _spoly(f: Poly, g: Poly, key) -> Poly:
    ef, cf = f.leading(key)
    eg, cg = g.leading(key)
    l = _lcm_exp(ef, eg)
    mf = tuple(a - b for a, b in zip(l, ef))
    mg = tuple(a - b for a, b in zip(l, eg))
    tf = Poly(f.n, {mf: 1 / cf})
    tg = Poly(g.n, {mg: 1 / cg})
    return tf * f - tg * g


def groebner(
    gens: Sequence[Poly],
    order: MonomialOrder,
    ambient: VarTable,
    max_degree: int | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The zero ideal yields an empty basis.  Output generators are sorted by
    decreasing leading term and normalized to canonical associates, which
    makes the basis unique for a given ideal and order.
    """
    cap = max_degree_cap() if max_degree is None else max_degree
    key = order.key
    G: list[Poly] = []
    for g in gens:
        if g.is_zero():
            continue
        if g.total_degree() > cap:
            raise DegreeCapExceededError(
                f"input degree {g.total_degree()} exceeds cap {cap}"
            )
        G.append(_monic(g, key))
    if not G:
        return GroebnerBasis((), order, ambient)

    lts: list[Exponent] = [g.leading(key)[0] for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}

    def pair_key(ij):
        i, j = ij
        return (key(_lcm_exp(lts[i], lts[j])), ij)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.remove((i, j))
        li, lj = lts[i], lts[j]
        l = _lcm_exp(li, lj)
        # product criterion: coprime leading terms reduce to zero
        if all(a + b == c for a, b, c in zip(li, lj, l)):
            continue
        # chain criterion: a third element divides the lcm and both of its
        # pairs with i and j are already settled
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides_exp(lts[k], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        basis = list(zip(lts, G))
        h = _reduce(_spoly(G[i], G[j], key), basis, key)
        if h.is_zero():
            continue
        if h.total_degree() > cap:
            raise DegreeCapExceededError(
                f"intermediate degree {h.total_degree()} exceeds cap {cap}"
            )
        h = _monic(h, key)
        G.append(h)
        lts.append(h.leading(key)[0])
        new = len(G) - 1
        pairs.update((m, new) for m in range(new))

    # minimalize: drop generators whose leading term another one divides
    keep: list[int] = []
    for i in range(len(G)):
        li = lts[i]
        redundant = False
        for j in range(len(G)):
            if i == j:
                continue
            if _divides_exp(lts[j], li) and (lts[j] != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = [G[i] for i in keep]

    # interreduce: fully reduce each generator against the others
    reduced: list[Poly] = []
    for i, g in enumerate(minimal):
        others = [
            (p.leading(key)[0], p) for k, p in enumerate(minimal) if k != i
        ]
        r = _reduce(g, others, key)
        if not r.is_zero():
            reduced.append(_monic(r, key))
    reduced.sort(key=lambda p: key(p.leading(key)[0]), reverse=True)
    final = tuple(canonical(p, ambient) for p in reduced)
    return GroebnerBasis(final, order, ambient)


def normal_form(p: Poly, gb: GroebnerBasis) -> Poly:
    """Unique remainder of p modulo the basis; zero iff p is in the ideal."""
    if p.n != gb.ambient.n:
        raise ValueError("polynomial and basis live over different variables")
    if not gb.generators:
        return p
    key = gb.order.key
    basis = [(g.leading(key)[0], g) for g in gb.generators]
    return _reduce(p, basis, key)
