"""Ideal-theoretic machinery: finiteness, membership, and contraction.

Membership in the generated subalgebra and contraction of a prime both
run through tag variables: one fresh variable per generator, a Groebner
basis under a block order whose leading block holds the original
variables, then inspection of the tag-only part.  Tag variable i carries
the weight of generator i so that every intermediate polynomial stays
weighted-homogeneous, which keeps the bases small.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

from .errors import ContractionError
from .factor import gcd
from .groebner import GroebnerBasis, groebner, normal_form
from .orders import block_elimination, grevlex
from .poly import Poly, VarTable, canonical, weighted_degree

if TYPE_CHECKING:
    from .extension import ExtensionSpec


def check_finite(spec: "ExtensionSpec") -> bool:
    """True iff the generators only vanish simultaneously at the origin.

    Zero-dimensionality test: every variable must appear as a pure power
    among the leading terms of a Groebner basis of the generator ideal.
    """
    gb = groebner(spec.generators, grevlex(spec.vars.weights), spec.vars)
    key = gb.order.key
    pure = [False] * spec.n
    for g in gb:
        exp, _ = g.leading(key)
        nonzero = [j for j, e in enumerate(exp) if e]
        if len(nonzero) == 1:
            pure[nonzero[0]] = True
        elif len(nonzero) == 0:
            return True  # unit ideal; vacuously zero-dimensional
    return all(pure)


# ---------------------------------------------------------------------------
# tag-variable plumbing
# ---------------------------------------------------------------------------


def tag_table(spec: "ExtensionSpec") -> VarTable:
    """Variable table for the subalgebra side (one tag per generator)."""
    weights = tuple(weighted_degree(f, spec.vars).degree for f in spec.generators)
    taken = set(spec.vars.names)
    for base in ("y", "t", "s", "w"):
        names = tuple(f"{base}{i + 1}" for i in range(spec.n))
        if not taken & set(names):
            return VarTable(names, weights)
    names = tuple(f"tag{i + 1}" for i in range(spec.n))
    return VarTable(names, weights)


def combined_table(spec: "ExtensionSpec") -> VarTable:
    tags = tag_table(spec)
    return VarTable(spec.vars.names + tags.names, spec.vars.weights + tags.weights)


def lift(p: Poly, spec: "ExtensionSpec") -> Poly:
    """View a polynomial in the original variables inside the combined ring."""
    n = spec.n
    return Poly(2 * n, {exp + (0,) * n: c for exp, c in p.items()})


def lift_tag(p: Poly, spec: "ExtensionSpec") -> Poly:
    n = spec.n
    return Poly(2 * n, {(0,) * n + exp: c for exp, c in p.items()})


def project_tag(p: Poly, spec: "ExtensionSpec") -> Poly:
    """Drop the original-variable slots; requires p to be tag-only."""
    n = spec.n
    out = {}
    for exp, c in p.items():
        if any(exp[:n]):
            raise ValueError("polynomial still involves original variables")
        out[exp[n:]] = c
    return Poly(n, out)


def _is_tag_only(p: Poly, spec: "ExtensionSpec") -> bool:
    n = spec.n
    return all(not any(exp[:n]) for exp, _ in p.items())


def _tag_generators(spec: "ExtensionSpec") -> list[Poly]:
    n = spec.n
    gens = []
    for i, f in enumerate(spec.generators):
        y_i = Poly.variable(2 * n, n + i)
        gens.append(y_i - lift(f, spec))
    return gens


@lru_cache(maxsize=64)
def _membership_basis(spec: "ExtensionSpec") -> GroebnerBasis:
    table = combined_table(spec)
    order = block_elimination(spec.n, table.weights)
    return groebner(_tag_generators(spec), order, table)


def subalgebra_membership(p: Poly, spec: "ExtensionSpec") -> Poly | None:
    """Representation of p in the generators, or None.

    On success the returned polynomial g in the tag variables satisfies
    g(f_1, ..., f_n) == p exactly.
    """
    gb = _membership_basis(spec)
    nf = normal_form(lift(p, spec), gb)
    if _is_tag_only(nf, spec):
        return project_tag(nf, spec)
    return None


def contract_prime(q: Poly, spec: "ExtensionSpec") -> Poly:
    """Generator of the contraction of the prime (q) to the subalgebra.

    Returns the canonical-associate irreducible tag polynomial whose
    pullback q divides.  Collapses the elimination ideal with a gcd and
    then confirms the gcd still generates it; anything else indicates a
    reducible input or a bug and raises :class:`ContractionError`.
    """
    if q.is_zero() or q.is_constant():
        raise ValueError("contraction requires a nonconstant polynomial")
    table = combined_table(spec)
    order = block_elimination(spec.n, table.weights)
    gb = groebner([lift(q, spec)] + _tag_generators(spec), order, table)
    tags = tag_table(spec)
    members = [project_tag(g, spec) for g in gb if _is_tag_only(g, spec)]
    if not members:
        raise ContractionError(
            "contraction not principal: elimination ideal is zero"
        )
    g = members[0]
    for m in members[1:]:
        g = gcd(g, m, tags)
    g = canonical(g, tags)
    for m in members:
        if not g.divides(m):
            raise ContractionError("contraction not principal: gcd check failed")
    elim_gb = groebner(members, grevlex(tags.weights), tags)
    if not normal_form(g, elim_gb).is_zero():
        raise ContractionError(
            "contraction not principal: gcd is not in the elimination ideal"
        )
    return g
