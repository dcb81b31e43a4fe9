"""Shared corpus of extensions used across the test suite.

Each entry records the expected degree, the expected well-ramified
verdict, and whether the subalgebra is an invariant ring of a group
action (in which case classical discriminant identities must hold).
"""

from dataclasses import dataclass

from vrg import ExtensionSpec, VarTable, parse


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: ExtensionSpec
    degree: int
    well_ramified: bool
    galois: bool


def _entry(name, names, weights, gens, degree, well_ramified, galois):
    vars = VarTable(tuple(names), tuple(weights))
    spec = ExtensionSpec(vars, tuple(parse(g, vars) for g in gens))
    return CorpusEntry(name, spec, degree, well_ramified, galois)


def build_corpus() -> tuple[CorpusEntry, ...]:
    return (
        # well-ramified with unequal indices (2 and 3, then 2 and 5) over
        # one contraction, so the subalgebra is not an invariant ring
        _entry("cusp3", ("X", "Y"), (3, 2), ("X^2+Y^3", "X^2*Y^3"), 12, True, False),
        _entry("cusp5", ("X", "Y"), (5, 2), ("X^2+Y^5", "X^2*Y^5"), 20, True, False),
        # an axis prime and an unramified prime over the same contraction
        _entry("mixed2", ("X", "Y"), (1, 2), ("X^2*Y", "X^2+Y"), 4, False, False),
        _entry("mixed3", ("X", "Y"), (1, 3), ("X^3*Y", "X^3+Y"), 6, False, False),
        # invariant rings
        _entry("sym2", ("X", "Y"), (1, 1), ("X+Y", "X*Y"), 2, True, True),
        _entry(
            "sym3",
            ("X1", "X2", "X3"),
            (1, 1, 1),
            ("X1+X2+X3", "X1*X2+X1*X3+X2*X3", "X1*X2*X3"),
            6,
            True,
            True,
        ),
        _entry("dihedral3", ("X", "Y"), (1, 1), ("X^3+Y^3", "X*Y"), 6, True, True),
        _entry("dihedral4", ("X", "Y"), (1, 1), ("X^4+Y^4", "X*Y"), 8, True, True),
        _entry("dihedral5", ("X", "Y"), (1, 1), ("X^5+Y^5", "X*Y"), 10, True, True),
        _entry("powers23", ("X", "Y"), (1, 1), ("X^2", "Y^3"), 6, True, True),
        _entry("powers52", ("X", "Y"), (1, 1), ("X^5", "Y^2"), 10, True, True),
        _entry("power1d", ("X",), (1,), ("X^5",), 5, True, True),
    )


CORPUS = build_corpus()
BY_NAME = {entry.name: entry for entry in CORPUS}


def spec_of(name: str) -> ExtensionSpec:
    return BY_NAME[name].spec
