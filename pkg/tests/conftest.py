import pytest

from vrg import ExtensionSpec, VarTable, parse


@pytest.fixture
def xy11() -> VarTable:
    return VarTable(("X", "Y"), (1, 1))


@pytest.fixture
def xy32() -> VarTable:
    return VarTable(("X", "Y"), (3, 2))


@pytest.fixture
def xy12() -> VarTable:
    return VarTable(("X", "Y"), (1, 2))


@pytest.fixture
def cusp_spec(xy32) -> ExtensionSpec:
    return ExtensionSpec(xy32, (parse("X^2+Y^3", xy32), parse("X^2*Y^3", xy32)))


@pytest.fixture
def mixed_spec(xy12) -> ExtensionSpec:
    return ExtensionSpec(xy12, (parse("X^2*Y", xy12), parse("X^2+Y", xy12)))


@pytest.fixture
def sym2_spec(xy11) -> ExtensionSpec:
    return ExtensionSpec(xy11, (parse("X+Y", xy11), parse("X*Y", xy11)))
