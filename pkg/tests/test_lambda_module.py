import pytest
from hypothesis import given

from knotproj.exact_matrix import IntMatrix, det_laurent
from knotproj.lambda_module import (
    ModulePresentation,
    NotCyclicScope,
    cyclic_class,
    fitting_generators,
    is_trivial,
    same_cyclic_module,
)
from knotproj.laurent import ONE, AlexanderClass, lp_is_unit, parse_poly
from knotproj.seifert import presentation_matrix, validate_seifert

from .conftest import laurent_polys

P = parse_poly
ZERO_MODULE = ModulePresentation()
CYC = ModulePresentation.cyclic


@pytest.mark.parametrize(
    "M, trivial",
    [(ZERO_MODULE, True), (CYC("t - 1"), False), (CYC("t^3"), True), (CYC("2"), False), (CYC("0"), False)],
)
def test_is_trivial(M, trivial):
    assert is_trivial(M) is trivial


def test_cyclic_class():
    assert cyclic_class(CYC("t - 1")) == AlexanderClass(P("t - 1"))
    assert cyclic_class(ZERO_MODULE) == AlexanderClass(ONE)
    S = validate_seifert(IntMatrix([[1, 1], [0, -1]]), 3)
    assert cyclic_class(ModulePresentation(presentation_matrix(S))) == AlexanderClass(P("t^2 - 3*t + 1"))


def test_same_cyclic_module():
    assert same_cyclic_module(CYC("t - 1"), CYC("1 - t"))
    assert not same_cyclic_module(ZERO_MODULE, CYC("t - 1"))
    assert not same_cyclic_module(CYC("t^2 - 3*t + 1"), CYC("t - 1"))
    assert same_cyclic_module(ZERO_MODULE, CYC("-t^4"))


def test_same_cyclic_module_scope():
    big = ModulePresentation.parse("t-1,t;-1,-t+1")
    with pytest.raises(NotCyclicScope):
        same_cyclic_module(big, CYC("t - 1"))


@given(laurent_polys(coef=3, span=2, max_terms=3), laurent_polys(coef=3, span=2, max_terms=3), laurent_polys(coef=3, span=2, max_terms=3))
def test_same_cyclic_module_is_equivalence(a, b, c):
    A, B, C = CYC(a), CYC(b), CYC(c)
    assert same_cyclic_module(A, A)
    assert same_cyclic_module(A, B) == same_cyclic_module(B, A)
    if same_cyclic_module(A, B) and same_cyclic_module(B, C):
        assert same_cyclic_module(A, C)
    # unit multiples always agree
    assert same_cyclic_module(A, CYC(a * P("-t^3")))


@given(laurent_polys(coef=4, span=3))
def test_trivial_iff_unit_class(p):
    M = CYC(p)
    assert is_trivial(M) == lp_is_unit(cyclic_class(M).canonical)


def test_fitting_generators():
    M = ModulePresentation.parse("t-1,t;-1,-t+1")
    assert fitting_generators(M, 0) == [det_laurent(M.P)]
    assert fitting_generators(M, 1) == [P("t-1"), P("t"), P("-1"), P("-t+1")]
    assert fitting_generators(M, 2) == [ONE]
    assert fitting_generators(ZERO_MODULE, 0) == [ONE]
    with pytest.raises(IndexError):
        fitting_generators(M, 3)
    with pytest.raises(IndexError):
        fitting_generators(M, -1)
