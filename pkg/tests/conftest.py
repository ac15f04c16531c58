import random

import pytest
from hypothesis import strategies as st

from knotproj.laurent import LaurentPoly


def laurent_polys(coef=9, span=4, max_terms=5):
    terms = st.dictionaries(
        st.integers(-span, span), st.integers(-coef, coef), max_size=max_terms
    )
    return terms.map(LaurentPoly.from_dict)


def to_dict(p: LaurentPoly) -> dict:
    return p.to_dict()


@pytest.fixture
def rng():
    return random.Random(20261016)


# criterion number -> (description, passed); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {desc}")
