import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from incalg import IncidenceAlgebra, RingSpec, chain, closure  # noqa: E402

Q = RingSpec.rationals()
Z = RingSpec.integers()
GF2, GF3, GF5 = RingSpec.mod(2), RingSpec.mod(3), RingSpec.mod(5)

FIXTURES = Path(__file__).parent / "fixtures"

# criterion -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, detail) in sorted(ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")


def two_cycle():
    return closure(["a", "b"], [("a", "b"), ("b", "a")])


@pytest.fixture
def t2():
    return IncidenceAlgebra(chain(2), Q)


@pytest.fixture
def t3():
    return IncidenceAlgebra(chain(3), Q)


@st.composite
def preorders(draw, max_size=5):
    n = draw(st.integers(min_value=1, max_value=max_size))
    labels = [str(k) for k in range(1, n + 1)]
    pairs = draw(st.lists(st.tuples(st.sampled_from(labels), st.sampled_from(labels)), max_size=2 * n))
    return closure(labels, pairs)


def scalars(ring):
    if ring.kind == "Z/n":
        return st.integers(0, ring.modulus - 1)
    if ring.kind == "Q":
        return st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.integers(-50, 50)


@st.composite
def elements(draw, algebra, max_terms=None):
    basis = list(algebra.basis)
    keys = draw(st.lists(st.sampled_from(basis), max_size=max_terms or len(basis), unique=True))
    return algebra.element({k: draw(scalars(algebra.ring)) for k in keys})
