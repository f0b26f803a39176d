import pytest

from rblie.algebras import StructureAlgebra, derivation_prelie_example
from rblie.terms import Alphabet

_CRITERIA = {}


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[num])


@pytest.fixture
def criterion():
    """Record one PASS/FAIL summary line per acceptance criterion."""

    def record(num, label, failures):
        ok = not failures
        _CRITERIA[num] = "%s criterion %d: %s" % ("PASS" if ok else "FAIL", num, label)
        assert ok, "criterion %d (%s): %s" % (num, label, failures[:3])

    return record


@pytest.fixture
def ab():
    return Alphabet(("a", "b"))


@pytest.fixture
def abc():
    return Alphabet(("a", "b", "c"))


def one_dim_pre():
    return StructureAlgebra(("e",), "pre", dot={("e", "e"): {"e": 1}})


def dual_numbers_pre():
    # k[t]/(t^2) acting on itself: u is the unit, t the nilpotent
    return StructureAlgebra(
        ("u", "t"),
        "pre",
        dot={("u", "u"): {"u": 1}, ("u", "t"): {"t": 1}, ("t", "u"): {"t": 1}},
    )


def so3_post():
    b = {
        ("a", "b"): {"c": 1},
        ("b", "a"): {"c": -1},
        ("b", "c"): {"a": 1},
        ("c", "b"): {"a": -1},
        ("a", "c"): {"b": -1},
        ("c", "a"): {"b": 1},
    }
    return StructureAlgebra(("a", "b", "c"), "post", dot={}, bracket=b)


def pre_as_post():
    a = dual_numbers_pre()
    return StructureAlgebra(a.names, "post", dot=a.dot, bracket={})


def deriv_1_2():
    return derivation_prelie_example(1, 2)


TEST_ALGEBRA_MAKERS = {
    "one_dim": one_dim_pre,
    "dual_numbers": dual_numbers_pre,
    "so3": so3_post,
    "pre_as_post": pre_as_post,
    "deriv_1_2": deriv_1_2,
}


@pytest.fixture(params=sorted(TEST_ALGEBRA_MAKERS))
def test_algebra(request):
    return TEST_ALGEBRA_MAKERS[request.param]()
