import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hecke_sheaves import HeckeElt, LaurentPoly, coxeter_group

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


laurent_polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-5, 5), max_size=5
).map(LaurentPoly)

nonzero_laurent = laurent_polys.filter(bool)


def hecke_elements(label: str, max_terms: int = 3):
    G = coxeter_group(label)
    terms = st.dictionaries(st.integers(0, len(G) - 1), nonzero_laurent,
                            min_size=1, max_size=max_terms)
    return terms.map(lambda d: HeckeElt(G, d))


@pytest.fixture
def A1():
    return coxeter_group("A1")


@pytest.fixture
def A2():
    return coxeter_group("A2")
