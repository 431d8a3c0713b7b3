from hypothesis import HealthCheck, settings, strategies as st

from typedefect.complexes import make_complex

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def complexes(draw, min_n=1, max_n=6, nonvoid=True):
    n = draw(st.integers(min_n, max_n))
    faces = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1 if nonvoid else 0, max_size=8))
    return make_complex(n, faces)


@st.composite
def used_complexes(draw, min_n=1, max_n=6):
    """Complexes in which every ground vertex lies in a face."""
    delta = draw(complexes(min_n, max_n))
    return make_complex(delta.n, [*delta.facets, *(1 << v for v in range(delta.n))])
