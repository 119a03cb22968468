import pytest

from oscbasis import make_context

# primes p = 1 (mod 4) up to 101
PRIMES_LE_101 = [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101]


@pytest.fixture(scope="session")
def ctx_for():
    """Session-cached PrimeContext factory; contexts are immutable."""
    cache = {}

    def get(p, generator=None):
        key = (p, generator)
        if key not in cache:
            cache[key] = make_context(p, generator_override=generator)
        return cache[key]

    return get
