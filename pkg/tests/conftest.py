import pytest

from chebotarev_lab.fields import BUILTIN_CATALOG
from chebotarev_lab.sieve import sieve_primes

# the six nontrivial built-in fields (|G| <= 6) used throughout
FIELD_NAMES = ("gaussian", "sqrt5", "zeta5", "cyclo7plus", "zeta7", "s3cubic")


@pytest.fixture(scope="session")
def sieve_small():
    return sieve_primes(10**4)


@pytest.fixture(scope="session")
def sieve_medium():
    return sieve_primes(2 * 10**5)


@pytest.fixture(scope="session")
def sieve_large():
    # covers x = 1e6 counting and psi windows x * e^(1/4) at x = 1e6
    return sieve_primes(1_300_000)


@pytest.fixture(scope="session")
def catalog():
    return dict(BUILTIN_CATALOG)


@pytest.fixture(scope="session")
def nontrivial_fields(catalog):
    return [catalog[name] for name in FIELD_NAMES]
