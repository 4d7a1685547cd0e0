import pathlib

import pytest

import xiverify

SAMPLE_ZEROS = pathlib.Path(xiverify.__file__).parent / "data" / "zeros_sample.txt"


@pytest.fixture(scope="session")
def sample_zeros_path():
    return str(SAMPLE_ZEROS)


@pytest.fixture(scope="session")
def zero_records(sample_zeros_path):
    """First 100 ordinates, refined with zeta derivatives attached.

    Session-scoped: refinement costs about half a second and several
    modules want the same records.
    """
    return xiverify.prepare_zeros(sample_zeros_path, max_count=100)


@pytest.fixture(scope="session")
def mobius_100k():
    return xiverify.mobius_sieve(100000)
