from pathlib import Path

import pytest

from sinklab.cli import load_corpus
from sinklab.families import FamilySpec, build
from sinklab.specfile import build_spec, parse_spec_file

REPO = Path(__file__).resolve().parent.parent
CORPUS_DIR = REPO / "corpus"


@pytest.fixture(scope="session")
def corpus():
    """All bundled corpus groups as (group id, GroupTable), built once."""
    out = []
    for group_id, path in load_corpus(CORPUS_DIR):
        spec = parse_spec_file(path)
        out.append((spec.display_name(group_id), build_spec(spec)))
    return out


@pytest.fixture(scope="session")
def s3():
    return build(FamilySpec("symmetric", (3,)))


@pytest.fixture(scope="session")
def s4():
    return build(FamilySpec("symmetric", (4,)))


@pytest.fixture(scope="session")
def a5():
    return build(FamilySpec("alternating", (5,)))


@pytest.fixture(scope="session")
def q8():
    return build(FamilySpec("quaternion8", ()))


@pytest.fixture(scope="session")
def d4():
    return build(FamilySpec("dihedral", (4,)))


@pytest.fixture(scope="session")
def c12():
    return build(FamilySpec("cyclic", (12,)))


@pytest.fixture(scope="session")
def ie31():
    return build(FamilySpec("inversion_extension", (3, 1)))


@pytest.fixture(scope="session")
def ie32():
    return build(FamilySpec("inversion_extension", (3, 2)))


@pytest.fixture(scope="session")
def frob732():
    return build(FamilySpec("frobenius", (7, 3, 2)))
