"""Shared fixtures: catalog specs, a seeded RNG, and a CLI runner."""

from __future__ import annotations

import os
import subprocess
import sys
import random

import pytest

from akivis.catalog import CATALOG

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def golden_path(name: str) -> str:
    return os.path.join(GOLDEN_DIR, name + ".alg")


@pytest.fixture
def rng():
    return random.Random(20260819)


@pytest.fixture(scope="session")
def octonions():
    return CATALOG["octonions"].algebra()


@pytest.fixture(scope="session")
def oct_spec():
    return CATALOG["octonions"].akivis()


@pytest.fixture(scope="session")
def quaternions():
    return CATALOG["quaternions"].algebra()


@pytest.fixture(scope="session")
def matq():
    return CATALOG["matq-1-1"].algebra()


@pytest.fixture(scope="session")
def matq_spec():
    return CATALOG["matq-1-1"].akivis()


@pytest.fixture(scope="session")
def trivial_spec():
    return CATALOG["trivial-2-2"].akivis()


@pytest.fixture(scope="session")
def catalog_specs():
    """Every catalog entry as an AkivisSpec (tables derived)."""
    return {name: entry.akivis() for name, entry in CATALOG.items()}


def run_cli(*args: str, env_extra: dict | None = None) -> subprocess.CompletedProcess:
    """Run `python -m akivis <args>` capturing text output."""
    env = dict(os.environ)
    env.pop("AKIVIS_MAX_DEGREE", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "akivis", *args],
                          capture_output=True, text=True, env=env)


@pytest.fixture(scope="session", autouse=True)
def _no_ambient_truncation():
    """Keep the test process itself free of the truncation env override."""
    os.environ.pop("AKIVIS_MAX_DEGREE", None)
    yield
