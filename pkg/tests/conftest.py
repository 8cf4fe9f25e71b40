"""Pytest configuration and shared fixtures."""

import os
import logging
from pathlib import Path

import pytest

from smashcalc.core import FinDimAlgebra, LinearMap, RATIONALS
from smashcalc.hopf import cyclic_group_algebra, dual_cyclic_group_algebra, sweedler_algebra, trivial_hopf
from smashcalc.smash import ModuleAlgebraAction

# Configure logging for tests
logging.basicConfig(
    level=logging.DEBUG,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

# Test environment configuration
TEST_ENV = {
    "SMASHCALC_ENVIRONMENT": "test",
    "SMASHCALC_FIELD": "Q",
    "SMASHCALC_TRUNCATION": "4",
    "SMASHCALC_MAX_DEGREE": "4",
    "SMASHCALC_LOG_LEVEL": "DEBUG",
}

WORKSPACES = Path(__file__).parent.parent / "workspaces"


@pytest.fixture(autouse=True)
def setup_test_env():
    """Set up test environment variables."""
    original_env = {}
    for key, value in TEST_ENV.items():
        if key in os.environ:
            original_env[key] = os.environ[key]
        os.environ[key] = value

    yield

    # Restore original environment
    for key in TEST_ENV:
        if key in original_env:
            os.environ[key] = original_env[key]
        else:
            del os.environ[key]


@pytest.fixture
def field():
    """The rationals."""
    return RATIONALS


@pytest.fixture
def kc2(field):
    """kC2 with basis 1, g."""
    return cyclic_group_algebra(field, 2)


@pytest.fixture
def kc3(field):
    """kC3 with basis 1, g, g^2."""
    return cyclic_group_algebra(field, 3)


@pytest.fixture
def dual_kc2(field):
    """(kC2)* with idempotents p0, p1."""
    return dual_cyclic_group_algebra(field, 2)


@pytest.fixture
def h4(field):
    """Sweedler's Hopf algebra on 1, g, x, gx."""
    return sweedler_algebra(field)


@pytest.fixture
def ground_hopf(field):
    """The Hopf algebra k."""
    return trivial_hopf(field)


@pytest.fixture
def dual_numbers(field):
    """k[x]/(x^2)."""
    return FinDimAlgebra.truncated_polynomial(field, 2)


@pytest.fixture
def sign_action(kc2, dual_numbers, field):
    """kC2 acting on k[x]/(x^2) by g ⇀ x = -x, augmented by x ↦ 0."""
    g = LinearMap.from_rows(field, [[1, 0], [0, -1]])
    return ModuleAlgebraAction.from_group_images(kc2, dual_numbers, {1: g}, name="sign", augmentation=[1, 0])


@pytest.fixture
def workspace_dir():
    """Directory of the shipped workspaces."""
    return WORKSPACES


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers",
        "integration: mark test as integration test"
    )
    config.addinivalue_line(
        "markers",
        "slow: mark test as slow running"
    )


def pytest_collection_modifyitems(config, items):
    """Modify test collection based on markers."""
    if not config.getoption("--run-integration"):
        skip_integration = pytest.mark.skip(reason="need --run-integration option to run")
        for item in items:
            if "integration" in item.keywords:
                item.add_marker(skip_integration)


def pytest_addoption(parser):
    """Add custom command line options."""
    parser.addoption(
        "--run-integration",
        action="store_true",
        default=False,
        help="run integration tests"
    )
