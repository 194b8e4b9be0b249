"""
Pytest configuration and shared fixtures for testing.

Field contexts and catalog schemes are cached by the library itself, so the
fixtures are cheap to request from many tests.
"""
import os

# Keep command output clean during tests
os.environ.setdefault("LOG_LEVEL", "WARNING")

import pytest
from typer.testing import CliRunner

from app.core.constants import KIND_A, KIND_D
from app.models.field import FieldCtx, build_field
from app.models.scheme import ADEType, SubgroupScheme
from app.services.catalog import CatalogService


@pytest.fixture(scope="session")
def f5() -> FieldCtx:
    return build_field(5, 1)


@pytest.fixture(scope="session")
def f7() -> FieldCtx:
    return build_field(7, 1)


@pytest.fixture(scope="session")
def f25() -> FieldCtx:
    return build_field(5, 2)


@pytest.fixture(scope="session")
def f9() -> FieldCtx:
    return build_field(3, 2)


@pytest.fixture(scope="session")
def a2_p5() -> SubgroupScheme:
    """mu_3 over F_25."""
    return CatalogService.make_catalog(ADEType(KIND_A, 2), 5)


@pytest.fixture(scope="session")
def a3_p5() -> SubgroupScheme:
    return CatalogService.make_catalog(ADEType(KIND_A, 3), 5)


@pytest.fixture(scope="session")
def d4_p5() -> SubgroupScheme:
    """Quaternion group of order 8."""
    return CatalogService.make_catalog(ADEType(KIND_D, 4), 5)


@pytest.fixture(scope="session")
def d5_p3() -> SubgroupScheme:
    """Non-reduced D5: connected part mu_3, reduced part of order 4."""
    return CatalogService.make_catalog(ADEType(KIND_D, 5), 3)


@pytest.fixture(scope="session")
def e6_p5() -> SubgroupScheme:
    return CatalogService.make_catalog(ADEType.exceptional("E6"), 5)


@pytest.fixture(scope="session")
def e8_p7() -> SubgroupScheme:
    return CatalogService.make_catalog(ADEType.exceptional("E8"), 7)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


@pytest.fixture(scope="session")
def cli_app():
    from main import app

    return app
