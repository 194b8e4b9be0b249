"""
Unit tests for ADE types, subgroup schemes and the catalog constructors.
"""
import pytest

from app.core.constants import KIND_A, KIND_D
from app.exceptions.custom_exceptions import (
    GateViolationException,
    NotAbelianException,
    NotLinearlyReductiveException,
    NotPrimeException,
    ValidationException,
)
from app.models.field import build_field
from app.models.matrix import Mat2
from app.models.scheme import ADEType, SubgroupScheme, character_group, sweedler_form
from app.services.catalog import CatalogService

PRIMES = (2, 3, 5, 7, 11)


def valid_types(p):
    types = [ADEType(KIND_A, n) for n in range(1, 11)]
    if p >= 3:
        types += [ADEType(KIND_D, n) for n in range(4, 11)]
    types += [ADEType.exceptional(k) for k in ("E6", "E7", "E8") if p >= ADEType.exceptional(k).min_characteristic]
    return types


@pytest.mark.unit
class TestADEType:
    """Test cases for ADEType."""

    def test_parse(self):
        """Test the accepted label forms."""
        assert ADEType.parse("D_5") == ADEType(KIND_D, 5)
        assert ADEType.parse("a3") == ADEType(KIND_A, 3)
        assert ADEType.parse("E", 6) == ADEType.exceptional("E6")
        assert ADEType.parse("D", 7) == ADEType(KIND_D, 7)

    def test_parse_conflict(self):
        """Test a label and n that disagree are rejected."""
        with pytest.raises(ValidationException):
            ADEType.parse("A3", 4)

    def test_parse_garbage(self):
        """Test unknown labels are rejected."""
        with pytest.raises(ValidationException):
            ADEType.parse("X2")
        with pytest.raises(ValidationException):
            ADEType.parse("A")

    def test_index_ranges(self):
        """Test A_0 and D_3 do not exist."""
        with pytest.raises(ValidationException):
            ADEType(KIND_A, 0)
        with pytest.raises(ValidationException):
            ADEType(KIND_D, 3)

    def test_orders_and_degrees(self):
        """Test group orders, generator degrees and relation degrees."""
        assert ADEType(KIND_A, 4).group_order == 5
        assert ADEType(KIND_A, 4).degrees == (2, 5, 5)
        assert ADEType(KIND_D, 6).group_order == 16
        assert ADEType(KIND_D, 6).degrees == (4, 8, 10)
        assert ADEType(KIND_D, 6).relation_degree == 20
        assert ADEType.exceptional("E6").degrees == (6, 8, 12)
        assert ADEType.exceptional("E7").degrees == (8, 12, 18)
        assert ADEType.exceptional("E8").degrees == (12, 20, 30)
        assert ADEType.exceptional("E8").relation_degree == 60

    def test_tag(self):
        """Test the catalog tag format."""
        assert ADEType(KIND_A, 3).tag(2) == "A n=3 p=2 |G|=4"
        assert ADEType.exceptional("E7").tag(5) == "E n=7 p=5 |G|=48"


@pytest.mark.unit
class TestCatalog:
    """Test cases for CatalogService."""

    @pytest.mark.parametrize(
        "t, p",
        [
            (ADEType(KIND_D, 4), 2),
            (ADEType.exceptional("E6"), 3),
            (ADEType.exceptional("E7"), 2),
            (ADEType.exceptional("E8"), 5),
        ],
    )
    def test_gates(self, t, p):
        """Test the characteristic gates."""
        with pytest.raises(GateViolationException):
            CatalogService.make_catalog(t, p)

    def test_not_prime(self):
        """Test a composite characteristic is rejected before the gate."""
        with pytest.raises(NotPrimeException):
            CatalogService.make_catalog(ADEType(KIND_A, 2), 9)

    def test_field_degrees(self):
        """Test the least field degree per type."""
        assert CatalogService.field_degree(ADEType(KIND_A, 2), 5) == 2
        assert CatalogService.field_degree(ADEType(KIND_A, 2), 3) == 1
        assert CatalogService.field_degree(ADEType(KIND_D, 4), 5) == 1
        assert CatalogService.field_degree(ADEType.exceptional("E6"), 5) == 2
        assert CatalogService.field_degree(ADEType.exceptional("E8"), 7) == 4

    def test_catalog_types_p2(self):
        """Test only A types exist at p = 2."""
        types = CatalogService.catalog_types(2, 10)
        assert [t.label for t in types] == [f"A{n}" for n in range(1, 10)]

    def test_catalog_types_p3(self):
        """Test p = 3 up to order 8 lists A1..A7 and D4."""
        types = CatalogService.catalog_types(3, 8)
        assert [t.label for t in types] == [f"A{n}" for n in range(1, 8)] + ["D4"]

    def test_catalog_types_p7(self):
        """Test E8 appears at p = 7 once the order bound allows it."""
        labels = [t.label for t in CatalogService.catalog_types(7, 200)]
        assert "E8" in labels
        assert "E7" in labels

    def test_catalog_types_kinds(self):
        """Test restricting the families."""
        types = CatalogService.catalog_types(5, 50, ["E6", "E7", "E8"])
        assert [t.label for t in types] == ["E6", "E7"]

    @pytest.mark.slow
    @pytest.mark.parametrize("p", PRIMES)
    def test_order_table(self, p):
        """Test |G| = n+1, 4n-8, 24, 48, 120 for every valid type with n <= 10."""
        for t in valid_types(p):
            G = CatalogService.make_catalog(t, p)
            assert G.order == t.group_order, t.label
            assert G.validate() == []
            assert all(g.in_sl2() for g in G.reduced_part.elements)

    @pytest.mark.parametrize("p", (5, 7, 11))
    def test_catalog_groups_are_small(self, p):
        """Test no catalog group contains a pseudo-reflection."""
        for t in [ADEType(KIND_D, 4), ADEType(KIND_A, 3), ADEType.exceptional("E6")]:
            assert CatalogService.make_catalog(t, p).is_small()


@pytest.mark.unit
class TestSubgroupScheme:
    """Test cases for SubgroupScheme."""

    def test_non_reduced_mu(self):
        """Test mu_3 at p = 3 is infinitesimal."""
        G = CatalogService.make_catalog(ADEType(KIND_A, 2), 3)
        assert G.order == 3
        assert G.connected_component == 3
        assert G.reduced_part.order == 1
        assert not G.is_reduced

    def test_non_reduced_dihedral(self, d5_p3):
        """Test D5 at p = 3 splits as mu_3 and a reduced part of order 4."""
        assert d5_p3.order == 12
        assert d5_p3.connected_component == 3
        assert d5_p3.reduced_part.order == 4
        assert not d5_p3.is_abelian_scheme()

    def test_reduced_quaternion(self, d4_p5):
        """Test D4 at p = 5 is reduced of order 8."""
        assert d4_p5.is_reduced
        assert d4_p5.order == 8

    def test_generator_outside_sl2(self, f5):
        """Test a generator of determinant != 1 is reported."""
        G = SubgroupScheme(f5, 1, [Mat2.of(f5, 2, 0, 0, 2)])
        assert any("determinant" in v for v in G.validate())
        with pytest.raises(ValidationException):
            G.ensure_valid()

    def test_not_linearly_reductive(self, f5):
        """Test a reduced part of order divisible by p is rejected."""
        G = SubgroupScheme(f5, 1, [Mat2.of(f5, 1, 1, 0, 1)])
        with pytest.raises(NotLinearlyReductiveException):
            G.ensure_valid()

    def test_torus_normalizer_required(self):
        """Test extra generators must normalize the torus when r >= 3."""
        f3 = build_field(3, 1)
        G = SubgroupScheme(f3, 3, [Mat2.of(f3, 1, 1, 1, 2)])
        assert any("normalize the diagonal torus" in v for v in G.validate())

    def test_conjugate_requires_torus_normalizer(self, a2_p5, f25):
        """Test conjugating a scheme with r >= 3 needs a diagonal or antidiagonal T."""
        with pytest.raises(ValidationException):
            a2_p5.conjugate(Mat2.of(f25, 1, 1, 0, 1))

    def test_conjugate_by_antidiagonal(self, a2_p5, f25):
        """Test the torus is stable under the Weyl element."""
        J = Mat2.of(f25, 0, 1, -1, 0)
        assert a2_p5.conjugate(J).same_as(a2_p5)

    def test_same_as_reduced_copy(self, a3_p5):
        """Test mu_4 equals the closure of its generator."""
        copy = SubgroupScheme(a3_p5.ctx, 1, a3_p5.reduced_generators)
        assert copy.same_as(a3_p5)

    def test_embed(self, d4_p5, f25):
        """Test embedding keeps the scheme."""
        assert d4_p5.embed(f25).same_as(d4_p5)

    def test_field_without_roots(self, f7):
        """Test a field without the needed roots of unity is refused."""
        with pytest.raises(ValidationException):
            SubgroupScheme(f7, 4)

    def test_character_groups(self, a2_p5, d4_p5):
        """Test character groups of abelian schemes and connected parts."""
        assert character_group(a2_p5).text() == "Z/3"
        assert sweedler_form(CatalogService.make_catalog(ADEType(KIND_A, 8), 3)).text() == "Z/9"
        with pytest.raises(NotAbelianException):
            character_group(d4_p5)

    def test_describe(self, a2_p5):
        """Test the one-line description."""
        assert a2_p5.describe() == f"r=3 over {build_field(5, 2).describe()} with 0 extra generators, |G|=3"
