"""
Unit tests for 2x2 matrices and group closures.
"""
import pytest

from app.exceptions.custom_exceptions import (
    CapExceededException,
    NonSemisimpleException,
    NotAbelianException,
    SingularMatrixException,
)
from app.models.matrix import (
    Mat2,
    center,
    close_group,
    element_order,
    is_abelian,
    is_cyclic,
    is_pseudo_reflection,
    is_transvection,
    simultaneous_diagonalize,
)


@pytest.mark.unit
class TestMat2:
    """Test cases for Mat2 arithmetic."""

    def test_inverse(self, f5):
        """Test g * g^-1 is the identity."""
        g = Mat2.of(f5, 1, 2, 3, 2)
        assert (g * g.inverse()).is_identity()
        assert g.det().code == 1

    def test_singular_inverse(self, f5):
        """Test singular matrices have no inverse."""
        with pytest.raises(SingularMatrixException):
            Mat2.of(f5, 1, 2, 2, 4).inverse()

    def test_power(self, f5):
        """Test positive and negative powers."""
        g = Mat2.of(f5, 0, 1, -1, 0)
        assert (g ** 2) == Mat2.of(f5, -1, 0, 0, -1)
        assert (g ** -1) * g == Mat2.identity(f5)

    def test_text(self, f5):
        """Test canonical matrix text."""
        assert Mat2.of(f5, 0, 1, -1, 0).text() == "[[0,1],[4,0]]"

    def test_shapes(self, f5):
        """Test diagonal, antidiagonal and scalar predicates."""
        assert Mat2.diag(f5.element(2), f5.element(3)).is_diagonal()
        assert Mat2.of(f5, 0, 2, 2, 0).is_antidiagonal()
        assert Mat2.of(f5, 4, 0, 0, 4).is_scalar()
        assert not Mat2.of(f5, 1, 1, 0, 1).is_diagonal()


@pytest.mark.unit
class TestReflections:
    """Test cases for pseudo-reflections and transvections."""

    def test_transvection(self, f5):
        """Test [[1,1],[0,1]] is a transvection."""
        g = Mat2.of(f5, 1, 1, 0, 1)
        assert is_pseudo_reflection(g)
        assert is_transvection(g)

    def test_identity(self, f5):
        """Test the identity is neither."""
        assert not is_pseudo_reflection(Mat2.identity(f5))
        assert not is_transvection(Mat2.identity(f5))

    def test_minus_identity(self, f5):
        """Test -I has g - I of rank 2."""
        assert not is_pseudo_reflection(Mat2.of(f5, -1, 0, 0, -1))

    def test_diagonal_reflection(self, f5):
        """Test diag(2, 1) is a pseudo-reflection but not a transvection."""
        g = Mat2.of(f5, 2, 0, 0, 1)
        assert is_pseudo_reflection(g)
        assert not is_transvection(g)

    def test_torus_element(self, f5):
        """Test diag(z, 1/z) with z != +-1 is not a transvection."""
        assert not is_transvection(Mat2.of(f5, 2, 0, 0, 3))


@pytest.mark.unit
class TestGroupClosure:
    """Test cases for close_group and its helpers."""

    def test_cyclic_of_order_3(self, f7):
        """Test diag(2, 4) generates a group of order 3 over F_7."""
        H = close_group([Mat2.of(f7, 2, 0, 0, 4)])
        assert H.order == 3
        assert is_cyclic(H)

    def test_trivial(self, f7):
        """Test the identity generates the trivial group."""
        assert close_group([Mat2.identity(f7)]).order == 1

    def test_sigma_order_4(self, f5):
        """Test [[0,2],[2,0]] squares to -I and has order 4 over F_5."""
        sigma = Mat2.of(f5, 0, 2, 2, 0)
        assert sigma * sigma == Mat2.of(f5, -1, 0, 0, -1)
        assert close_group([sigma]).order == 4
        assert element_order(sigma) == 4

    def test_closure_idempotent(self, d4_p5):
        """Test closing the elements of a group gives the group back."""
        H = d4_p5.reduced_part
        again = close_group(H.elements)
        assert again.keys() == H.keys()

    def test_element_orders_divide(self, d4_p5):
        """Test every element order divides the group order."""
        H = d4_p5.reduced_part
        assert all(H.order % element_order(g) == 0 for g in H.elements)

    def test_quaternion_structure(self, d4_p5):
        """Test the quaternion group is non-abelian with center {+-I}."""
        H = d4_p5.reduced_part
        assert H.order == 8
        assert not is_abelian(H)
        assert not is_cyclic(H)
        assert len(center(H)) == 2

    def test_transvection_group_hits_cap(self, f5):
        """Test a small cap stops the closure."""
        with pytest.raises(CapExceededException):
            close_group([Mat2.of(f5, 1, 1, 0, 1)], cap=3)

    def test_element_order_cap(self, f5):
        """Test element_order raises past its cap."""
        with pytest.raises(CapExceededException):
            element_order(Mat2.of(f5, 1, 1, 0, 1), cap=3)

    def test_contains(self, f5):
        """Test membership after closing."""
        H = close_group([Mat2.of(f5, 0, 1, -1, 0)])
        assert H.contains(Mat2.of(f5, -1, 0, 0, -1))
        assert not H.contains(Mat2.of(f5, 2, 0, 0, 3))


@pytest.mark.unit
class TestSimultaneousDiagonalization:
    """Test cases for simultaneous_diagonalize."""

    def test_rotation_over_f5(self, f5):
        """Test <[[0,1],[-1,0]]> over F_5 diagonalizes to diag(2, 3)."""
        J = Mat2.of(f5, 0, 1, -1, 0)
        T = simultaneous_diagonalize(close_group([J]))
        assert T == Mat2.of(f5, 3, 4, 3, 1)
        assert T.in_sl2()
        assert T * J * T.inverse() == Mat2.of(f5, 2, 0, 0, 3)

    def test_already_diagonal(self, f7):
        """Test a scalar group needs no conjugation."""
        T = simultaneous_diagonalize(close_group([Mat2.of(f7, -1, 0, 0, -1)]))
        assert T.is_identity()

    def test_off_diagonal_zero(self, a3_p5, f5):
        """Test conjugated elements have zero off-diagonal entries."""
        T0 = Mat2.of(f5, 1, 2, 1, 3)
        G = close_group([T0 * g * T0.inverse() for g in a3_p5.reduced_generators])
        T = simultaneous_diagonalize(G)
        assert all((T * g * T.inverse()).is_diagonal() for g in G.elements)

    def test_non_semisimple(self, f5):
        """Test a transvection group is rejected."""
        with pytest.raises(NonSemisimpleException):
            simultaneous_diagonalize(close_group([Mat2.of(f5, 1, 1, 0, 1)]))

    def test_non_abelian(self, d4_p5):
        """Test the quaternion group is rejected."""
        with pytest.raises(NotAbelianException):
            simultaneous_diagonalize(d4_p5.reduced_part)
