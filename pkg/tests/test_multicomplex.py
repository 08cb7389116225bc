from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bqzeta.errors import ArgumentError, ZeroDivisorError
from bqzeta.multicomplex import (
    ComplexRational,
    IdempotentVector,
    Multicomplex,
    from_idempotent,
    from_stage,
    idempotent_set,
    is_zero_divisor,
    mc_add,
    mc_inverse,
    mc_mul,
    to_idempotent,
    to_stage,
    unit_product,
)
from bqzeta.verify import bicomplex_formula, tricomplex_formula

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def elements(level):
    return st.lists(rationals, min_size=1 << level, max_size=1 << level).map(
        lambda c: Multicomplex(level, c)
    )


levels = st.sampled_from([2, 3, 4])


@st.composite
def same_level(draw, count):
    level = draw(levels)
    return [draw(elements(level)) for _ in range(count)]


def cr(re, im=0):
    return ComplexRational(Fraction(re), Fraction(im))


E = Multicomplex(2, [Fraction(1, 2), 0, 0, Fraction(1, 2)])  # (1 + k)/2
E_BAR = Multicomplex(2, [Fraction(1, 2), 0, 0, Fraction(-1, 2)])


class TestArithmetic:
    def test_additive_cancellation(self):
        j = Multicomplex.unit(2, 2)
        one = Multicomplex.one(2)
        assert mc_add(one + j, 2 * one - j) == Multicomplex.scalar(2, 3)

    def test_zero_is_additive_identity(self):
        z = Multicomplex(3, range(8))
        assert z + Multicomplex.zero(3) == z

    def test_imaginary_unit_squares_to_minus_one(self):
        for level in (1, 2, 3, 4):
            for t in range(1, level + 1):
                i = Multicomplex.unit(level, t)
                assert mc_mul(i, i) == Multicomplex.scalar(level, -1)

    def test_hyperbolic_unit_squares_to_one(self):
        k = Multicomplex.unit(2, 1, 2)
        assert k * k == Multicomplex.one(2)

    def test_idempotents_annihilate(self):
        assert E * E_BAR == Multicomplex.zero(2)
        assert E * E == E and E_BAR * E_BAR == E_BAR

    @pytest.mark.parametrize(
        "i, j, expected",
        [
            (0b01, 0b01, (-1, 0b00)),
            (0b01, 0b10, (1, 0b11)),
            (0b11, 0b11, (1, 0b00)),
            (0b11, 0b01, (-1, 0b10)),
            (0b111, 0b101, (1, 0b010)),
            (0b111, 0b111, (-1, 0b000)),
        ],
    )
    def test_unit_product_sign_rule(self, i, j, expected):
        assert unit_product(i, j) == expected

    def test_level_mismatch(self):
        with pytest.raises(ArgumentError):
            mc_add(Multicomplex.one(2), Multicomplex.one(3))
        with pytest.raises(ArgumentError):
            mc_mul(Multicomplex.one(2), Multicomplex.one(3))

    def test_bad_construction(self):
        with pytest.raises(ArgumentError):
            Multicomplex(2, [1, 2, 3])
        with pytest.raises(ArgumentError):
            Multicomplex(0, [1])
        with pytest.raises(ArgumentError):
            Multicomplex.unit(2, 3)

    def test_immutable(self):
        z = Multicomplex.one(2)
        with pytest.raises(AttributeError):
            z.level = 3

    @given(same_level(2))
    def test_addition_is_coordinatewise(self, pair):
        z, w = pair
        assert (z + w).coords == tuple(a + b for a, b in zip(z.coords, w.coords))

    @given(same_level(3))
    def test_ring_axioms(self, triple):
        a, b, c = triple
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(elements(3), st.integers(0, 4))
    def test_power_is_repeated_product(self, z, m):
        expected = Multicomplex.one(3)
        for _ in range(m):
            expected = expected * z
        assert z**m == expected


class TestIdempotent:
    def test_identity_maps_to_identity(self):
        assert to_idempotent(Multicomplex.one(2)).components == (cr(1), cr(1))

    def test_hyperbolic_unit_image(self):
        assert to_idempotent(Multicomplex.unit(2, 1, 2)).components == (cr(1), cr(-1))

    def test_inverse_examples(self):
        assert from_idempotent(IdempotentVector(2, [cr(1), cr(1)])) == Multicomplex.one(2)
        assert from_idempotent(IdempotentVector(2, [cr(1), cr(-1)])) == Multicomplex.unit(2, 1, 2)

    def test_level_one_rejected(self):
        with pytest.raises(ArgumentError):
            to_idempotent(Multicomplex.one(1))

    @pytest.mark.parametrize("level, formula", [(2, bicomplex_formula), (3, tricomplex_formula)])
    def test_basis_sweep_matches_coordinate_formula(self, level, formula):
        size = 1 << level
        for k in range(size):
            basis = [int(i == k) for i in range(size)]
            got = [(c.re, c.im) for c in to_idempotent(Multicomplex(level, basis)).components]
            assert got == formula(basis)

    @given(elements(3))
    def test_tricomplex_formula_on_random_input(self, z):
        got = [(c.re, c.im) for c in to_idempotent(z).components]
        assert got == tricomplex_formula(z.coords)

    @given(same_level(2))
    def test_homomorphism(self, pair):
        z, w = pair
        assert to_idempotent(z * w) == to_idempotent(z) * to_idempotent(w)
        assert to_idempotent(z + w) == to_idempotent(z) + to_idempotent(w)

    @given(elements(4))
    def test_roundtrip(self, z):
        assert from_idempotent(to_idempotent(z)) == z

    @given(elements(3), st.integers(0, 5))
    def test_power_law(self, z, m):
        comps = to_idempotent(z).components
        assert to_idempotent(z**m).components == tuple(c**m for c in comps)

    @given(elements(4), st.integers(1, 3))
    def test_intermediate_stages_roundtrip(self, z, k):
        parts = to_stage(z, k)
        assert len(parts) == 1 << k
        assert all(p.level == z.level - k for p in parts)
        assert from_stage(parts) == z

    def test_component_product_checks_level(self):
        with pytest.raises(ArgumentError):
            to_idempotent(Multicomplex.one(2)) * to_idempotent(Multicomplex.one(3))


class TestInverse:
    def test_scalar(self):
        assert mc_inverse(Multicomplex.scalar(2, 2)) == Multicomplex.scalar(2, Fraction(1, 2))

    def test_idempotent_has_no_inverse(self):
        with pytest.raises(ZeroDivisorError):
            mc_inverse(E)

    @given(elements(3))
    def test_product_with_inverse_is_one(self, z):
        if is_zero_divisor(z) or not z:
            with pytest.raises(ZeroDivisorError):
                mc_inverse(z)
        else:
            assert z * mc_inverse(z) == Multicomplex.one(3)
            assert z / z == Multicomplex.one(3)

    def test_zero_divisor_examples(self):
        assert is_zero_divisor(E_BAR)
        assert not is_zero_divisor(Multicomplex.one(2) + Multicomplex.unit(2, 1))
        assert not is_zero_divisor(Multicomplex.zero(2))


class TestIdempotentSets:
    def test_first_set_is_e_and_e_bar(self):
        assert idempotent_set(2, 1) == [E, E_BAR]

    @pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
    def test_orthogonal_idempotents_summing_to_one(self, n, k):
        elems = idempotent_set(n, k)
        assert len(elems) == 1 << k
        zero = Multicomplex.zero(n)
        for a, x in enumerate(elems):
            assert x * x == x
            for y in elems[a + 1 :]:
                assert x * y == zero
        total = zero
        for x in elems:
            total = total + x
        assert total == Multicomplex.one(n)

    @given(elements(3))
    def test_final_stage_decomposition(self, z):
        # Z = sum beta_j e_j with beta_j embedded through the first unit
        v = to_idempotent(z)
        total = Multicomplex.zero(3)
        for beta, e in zip(v.components, idempotent_set(3, 2)):
            total = total + Multicomplex.from_complex(3, beta) * e
        assert total == z

    @pytest.mark.parametrize("n, k", [(2, 0), (2, 2), (3, 3), (1, 1)])
    def test_out_of_range(self, n, k):
        with pytest.raises(ArgumentError):
            idempotent_set(n, k)


class TestSerialisation:
    def test_json_shape(self):
        z = Multicomplex(2, [Fraction(1, 2), -3, 0, Fraction(-7, 3)])
        assert z.to_dict() == {"level": 2, "coords": ["1/2", "-3/1", "0/1", "-7/3"]}

    @given(elements(3))
    def test_json_roundtrip(self, z):
        assert Multicomplex.from_json(z.to_json()) == z

    def test_hash_consistent_with_eq(self):
        a = Multicomplex(2, [1, 0, 0, 0])
        b = Multicomplex(2, [Fraction(2, 2), 0, 0, 0])
        assert a == b and hash(a) == hash(b)
