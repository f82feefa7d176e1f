import itertools
import json

import pytest
from hypothesis import given, strategies as st

from epos.efun import (
    EFunction,
    add,
    diff_terms,
    e_term,
    from_json_dict,
    is_e_positive,
    mul,
    negative_terms,
    p_partition_to_e,
    p_to_e,
    scale,
    term_sort_key,
    to_json_dict,
)

# Independent oracle: expand symmetric functions as honest polynomials in k
# variables, keyed by exponent tuples.


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def poly_e(r, k):
    out = {}
    for subset in itertools.combinations(range(k), r):
        expo = [0] * k
        for i in subset:
            expo[i] = 1
        out[tuple(expo)] = 1
    return out


def poly_p(r, k):
    out = {}
    for i in range(k):
        expo = [0] * k
        expo[i] = r
        out[tuple(expo)] = 1
    return out


def efunction_as_poly(f, k):
    total = {}
    for partition, coeff in f.items():
        term = {tuple([0] * k): 1}
        for part in partition:
            term = poly_mul(term, poly_e(part, k))
        for expo, c in term.items():
            new = total.get(expo, 0) + coeff * c
            if new:
                total[expo] = new
            else:
                total.pop(expo, None)
    return total


small_efun = st.dictionaries(
    st.lists(st.integers(1, 4), min_size=1, max_size=3).map(lambda p: tuple(sorted(p, reverse=True))),
    st.integers(-9, 9),
    max_size=4,
).map(EFunction)


class TestConstruction:
    def test_e_term_sorts(self):
        assert e_term((1, 2), 1).items() == [((2, 1), 1)]

    def test_e_term_examples(self):
        assert e_term((6, 2, 1, 1), 7).coefficient((6, 2, 1, 1)) == 7
        assert e_term((3, 3), -2).items() == [((3, 3), -2)]

    def test_zero_coefficient_gives_zero_function(self):
        assert not e_term((3,), 0)
        assert e_term((3,), 0) == EFunction.zero()

    def test_invalid_parts(self):
        with pytest.raises(ValueError):
            e_term((0, 2), 1)

    def test_from_terms_accumulates(self):
        f = EFunction.from_terms([((2, 1), 3), ((1, 2), -3), ((3,), 5)])
        assert f.items() == [((3,), 5)]


class TestArithmetic:
    def test_single_term_product(self):
        assert (e_term((2, 1), 1) * e_term((2,), 1)).items() == [((2, 2, 1), 1)]

    def test_cancellation(self):
        assert not add(e_term((3,), 3), e_term((3,), -3))

    def test_path_product(self):
        p1 = e_term((1,), 1)
        p3 = EFunction({(3,): 3, (2, 1): 1})
        assert mul(p1, p3) == EFunction({(3, 1): 3, (2, 1, 1): 1})

    def test_scalar_forms(self):
        f = EFunction({(2,): 3, (1, 1): -1})
        assert scale(f, -2) == -2 * f == f * -2
        assert scale(f, 0) == EFunction.zero()

    @given(small_efun, small_efun, small_efun)
    def test_ring_laws(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(small_efun, small_efun, st.integers(-5, 5))
    def test_scale_compatibility(self, f, g, c):
        assert scale(f + g, c) == scale(f, c) + scale(g, c)
        assert scale(f, c) * g == scale(f * g, c)

    @given(small_efun, small_efun)
    def test_no_stored_zeros(self, f, g):
        for result in (f + g, f - g, f * g):
            assert all(coeff != 0 for _, coeff in result.items())

    def test_homogeneous_degrees_add(self):
        f = EFunction({(2, 1): 5})
        g = EFunction({(3, 3): 2, (4, 2): 1})
        assert f.degree() == 3 and g.degree() == 6
        assert (f * g).degree() == 9
        assert not (f + g).is_homogeneous()


class TestPositivity:
    def test_positive(self):
        assert is_e_positive(EFunction({(3,): 3, (2, 1): 1}))

    def test_negative(self):
        f = EFunction({(2, 2): -1})
        assert not is_e_positive(f)
        assert negative_terms(f) == [((2, 2), -1)]

    def test_negative_terms_sorted(self):
        f = EFunction({(2, 2): -1, (4,): -2, (3, 1): 7, (2, 1, 1): -3})
        assert negative_terms(f) == [((4,), -2), ((2, 2), -1), ((2, 1, 1), -3)]


class TestPowerSums:
    def test_frozen_small_values(self):
        assert p_to_e(1) == EFunction({(1,): 1})
        assert p_to_e(2) == EFunction({(1, 1): 1, (2,): -2})
        assert p_to_e(3) == EFunction({(1, 1, 1): 1, (2, 1): -3, (3,): 3})

    def test_domain_error(self):
        with pytest.raises(ValueError):
            p_to_e(0)

    @pytest.mark.parametrize("r", range(1, 7))
    def test_against_polynomial_oracle(self, r):
        assert efunction_as_poly(p_to_e(r), r) == poly_p(r, r)

    def test_partition_products(self):
        assert p_partition_to_e((1,)) == EFunction({(1,): 1})
        assert p_partition_to_e((2, 1)) == EFunction({(1, 1, 1): 1, (2, 1): -2})
        lam = (3, 2)
        k = sum(lam)
        assert efunction_as_poly(p_partition_to_e(lam), k) == poly_mul(poly_p(3, k), poly_p(2, k))


class TestSerialization:
    def test_canonical_term_order(self):
        f = EFunction({(8, 1, 1): 7, (10,): 10, (8, 2): 22, (9, 1): 17})
        assert [tuple(t["partition"]) for t in to_json_dict(f)["terms"]] == [
            (10,), (9, 1), (8, 2), (8, 1, 1),
        ]

    def test_json_roundtrip(self):
        f = EFunction({(3, 2): 12345678901234567890, (5,): -7})
        data = to_json_dict(f)
        assert data["basis"] == "e"
        assert data["degree"] == 5
        assert all(isinstance(t["coeff"], str) for t in data["terms"])
        assert from_json_dict(json.loads(json.dumps(data))) == f

    def test_from_json_rejects_other_bases(self):
        with pytest.raises(ValueError):
            from_json_dict({"basis": "m", "terms": []})

    def test_sort_key_orders_by_length_then_reverse_lex(self):
        keys = [(10,), (9, 1), (8, 2), (5, 5), (8, 1, 1), (4, 4, 2)]
        assert sorted(keys, key=term_sort_key) == keys

    def test_diff_terms_reports_mismatch(self):
        f = EFunction({(2,): 1})
        g = EFunction({(2,): 2, (1, 1): 1})
        report = diff_terms(f, g)
        assert any("e[2]" in line for line in report)
