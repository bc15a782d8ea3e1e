import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qgcount import oracle
from qgcount.perm import Permutation, compose, extend, inverse, parse
from qgcount.quasigroup import (
    CayleyTable,
    QuasigroupError,
    Transversal,
    from_transversal,
    is_isomorphism,
    isomorphic_by_bijection,
    isomorphic_by_conjugation,
    parse_text,
    to_transversal,
    validate,
)
from qgcount.verify import compare_iso, random_relabeling, random_table


def group_table(n, op):
    """Table of a group on 0..n-1 (identity 0), relabeled so the identity is n."""
    label = lambda x: n if x == 0 else x
    rows = [[0] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        rows[label(a) - 1][label(b) - 1] = label(op(a, b))
    return validate(rows)


Z3 = group_table(3, lambda a, b: (a + b) % 3)
Z4 = group_table(4, lambda a, b: (a + b) % 4)
V4 = group_table(4, lambda a, b: a ^ b)


@st.composite
def tables(draw, n):
    cols = []
    for j in range(1, n):
        rest = draw(st.permutations([x for x in range(1, n + 1) if x != j]))
        cols.append(list(rest) + [j])
    cols.append(list(range(1, n + 1)))
    return CayleyTable(n, tuple(tuple(c[i] for c in cols) for i in range(n)))


@pytest.fixture(scope="module")
def order4():
    return list(oracle.enumerate_tables(4))


def test_validate_group():
    assert Z3.table == ((2, 3, 1), (3, 1, 2), (1, 2, 3))
    assert Z3.is_associative()


def test_validate_rejects_repeated_column_entry():
    with pytest.raises(QuasigroupError, match="column not bijective"):
        validate([[1, 1, 1], [3, 3, 2], [1, 2, 3]])


def test_validate_rejects_identity_violation():
    with pytest.raises(QuasigroupError, match="identity axiom"):
        validate([[2, 3, 2], [3, 1, 2], [1, 2, 3]])


def test_validate_rejects_shape_and_range():
    with pytest.raises(QuasigroupError, match="row 2"):
        validate([[1, 2], [2]])
    with pytest.raises(QuasigroupError, match="outside"):
        validate([[3, 1], [1, 2]])


def test_transversal_invariants():
    with pytest.raises(QuasigroupError):
        Transversal(2, (Permutation.identity(2), Permutation.identity(2)))
    with pytest.raises(QuasigroupError):
        Transversal(2, (Permutation((2, 1)), Permutation((1, 2)), Permutation((1, 2))))


def test_to_transversal_examples():
    assert to_transversal(validate([[1]])).perms == (Permutation.identity(1),)
    perms = to_transversal(Z3).perms
    assert [p(3) for p in perms] == [1, 2, 3]
    # right translation by element j
    for j, p in enumerate(perms, 1):
        assert all(p(i) == Z3(i, j) for i in range(1, 4))


def test_order_two():
    t = Transversal(2, (Permutation((2, 1)), Permutation.identity(2)))
    assert from_transversal(t).table == ((2, 1), (1, 2))


def test_round_trip_order4_exhaustive(order4):
    for q in order4:
        t = to_transversal(q)
        assert from_transversal(t) == q
        assert to_transversal(from_transversal(t)) == t


def test_round_trip_order5_sampled():
    rng = random.Random(5)
    for _ in range(10_000):
        q = random_table(5, rng)
        assert from_transversal(to_transversal(q)) == q


@settings(max_examples=300)
@given(tables(6))
def test_round_trip_order6(q):
    assert from_transversal(to_transversal(q)) == q


def test_non_canonical_representatives():
    """Left-multiplying a representative by the stabilizer keeps its coset."""
    rng = random.Random(11)
    n = 5
    for _ in range(100):
        perms = list(to_transversal(random_table(n, rng)).perms)
        for i in range(n - 1):
            h = extend(Permutation(rng.sample(range(1, n), n - 1)), n)
            perms[i] = compose(h, perms[i])
        t = Transversal(n, tuple(perms))
        q = from_transversal(t)
        assert [p(n) for p in t.perms] == list(range(1, n + 1))
        assert validate(q.table) == q
        for i, j in product(range(1, n + 1), repeat=2):
            assert q(i, j) == compose(t.perms[i - 1], t.perms[j - 1])(n)


def asymmetric_order3():
    for q in oracle.enumerate_tables(3):
        if oracle.stabilizer_order(q) == 1:
            return q


def test_isomorphism_examples():
    q = asymmetric_order3()
    swap = Permutation((2, 1, 3))
    r = q.relabel(swap)
    assert r != q
    assert isomorphic_by_bijection(q, q).is_identity()
    assert isomorphic_by_conjugation(q, q).is_identity()
    assert isomorphic_by_bijection(q, r) == swap
    assert isomorphic_by_conjugation(q, r) == swap


def test_distinct_orbits_not_isomorphic():
    reps = oracle.orbit_representatives(4)
    assert len(reps) == 44
    a, b = reps[0], reps[-1]
    assert isomorphic_by_bijection(a, b) is None
    assert isomorphic_by_conjugation(a, b) is None


def test_order_mismatch():
    with pytest.raises(ValueError):
        isomorphic_by_bijection(Z3, Z4)
    with pytest.raises(ValueError):
        isomorphic_by_conjugation(Z3, Z4)


def test_iso_tests_agree_order4_exhaustive(order4):
    for a in order4:
        for b in order4:
            ok, _ = compare_iso(a, b)
            assert ok


def test_iso_tests_agree_order5_sampled():
    rng = random.Random(3)
    found = 0
    for k in range(1_000):
        a = random_table(5, rng)
        b = a.relabel(random_relabeling(5, rng)) if k % 2 else random_table(5, rng)
        ok, iso = compare_iso(a, b)
        assert ok
        found += iso
    assert found >= 500


def test_conjugating_witness_is_the_bijection():
    """The conjugating element equals the bijection: x_i^f = y_{i^sigma}."""
    rng = random.Random(1)
    for _ in range(200):
        a = random_table(5, rng)
        b = a.relabel(random_relabeling(5, rng))
        s = isomorphic_by_conjugation(a, b)
        assert is_isomorphism(s, a, b)
        assert to_transversal(a).conjugate_by(s) == to_transversal(b)


def test_equivalence_relation_order4(order4):
    rng = random.Random(4)
    for _ in range(200):
        a = rng.choice(order4)
        f = random_relabeling(4, rng)
        g = random_relabeling(4, rng)
        b, c = a.relabel(f), a.relabel(f).relabel(g)
        assert is_isomorphism(isomorphic_by_bijection(a, a), a, a)
        w = isomorphic_by_bijection(a, b)
        assert is_isomorphism(inverse(w), b, a)
        v = isomorphic_by_bijection(b, c)
        assert is_isomorphism(compose(w, v), a, c)


def test_conjugation_transport_order4(order4):
    for q in order4:
        t = to_transversal(q)
        for s in oracle.all_permutations(3):
            s4 = extend(s, 4)
            r = from_transversal(t.conjugate_by(s))
            assert r == q.relabel(s4)
            assert is_isomorphism(s4, q, r)


def test_conjugate_by_rejects_moving_n():
    with pytest.raises(ValueError):
        to_transversal(Z3).conjugate_by(Permutation((1, 3, 2)))


def test_groups_of_order_four():
    assert Z4.is_associative() and V4.is_associative()
    assert isomorphic_by_bijection(Z4, V4) is None
    assert isomorphic_by_conjugation(Z4, V4) is None
    rng = random.Random(2)
    for _ in range(10):
        s = random_relabeling(4, rng)
        assert isomorphic_by_conjugation(Z4, Z4.relabel(s)) is not None


def test_associative_order4_tables_form_two_classes(order4):
    groups = [q for q in order4 if q.is_associative()]
    classes = []
    for q in groups:
        if not any(isomorphic_by_bijection(c, q) for c in classes):
            classes.append(q)
    assert len(classes) == 2
    assert {isomorphic_by_bijection(c, Z4) is not None for c in classes} == {True, False}


def test_parse_formats():
    text = Z3.to_text()
    assert parse_text(text) == Z3
    assert parse_text(json.dumps(Z3.to_json())) == Z3
    t = to_transversal(Z3)
    assert parse_text("\n".join(t.to_lines())) == t
    assert parse_text(json.dumps(t.to_json())) == t
    assert parse_text("# a comment\n3\n2 3 1\n3 1 2\n\n1 2 3\n") == Z3
    assert parse_text("1\n1\n") == validate([[1]])
    assert parse_text("1\n") == Transversal(1, (Permutation.identity(1),))


def test_parse_errors():
    with pytest.raises(QuasigroupError, match="identity axiom"):
        parse_text("3\n2 3 2\n3 1 2\n1 2 3\n")
    with pytest.raises(ValueError):
        parse_text("2 1 3\n1 2 3\n")
    with pytest.raises(QuasigroupError):
        parse_text("")
    with pytest.raises(QuasigroupError):
        parse_text('{"rows": []}')
