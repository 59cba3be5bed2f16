import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from compknot.gamma import GAMMA, IDENTITY, MIRROR
from compknot.pdcode import (PDCode, PDParseError, PDValidationError, apply_gamma, canonical_form,
                             connected_sum, connected_sum_list, diagram_equal, parse, serialize,
                             validate)

from conftest import TREFOIL

# Worked example inputs: the same trefoil with quadruples listed in two orders.
D1 = '[[2,-6,-3,5],[6,-4,-1,3],[4,-2,-5,1]]'
D2 = '[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]'
SUM_D1_D2 = ((8, -12, -9, 11), (12, -10, -1, 9), (10, -8, -11, 7),
             (4, -2, -5, 1), (2, -6, -3, 5), (6, -4, -7, 3))


def label_pairing_ok(code):
    """Independent check: labels are exactly +-1..+-2n, each sign once."""
    n = code.n_edges
    labels = Counter(x for q in code.crossings for x in q)
    return set(labels) == {s * k for k in range(1, n + 1) for s in (1, -1)} and set(labels.values()) <= {1}


def follow_strand(code):
    """Walk the diagram from edge 1; a valid single-component code visits 1..2n in order."""
    out_of = {}
    for q in code.crossings:
        for pos in range(4):
            if q[pos] > 0:
                partner = q[(pos + 2) % 4]
                out_of[q[pos]] = -partner
    walk, k = [], 1
    for _ in range(code.n_edges):
        walk.append(k)
        k = out_of[k]
    return walk, k


def test_parse_trefoil(trefoil):
    assert trefoil.crossings == ((4, -2, -5, 1), (2, -6, -3, 5), (6, -4, -1, 3))
    assert validate(trefoil) is None


def test_parse_whitespace_and_roundtrip():
    d = parse(' [ [4, -2,-5, 1] ,\n[2,-6,-3,5],[6,-4,-1,3] ] ')
    assert serialize(d) == TREFOIL
    assert parse(serialize(d)) == d


def test_parse_arity_error():
    with pytest.raises(PDParseError) as exc:
        parse('[[1,2,3]]')
    assert exc.value.position == 1


@pytest.mark.parametrize('text', ['', '[', '[[1,2,3,4]', '[[1,2,3,4],]', '[[01,2,3,4]]',
                                  '[[1,2,3,4]]x', '[[1,-0,3,4]]', '[[1,2,3,4,5]]'])
def test_parse_syntax_errors(text):
    with pytest.raises(PDParseError):
        parse(text)


def test_parse_duplicate_label():
    with pytest.raises(PDValidationError) as exc:
        parse('[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,4]]')
    assert exc.value.violation.invariant == 'label-pairing'
    assert 'label 4 appears twice as positive' in str(exc.value)
    code = parse('[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,4]]', check=False)
    assert not label_pairing_ok(code)


def test_empty_code():
    d = parse('[]')
    assert validate(d) is None
    assert canonical_form(d) == d
    assert serialize(d) == '[]'


@pytest.mark.parametrize('quads,invariant', [
    ([(-5, 1, 4, -2), (2, -6, -3, 5), (6, -4, -1, 3)], 'under-incoming'),
    ([(4, -2, -6, 1), (2, -5, -3, 5), (6, -4, -1, 3)], 'under-strand'),
    ([(4, 2, -5, 1), (-2, -6, -3, 5), (6, -4, -1, 3)], 'over-strand'),
    ([(4, -2, -5, -1), (2, -6, -3, 5), (6, 1, -4, 3)], 'over-strand'),
    ([(1, -2, -3, 4)], 'label-range'),
    ([(1, -2, -2)], 'arity'),
])
def test_validate_violations(quads, invariant):
    v = validate(PDCode(quads))
    assert v is not None and v.invariant == invariant


def test_prime_table_valid(table):
    for r in table:
        assert validate(r.diagram) is None
        assert label_pairing_ok(r.diagram)
        assert follow_strand(r.diagram) == (list(range(1, r.diagram.n_edges + 1)), 1)


def test_apply_gamma_identity(trefoil):
    assert apply_gamma(IDENTITY, trefoil) == trefoil


def test_mirror_trefoil(trefoil):
    m = apply_gamma(MIRROR, trefoil)
    assert validate(m) is None and m.n_crossings == 3
    assert not diagram_equal(m, trefoil)


def test_gamma_action_on_table(table):
    for r in table:
        d = r.diagram
        for g in GAMMA:
            e = apply_gamma(g, d)
            assert validate(e) is None and e.n_crossings == d.n_crossings
            assert diagram_equal(apply_gamma(g, e), d)
            for h in GAMMA:
                assert diagram_equal(apply_gamma(g * h, d), apply_gamma(g, apply_gamma(h, d)))


def test_connected_sum_worked_example():
    d1, d2 = parse(D1), parse(D2)
    s = connected_sum(d1, d2)
    assert s.crossings == SUM_D1_D2
    assert validate(s) is None
    assert sorted(abs(x) for q in s for x in q) == sorted(list(range(1, 13)) * 2)


def test_connected_sum_rejects_empty(trefoil):
    with pytest.raises(ValueError):
        connected_sum(trefoil, parse('[]'))
    with pytest.raises(ValueError):
        connected_sum(parse('[]'), trefoil)


def test_connected_sum_rejects_invalid(trefoil):
    bad = parse('[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,4]]', check=False)
    with pytest.raises(PDValidationError):
        connected_sum(trefoil, bad)


def test_connected_sum_list(trefoil):
    assert connected_sum_list([trefoil]) == trefoil
    assert connected_sum_list([parse(D1), parse(D2)]).crossings == SUM_D1_D2
    s3 = connected_sum_list([trefoil] * 3)
    assert s3.n_crossings == 9 and validate(s3) is None
    assert follow_strand(s3) == (list(range(1, 19)), 1)
    with pytest.raises(ValueError):
        connected_sum_list([])


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_connected_sum_random_pairs(table, data):
    records = list(table)
    ds = [data.draw(st.sampled_from(records)).diagram for _ in range(data.draw(st.integers(2, 3)))]
    gs = [data.draw(st.sampled_from(GAMMA)) for _ in ds]
    s = connected_sum_list([apply_gamma(g, d) for g, d in zip(gs, ds)])
    assert s.n_crossings == sum(d.n_crossings for d in ds)
    assert validate(s) is None
    assert label_pairing_ok(s)
    assert follow_strand(s) == (list(range(1, s.n_edges + 1)), 1)


def test_canonical_form_worked_example():
    assert canonical_form(parse(D1)) == canonical_form(parse(D2))
    assert diagram_equal(parse(D1), parse(D2))


def brute_canonical(d):
    """All 2n cyclic relabelings, built independently with explicit maps."""
    n = d.n_edges
    best = None
    for s in range(n):
        mapping = {k: (k - 1 + s) % n + 1 for k in range(1, n + 1)}
        quads = [tuple(mapping[abs(x)] * (1 if x > 0 else -1) for x in q) for q in d.crossings]
        quads.sort(key=lambda q: q[0])
        if best is None or quads < best:
            best = quads
    return tuple(best)


def test_canonical_form_matches_brute(table):
    for r in table:
        c = canonical_form(r.diagram)
        assert c.crossings == brute_canonical(r.diagram)
        assert canonical_form(c) == c


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_canonical_form_invariant_under_relabel(table, data):
    d = data.draw(st.sampled_from(list(table))).diagram
    s = data.draw(st.integers(0, d.n_edges - 1))
    n = d.n_edges
    quads = [tuple(((abs(x) - 1 + s) % n + 1) * (1 if x > 0 else -1) for x in q) for q in d.crossings]
    random.Random(s).shuffle(quads)
    e = PDCode(quads)
    assert validate(e) is None
    assert diagram_equal(d, e)


def test_diagram_equal(table, trefoil):
    assert diagram_equal(trefoil, trefoil)
    assert not diagram_equal(trefoil, table['4_1'].diagram)
