import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauerheight.diagram import (U, Diagram, compose, e_n, e_nt, eta, eta_inverse, flip, identity,
                                  pair_partitions, polar_decompose, propagating_number,
                                  restrict_last_two, sigma, tensor, tl_generator)

from conftest import pair_partitions as pp
from conftest import set_partitions


def compose_oracle(p, q):
    """Glue the two diagram graphs with networkx and read off components."""
    g = nx.Graph()
    for b in p.blocks:
        nodes = [("t", x) if x > 0 else ("m", -x) for x in b]
        g.add_nodes_from(nodes)
        nx.add_path(g, nodes)
    for b in q.blocks:
        nodes = [("m", x) if x > 0 else ("b", -x) for x in b]
        g.add_nodes_from(nodes)
        nx.add_path(g, nodes)
    blocks, loops = [], 0
    for comp in nx.connected_components(g):
        ext = [x if s == "t" else -x for s, x in comp if s != "m"]
        if ext:
            blocks.append(tuple(ext))
        else:
            loops += 1
    return Diagram(p.n, q.m, tuple(blocks), p.delta_exp + q.delta_exp + loops)


def test_worked_product():
    p = Diagram(1, 3, ((1, -2), (-1, -3)), 1)
    q = Diagram(3, 5, ((1, -5), (2, -4), (3, -1), (-2, -3)))
    assert compose(p, q) == Diagram(1, 5, ((1, -4), (-1, -5), (-2, -3)), 1)


@given(st.integers(0, 4).flatmap(lambda m: st.tuples(set_partitions(3, m), set_partitions(m, 2))))
def test_compose_matches_graph_oracle_on_set_partitions(pq):
    p, q = pq
    assert compose(p, q) == compose_oracle(p, q)


@given(st.data())
def test_compose_matches_oracle_on_pair_partitions(data):
    n, m, k = data.draw(st.integers(0, 4)), data.draw(st.integers(0, 4)), data.draw(st.integers(0, 4))
    m += (n + m) % 2
    k += (m + k) % 2
    p, q = data.draw(pp(n, m)), data.draw(pp(m, k))
    assert compose(p, q) == compose_oracle(p, q)


@pytest.mark.parametrize("n,m,count", [(0, 0, 1), (1, 1, 1), (2, 2, 3), (3, 3, 15), (4, 4, 105), (4, 2, 15)])
def test_double_factorial_counts(n, m, count):
    ps = pair_partitions(n, m)
    assert len(ps) == count == len(set(ps))


def test_small_identities():
    assert compose(U(), U()) == U().scaled(1)
    assert compose(e_n(3), e_n(3)) == e_n(3).scaled(1)
    assert compose(sigma(1, 2), sigma(1, 2)) == identity(2)
    e1, e2 = tl_generator(1, 3), tl_generator(2, 3)
    assert compose(compose(e1, e2), e1) == e1
    assert compose(compose(e2, e1), e2) == e2
    assert e_nt(4, 2) == tensor(U(), U())


def test_invalid_blocks_rejected():
    with pytest.raises(ValueError):
        Diagram(2, 2, ((1, -1),))
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


@given(st.data())
def test_polar_decomposition(data):
    n = data.draw(st.integers(0, 6))
    m = data.draw(st.integers(0, 6).filter(lambda k: (k + n) % 2 == 0))
    p = data.draw(pp(n, m))
    left, mid, right = polar_decompose(p)
    assert compose(compose(left, mid), right) == p
    k = propagating_number(p)
    assert left.m == k and right.n == k
    # outer factors have order-preserving propagating lines
    for half in (left, flip(right)):
        lines = sorted((max(b), -min(b)) for b in half.propagating_blocks())
        assert [s for _, s in lines] == list(range(1, k + 1))


@given(st.integers(1, 5).flatmap(lambda n: pp(n, n)))
def test_eta_bijection(p):
    q = eta(p)
    assert (q.n, q.m) == (p.n + 1, p.m - 1)
    assert eta_inverse(q) == p


def test_restrict_last_two():
    d = sigma(1, 2)
    assert restrict_last_two(tensor(d, U())) == d
    with pytest.raises(ValueError):
        restrict_last_two(identity(4))


def test_json_round_trip():
    p = Diagram(3, 1, ((1, 3), (2, -1)), 2)
    assert Diagram.from_json(p.to_json()) == p
