"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from graphirr.enumeration import EnumerationSpec, enumerate_codes
from graphirr.graph import Graph, degree_stats, from_edge_list, is_connected
from graphirr.io import parse_graph6

ALL_PAIRS = {n: [(i, j) for i in range(n) for j in range(i + 1, n)] for n in range(1, 9)}


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = ALL_PAIRS[n]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
    return from_edge_list(n, edges)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    from hypothesis import assume

    g = draw(graphs(min_n=min_n, max_n=max_n))
    assume(is_connected(g))
    return g


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))


def permute(g: Graph, perm: list[int]) -> Graph:
    """Relabel by the ranks of ``perm[:n]``, so any long-enough key list works."""
    keys = perm[: g.n]
    rank = {v: i for i, v in enumerate(sorted(keys))}
    p = [rank[v] for v in keys]
    return from_edge_list(g.n, [(p[u], p[v]) for u, v in g.edges()])


# --- independent oracles -----------------------------------------------------


def s_definitional(g: Graph) -> Fraction:
    """Degree deviation straight from the definition, vertex by vertex."""
    avg = Fraction(2 * g.m, g.n)
    return sum((abs(Fraction(d) - avg) for d in g.degrees()), Fraction(0))


def var_definitional(g: Graph) -> Fraction:
    avg = Fraction(2 * g.m, g.n)
    return sum(((Fraction(d) - avg) ** 2 for d in g.degrees()), Fraction(0)) / g.n


def m1_definitional(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def ird_definitional(g: Graph) -> Fraction:
    st_ = degree_stats(g)
    n_max = st_.histogram[st_.max_degree]
    n_min = st_.histogram[st_.min_degree]
    return Fraction(2 * n_max * n_min, n_max + n_min) * (
        st_.max_degree - st_.min_degree
    )


# --- session-scoped populations ----------------------------------------------


@pytest.fixture(scope="session")
def all_graphs_upto6() -> dict[int, list[Graph]]:
    """Every isomorphism class on 1..6 vertices, disconnected included."""
    return {
        n: [parse_graph6(c) for c in enumerate_codes(EnumerationSpec(n=n))]
        for n in range(1, 7)
    }


@pytest.fixture(scope="session")
def connected_upto6(all_graphs_upto6) -> dict[int, list[Graph]]:
    return {
        n: [g for g in pop if is_connected(g)]
        for n, pop in all_graphs_upto6.items()
    }


@pytest.fixture(scope="session")
def connected_7() -> list[Graph]:
    """All 853 connected classes on 7 vertices; the expensive shared fixture."""
    codes = enumerate_codes(EnumerationSpec(n=7, connected_only=True))
    return [parse_graph6(c) for c in codes]


@pytest.fixture(scope="session")
def trees_upto10() -> dict[int, list[Graph]]:
    return {
        n: [
            parse_graph6(c)
            for c in enumerate_codes(EnumerationSpec(n=n, population="trees"))
        ]
        for n in range(2, 11)
    }


@pytest.fixture(scope="session")
def unicyclic_upto9() -> dict[int, list[Graph]]:
    return {
        n: [
            parse_graph6(c)
            for c in enumerate_codes(EnumerationSpec(n=n, population="unicyclic"))
        ]
        for n in range(3, 10)
    }
