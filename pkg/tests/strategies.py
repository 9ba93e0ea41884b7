from hypothesis import strategies as st

from evector import Digraph, Ranking, generate


@st.composite
def dags(draw, min_n: int = 0, max_n: int = 7) -> Digraph:
    """Acyclic digraphs: arcs go forward in a hidden order, then vertices are relabelled."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    relabel = draw(st.permutations(list(range(n))))
    return Digraph(n, frozenset((relabel[i], relabel[j]) for i, j in chosen))


@st.composite
def digraphs(draw, max_n: int = 7) -> Digraph:
    """Arbitrary simple digraphs, cycles allowed."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, frozenset(chosen))


@st.composite
def rankings(draw, n: int) -> Ranking:
    return Ranking.from_sequence(draw(st.permutations(list(range(n)))))


PROBABILITIES = (0.2, 0.35, 0.5, 0.65, 0.8)


def seeded_dags(count: int, max_n: int, seed: int = 0):
    """Reproducible random DAGs cycling through sizes 1..max_n and a few densities."""
    for index in range(count):
        n = 1 + index % max_n
        p = PROBABILITIES[index % len(PROBABILITIES)]
        yield generate('random_dag', n=n, p=p, seed=seed + index)
