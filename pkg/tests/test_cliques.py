import random
from itertools import combinations

import pytest

from kisslab.cliques import greedy_clique, max_clique, max_independent_set


def random_graph(rng, n, p):
    adj = [0] * n
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def brute_clique_size(adj):
    n = len(adj)
    for k in range(n, 0, -1):
        for sub in combinations(range(n), k):
            if all(adj[a] >> b & 1 for a, b in combinations(sub, 2)):
                return k
    return 0


def is_clique(adj, vs):
    return all(adj[a] >> b & 1 for a, b in combinations(vs, 2))


@pytest.mark.parametrize("seed", range(30))
def test_max_clique_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 13)
    adj = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
    clique, complete = max_clique(adj, seed=seed)
    assert complete
    assert is_clique(adj, clique)
    assert len(clique) == brute_clique_size(adj)
    assert clique == sorted(clique)


def test_caps_and_target():
    rng = random.Random(1)
    adj = random_graph(rng, 40, 0.7)
    clique, complete = max_clique(adj, max_nodes=3)
    assert not complete and is_clique(adj, clique)
    clique, _ = max_clique(adj, target=2)
    assert len(clique) >= 2 and is_clique(adj, clique)
    clique, _ = max_clique(adj, beam_width=1)
    assert is_clique(adj, clique)


def test_seed_determinism():
    adj = random_graph(random.Random(4), 30, 0.6)
    assert max_clique(adj, seed=9) == max_clique(adj, seed=9)


def test_greedy_and_independent_set():
    # path 0-1-2-3: greedy from 0 takes {0,1}
    adj = [0b10, 0b101, 0b1010, 0b100]
    assert greedy_clique(adj, [0, 1, 2, 3]) == [0, 1]
    idx, complete = max_independent_set(adj)
    assert complete and len(idx) == 2
    assert all(not (adj[a] >> b & 1) for a, b in combinations(idx, 2))
    assert max_clique([]) == ([], True)
