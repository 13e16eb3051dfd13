"""Independent reference computations used to derive expected test values.

Nothing here imports the code paths it checks.
"""

from collections import deque
from math import comb

SQUARE_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))
HEX_STEPS = ((1, -1, 0), (1, 0, -1), (0, 1, -1), (-1, 1, 0), (-1, 0, 1), (0, -1, 1))


def steps(kind):
    return SQUARE_STEPS if kind == "square" else HEX_STEPS


def bfs_distances(kind, source, radius):
    """Hop counts from ``source`` to every cell within ``radius`` hops."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        c = queue.popleft()
        if dist[c] == radius:
            continue
        for d in steps(kind):
            n = tuple(p + q for p, q in zip(c, d))
            if n not in dist:
                dist[n] = dist[c] + 1
                queue.append(n)
    return dist


def simulate(kind, generations):
    """Brute-force automaton: dict of cell -> (generation, parent)."""
    origin = (0,) * (2 if kind == "square" else 3)
    live = {origin: (0, None)}
    for g in range(1, generations + 1):
        cands = set()
        for c in live:
            for d in steps(kind):
                n = tuple(p + q for p, q in zip(c, d))
                if n not in live:
                    cands.add(n)
        born = {}
        for c in cands:
            around = [tuple(p + q for p, q in zip(c, d)) for d in steps(kind)]
            alive = [n for n in around if n in live]
            if len(alive) == 1:
                born[c] = (g, alive[0])
        live.update(born)
    return live


def odd_binomial(row, pos):
    return comb(row, pos) % 2 == 1
