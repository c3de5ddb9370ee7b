"""Reproducible random digraphs.

The generator is self-contained so that a given ``(n, m, seed)`` produces
the same arc sequence on every platform and in every language port:

* ``SplitMix64`` (increment 0x9E3779B97F4A7C15, multipliers
  0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31) expands the
  seed into four state words;
* ``Xoshiro256StarStar`` (output ``rotl(s1 * 5, 7) * 9``, state shifts
  17 and rotation 45) draws the numbers;
* bounded draws use rejection sampling below ``2**64 - (2**64 % bound)``.
"""

from __future__ import annotations

from .connectivity import is_strongly_biconnected
from .errors import PreconditionError
from .graph import Arc, Digraph, build
from .sbcc import strongly_biconnected_components

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK


class Xoshiro256StarStar:
    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self.s = [sm.next() for _ in range(4)]

    def next(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next()
            if r < limit:
                return r % bound

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _random_arc(rng: Xoshiro256StarStar, n: int) -> Arc:
    t = rng.below(n)
    h = rng.below(n - 1)
    if h >= t:
        h += 1
    return t, h


def _fill(rng: Xoshiro256StarStar, n: int, arcs: dict[Arc, None], m: int) -> None:
    target = min(m, n * (n - 1))
    attempts = 0
    while len(arcs) < target and attempts < 50 * m:
        attempts += 1
        arcs.setdefault(_random_arc(rng, n), None)


def generate(n: int, m: int, seed: int) -> Digraph:
    """Random strongly biconnected digraph on ``n`` vertices with at most ``m`` arcs.

    A random Hamiltonian cycle is laid down first, then random extra arcs,
    and the arc order is shuffled. A Hamiltonian cycle already makes the
    graph strongly biconnected; the final repair loop only guards that.
    """
    if n < 3:
        raise PreconditionError("bad_parameters", "generate needs n >= 3")
    if m < n + 2:
        raise PreconditionError("bad_parameters", "generate needs m >= n + 2")
    rng = Xoshiro256StarStar(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    arcs: dict[Arc, None] = {(perm[i], perm[(i + 1) % n]): None for i in range(n)}
    _fill(rng, n, arcs, m)
    order = list(arcs)
    rng.shuffle(order)
    g = build(n, order)
    while not is_strongly_biconnected(g):
        g = _repair_step(g)
    return g


def _repair_step(g: Digraph) -> Digraph:
    cover = strongly_biconnected_components(g)
    for u in range(g.n):
        for w in range(g.n):
            if u == w or g.has_arc(u, w):
                continue
            if not set(cover.membership[u]) & set(cover.membership[w]):
                return build(g.n, list(g.arcs) + [(u, w)])
    raise AssertionError("repair found no joining arc")


def generate_strongly_connected(n: int, m: int, seed: int) -> Digraph:
    """Random strongly connected digraph whose underlying graph usually has
    several blocks.

    Grows a tree of small pieces glued at single vertices (each piece a
    directed cycle, or a two-way arc for two-vertex pieces), then sprinkles
    random arcs until ``m`` arcs exist. Vertices are relabelled randomly.
    """
    if n < 1:
        raise PreconditionError("bad_parameters", "need n >= 1")
    rng = Xoshiro256StarStar(seed)
    arcs: dict[Arc, None] = {}
    covered = [0]
    nxt = 1
    while nxt < n:
        anchor = covered[rng.below(len(covered))]
        size = 1 + rng.below(min(4, n - nxt))
        piece = [anchor] + list(range(nxt, nxt + size))
        nxt += size
        covered.extend(piece[1:])
        if size == 1:
            arcs[(piece[0], piece[1])] = None
            arcs[(piece[1], piece[0])] = None
        else:
            rng.shuffle(piece)
            for i in range(len(piece)):
                arcs[(piece[i], piece[(i + 1) % len(piece)])] = None
    if n >= 2:
        _fill(rng, n, arcs, m)
    relabel = list(range(n))
    rng.shuffle(relabel)
    order = [(relabel[t], relabel[h]) for t, h in arcs]
    rng.shuffle(order)
    return build(n, order)
