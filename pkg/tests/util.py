"""Small graph builders shared across test modules."""

from strongmatch import Graph


def make_path(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def make_cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def make_star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def make_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + ((i + 2) % 5)) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def make_spider() -> Graph:
    """Three legs of length 2 glued at vertex 0."""
    return Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def make_circular_ladder(k: int) -> Graph:
    """Cubic prism graph C_k x K_2: outer cycle 0..k-1, inner k..2k-1, rungs."""
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)]
    return Graph(2 * k, outer + inner + rungs)


def make_lcf(n: int, shifts: list[int]) -> Graph:
    """Cubic graph from LCF notation: Hamilton cycle plus chord i -> i + shift."""
    edges = {(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i) for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add((i, j) if i < j else (j, i))
    return Graph(n, sorted(edges))


def make_dodecahedron() -> Graph:
    """Cubic planar graph of order 20 and girth 5."""
    return make_lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4])
