"""Reference implementations used only by the tests.

Everything here works on plain Fractions with textbook formulas and
shares no code with the package's integer kernels.
"""
from fractions import Fraction
from itertools import combinations


def line_y(p, q, x):
    (px, py), (qx, qy) = p, q
    return py + (qy - py) * (x - px) / (qx - px)


def sees_xy(vertices, p, q):
    """Segment pq on or above the chain, checked vertex by vertex."""
    if p[0] > q[0]:
        p, q = q, p
    if p[0] == q[0]:
        return True
    for vx, vy in vertices:
        if p[0] < vx < q[0] and vy > line_y(p, q, vx):
            return False
    return True


def point_xy(vertices, k, t):
    (ax, ay), (bx, by) = vertices[k], vertices[k + 1]
    return ax + t * (bx - ax), ay + t * (by - ay)


def definition_boundary_points(vertices):
    """Every interior edge point on a line through two vertices that both see it."""
    n = len(vertices)
    found = set()
    for i, j in combinations(range(n), 2):
        (x1, y1), (x2, y2) = vertices[i], vertices[j]
        for k in range(n - 1):
            (ax, ay), (bx, by) = vertices[k], vertices[k + 1]
            # solve a + t(b - a) on the line through v_i, v_j
            dx, dy = x2 - x1, y2 - y1
            num = dx * (y1 - ay) - dy * (x1 - ax)
            den = dx * (by - ay) - dy * (bx - ax)
            if den == 0:
                continue
            t = Fraction(num, 1) / den
            if not 0 < t < 1:
                continue
            f = point_xy(vertices, k, t)
            if sees_xy(vertices, vertices[i], f) and sees_xy(vertices, vertices[j], f):
                found.add((k, t))
    return sorted(found)


def interval_by_sampling(vertices, v, k, ts):
    return [t for t in ts if sees_xy(vertices, vertices[v], point_xy(vertices, k, t))]


def one_sided_min(vertices, witnesses_xy, side, seed):
    """Fewest extra vertices so every witness has a guard on ``side`` seeing it."""
    n = len(vertices)

    def ok(gs):
        for w in witnesses_xy:
            if not any(sees_xy(vertices, vertices[g], w) and
                       (vertices[g][0] <= w[0] if side == "left" else vertices[g][0] >= w[0])
                       for g in gs):
                return False
        return True

    free = [v for v in range(n) if v not in seed]
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            if ok(set(seed) | set(extra)):
                return size
    raise AssertionError
