"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are used to check:
the defining relation is re-evaluated straight from the weights and the
connection with rational arithmetic, ranks are computed by Gaussian
elimination over Fractions, and lattice membership is decided by a rational
solve followed by an integrality check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from gkmgraph import GkmGraph, IntegerMatrix, gen_grassmannian, gen_projective, gen_s6
from gkmgraph.extension import AxiomViolationError, project_axial


def core_fixtures() -> dict[str, GkmGraph]:
    """The desk-scale fixture registry used across property tests."""
    out = {f"projective{m}": gen_projective(m) for m in (1, 2, 3, 4)}
    out["s6"] = gen_s6()
    for n in (1, 2, 3):
        out[f"grassmannian{n}"] = gen_grassmannian(n)
    return out


def method_fixtures() -> dict[str, GkmGraph]:
    """Fixtures for dual-solver comparisons; adds the larger Johnson graph."""
    out = core_fixtures()
    out["grassmannian4"] = gen_grassmannian(4)
    return out


def weight_ratio(diff, base):
    """Rational c with diff == c * base, or None."""
    pivot = next((i for i, x in enumerate(base) if x), None)
    if pivot is None:
        return Fraction(0) if not any(diff) else None
    c = Fraction(diff[pivot], base[pivot])
    if all(Fraction(d) == c * b for d, b in zip(diff, base)):
        return c
    return None


def relation_holds(gkm: GkmGraph, values, e: str) -> bool:
    """Direct evaluation of the defining relation at dart ``e``.

    ``values`` maps each vertex to its integer vector in out-dart order.  The
    permutation and the coefficient vector are recomputed here from scratch.
    """
    g = gkm.graph
    p, q = g.source(e), g.target(e)
    eb = g.reverse(e)
    out_p, out_q = g.out_darts(p), g.out_darts(q)
    fp, fq = values[p], values[q]
    pos_q = {d: i for i, d in enumerate(out_q)}
    nabla = gkm.connection.maps[e]
    permuted = [0] * len(out_q)
    for i, d in enumerate(out_p):
        permuted[pos_q[nabla[d]]] = fp[i]
    nabla_back = gkm.connection.maps[eb]
    web = gkm.weight(eb)
    cbar = []
    for d in out_q:
        img = nabla_back[d]
        diff = tuple(a - b for a, b in zip(gkm.weight(img), gkm.weight(d)))
        c = weight_ratio(diff, web)
        if c is None or c.denominator != 1:
            return False
        cbar.append(int(c))
    f_eb = fq[pos_q[eb]]
    return all(permuted[j] - fq[j] == f_eb * cbar[j] for j in range(len(out_q)))


def element_in_lattice(gkm: GkmGraph, element) -> bool:
    return all(relation_holds(gkm, element.values, e) for e in gkm.graph.darts)


def brute_force_solutions(gkm: GkmGraph, bound: int = 2) -> list[tuple[int, ...]]:
    """All solutions of the defining relations with entries in [-bound, bound]."""
    g = gkm.graph
    m = g.valence
    dim = m * len(g.vertices)
    solutions = []
    for combo in product(range(-bound, bound + 1), repeat=dim):
        values = {
            v: combo[i * m : (i + 1) * m] for i, v in enumerate(g.vertices)
        }
        if all(relation_holds(gkm, values, e) for e in g.edge_representatives()):
            solutions.append(combo)
    return solutions


def rational_rank(rows) -> int:
    """Rank over Q by Gaussian elimination with Fractions."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for j in range(cols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][j]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][j]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][j]:
                f = mat[i][j]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def rational_solve(rows, target):
    """Fractions x with x @ rows == target, or None (rows independent)."""
    if not rows:
        return None if any(target) else []
    cols = len(rows[0])
    aug = [[Fraction(rows[i][j]) for i in range(len(rows))] + [Fraction(target[j])] for j in range(cols)]
    n = len(rows)
    rank = 0
    for j in range(n):
        piv = next((i for i in range(rank, len(aug)) if aug[i][j]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][j]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(len(aug)):
            if i != rank and aug[i][j]:
                f = aug[i][j]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank])]
        rank += 1
    solution = [Fraction(0)] * n
    for i in range(rank):
        j = next(k for k in range(n) if aug[i][k])
        solution[j] = aug[i][n]
    for i in range(len(aug)):
        lhs = sum(aug[i][k] * solution[k] for k in range(n))
        if lhs != aug[i][n]:
            return None
    return solution


def in_integer_span(rows, target) -> bool:
    """Whether target is an integer combination of the (independent) rows."""
    sol = rational_solve(rows, target)
    return sol is not None and all(c.denominator == 1 for c in sol)


def random_unimodular(rng: random.Random, size: int, steps: int = 12) -> IntegerMatrix:
    """Random element of GL(size, Z) as a product of elementary operations."""
    rows = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(size)
        j = rng.randrange(size)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-x for x in rows[i]]
    return IntegerMatrix.from_rows(rows, size)


def random_valid_projection(rng: random.Random, gkm: GkmGraph, attempts: int = 60):
    """A random surjection composed with the weights that keeps the axioms.

    Returns ``(projected_gkm, pi)``; retries on pairwise-independence
    failures and raises after too many attempts.
    """
    n = gkm.axial.torus_rank
    for _ in range(attempts):
        k = 1 if n == 1 else rng.randrange(2, n + 1)
        u = random_unimodular(rng, n)
        pi = IntegerMatrix.from_rows(u.data[:k], n)
        try:
            return project_axial(gkm, pi), pi
        except AxiomViolationError:
            continue
    raise AssertionError("no valid random projection found")


def shuffled_orderings(rng: random.Random, graph) -> dict[str, tuple[str, ...]]:
    out = {}
    for v in graph.vertices:
        order = list(graph.out_darts(v))
        rng.shuffle(order)
        out[v] = tuple(order)
    return out
