"""Independent oracles for cross-checking the engine.

Nothing in here imports the solver: vertex enumeration uses plain Gaussian
elimination over rationals, the grid oracle brute-forces mass vectors, and
the hypergeometric enumeration recomputes Fisher probabilities from
binomial coefficients directly.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from probarg.events import eval_classical

ZERO = Fraction(0)
ONE = Fraction(1)


def solve_square(matrix, rhs):
    """Solve an n x n rational system; None if singular."""
    n = len(matrix)
    aug = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[-1] for row in aug]


def enumerate_vertices(n, equalities, inequalities):
    """Vertices of {x >= 0, eq . x = rhs, ineq . x >= rhs}.

    Brute force: every choice of active constraints completing the equalities
    to a full-rank square system is solved and kept if feasible. Fine for the
    tiny polytopes the tests use.
    """
    eqs = [(list(c), Fraction(r)) for c, r in equalities]
    ineqs = [(list(c), Fraction(r)) for c, r in inequalities]
    # nonnegativity constraints as candidate active rows
    candidates = list(ineqs) + [
        ([ONE if j == i else ZERO for j in range(n)], ZERO) for i in range(n)
    ]
    need = n - len(eqs)
    vertices = []
    for combo in itertools.combinations(candidates, need):
        matrix = [c for c, _ in eqs] + [c for c, _ in combo]
        rhs = [r for _, r in eqs] + [r for _, r in combo]
        x = solve_square(matrix, rhs)
        if x is None:
            continue
        if any(v < 0 for v in x):
            continue
        if any(sum(c * v for c, v in zip(coeffs, x)) != r for coeffs, r in eqs):
            continue
        if any(sum(c * v for c, v in zip(coeffs, x)) < r for coeffs, r in ineqs):
            continue
        if x not in vertices:
            vertices.append(x)
    return vertices


def assessment_polytope_rows(entries, world_list):
    """(equalities, inequalities) of the level-0 mass polytope, built directly
    from the definition: lo*m <= e <= hi*m per entry, masses sum to one."""
    n = len(world_list)
    equalities = [([ONE] * n, ONE)]
    inequalities = []
    for entry in entries:
        lo_row = [ZERO] * n
        hi_row = [ZERO] * n
        for j, v in enumerate(world_list):
            if eval_classical(entry.obj.antecedent, v):
                lo_row[j] -= entry.lo
                hi_row[j] += entry.hi
                if eval_classical(entry.obj.consequent, v):
                    lo_row[j] += ONE
                    hi_row[j] -= ONE
        inequalities.append((lo_row, ZERO))
        inequalities.append((hi_row, ZERO))
    return equalities, inequalities


def conditional_value(obj, world_list, masses):
    """e/m of a conditional object at a mass vector; None when m = 0."""
    m = ZERO
    e = ZERO
    for v, lam in zip(world_list, masses):
        if eval_classical(obj.antecedent, v):
            m += lam
            if eval_classical(obj.consequent, v):
                e += lam
    if m == 0:
        return None
    return e / m


def vertex_bounds(entries, world_list, query):
    """Exact conclusion bounds by vertex enumeration of the level-0 polytope,
    restricted to vertices where the query's antecedent has positive mass."""
    eqs, ineqs = assessment_polytope_rows(entries, world_list)
    values = []
    for x in enumerate_vertices(len(world_list), eqs, ineqs):
        val = conditional_value(query, world_list, x)
        if val is not None:
            values.append(val)
    if not values:
        return None
    return min(values), max(values)


def witness_satisfies(entries, world_list, masses):
    """Re-check a coherence witness against the raw level-0 constraints."""
    if any(m < 0 for m in masses):
        return False
    if sum(masses, ZERO) != 1:
        return False
    for entry in entries:
        m = ZERO
        e = ZERO
        for v, lam in zip(world_list, masses):
            if eval_classical(entry.obj.antecedent, v):
                m += lam
                if eval_classical(entry.obj.consequent, v):
                    e += lam
        if not (entry.lo * m <= e <= entry.hi * m):
            return False
    return True


def fisher_2x2_enumeration(table):
    """Two-sided Fisher p by direct enumeration of margin-fixed tables."""
    (a, b), (c, d) = table
    r1, r2 = a + b, c + d
    c1 = a + c
    n = r1 + r2
    probs = []
    for k in range(max(0, c1 - r2), min(r1, c1) + 1):
        probs.append(
            (k, Fraction(math.comb(r1, k) * math.comb(r2, c1 - k), math.comb(n, c1)))
        )
    observed = dict(probs)[a]
    return sum(p for _, p in probs if p <= observed)
