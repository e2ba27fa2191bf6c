import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from csneighborly import LinearProgram, lp_max


def solve_square(rows, rhs):
    """Exact Gaussian solve; None when the system is singular/inconsistent."""
    n = len(rhs)
    work = [list(map(F, row)) + [F(rhs_i)] for row, rhs_i in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c] != 0), None)
        if piv is None:
            return None
        work[c], work[piv] = work[piv], work[c]
        inv = 1 / work[c][c]
        work[c] = [v * inv for v in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return [work[i][n] for i in range(n)]


def brute_force_max(lp):
    """Independent oracle for bounded problems: enumerate basic points.

    Requires the feasible region to be bounded (the callers add box
    constraints), so it is a polytope and the optimum sits at a vertex, i.e.
    at an intersection of n constraint hyperplanes.
    """
    n = lp.n_vars
    cons = [(coeffs, rhs, True) for coeffs, rhs in lp.eq]
    cons += [(coeffs, rhs, False) for coeffs, rhs in lp.le]
    best = None
    for subset in combinations(range(len(cons)), n):
        rows = [cons[i][0] for i in subset]
        rhs = [cons[i][1] for i in subset]
        point = solve_square(rows, rhs)
        if point is None:
            continue
        feasible = True
        for coeffs, b, is_eq in cons:
            val = sum(c * v for c, v in zip(coeffs, point))
            if (is_eq and val != b) or (not is_eq and val > b):
                feasible = False
                break
        if feasible:
            value = sum(c * v for c, v in zip(lp.objective, point))
            if best is None or value > best:
                best = value
    return best


def boxed(lp, bound=5):
    """Add |x_i| <= bound rows so the brute-force oracle applies."""
    n = lp.n_vars
    extra = []
    for i in range(n):
        e = [F(0)] * n
        e[i] = F(1)
        extra.append((tuple(e), F(bound)))
        e2 = [F(0)] * n
        e2[i] = F(-1)
        extra.append((tuple(e2), F(bound)))
    return LinearProgram.maximize(lp.objective, eq=lp.eq, le=lp.le + tuple(extra))


class TestTrivialPrograms:
    def test_single_bound(self):
        lp = LinearProgram.maximize([1], le=[([1], 3)])
        res = lp_max(lp)
        assert res.status == "optimal"
        assert res.objective == 3

    def test_exact_third(self):
        lp = LinearProgram.maximize(
            [1], le=[([1], F(1, 3)), ([1], F(1, 2))]
        )
        res = lp_max(lp)
        assert res.objective == F(1, 3)

    def test_infeasible(self):
        lp = LinearProgram.maximize([1], le=[([1], 0), ([-1], -1)])
        assert lp_max(lp).status == "infeasible"

    def test_unbounded(self):
        lp = LinearProgram.maximize([1], le=[([-1], 0)])
        assert lp_max(lp).status == "unbounded"

    def test_equalities(self):
        lp = LinearProgram.maximize(
            [0, 1], eq=[([1, 1], 1), ([1, -1], 0)]
        )
        res = lp_max(lp)
        assert res.objective == F(1, 2)
        assert res.x == (F(1, 2), F(1, 2))

    def test_inconsistent_equalities(self):
        lp = LinearProgram.maximize([1], eq=[([1], 1), ([1], 2)])
        assert lp_max(lp).status == "infeasible"

    def test_negative_rhs_inequalities(self):
        # x >= 1, x >= 2, maximize -x  ->  x = 2
        lp = LinearProgram.maximize([-1], le=[([-1], -1), ([-1], -2)])
        res = lp_max(lp)
        assert res.objective == -2

    def test_free_variables_go_negative(self):
        lp = LinearProgram.maximize([-1], le=[([-1], 4)])
        res = lp_max(lp)
        assert res.objective == 4
        assert res.x == (F(-4),)


class TestDegeneracy:
    def test_beale_cycling_instance(self):
        # the classic cycling example; Bland's rule must terminate
        lp = LinearProgram.maximize(
            [F(3, 4), -150, F(1, 50), -6],
            le=[
                ([F(1, 4), -60, F(-1, 25), 9], 0),
                ([F(1, 2), -90, F(-1, 50), 3], 0),
                ([0, 0, 1, 0], 1),
                ([-1, 0, 0, 0], 0),
                ([0, -1, 0, 0], 0),
                ([0, 0, -1, 0], 0),
                ([0, 0, 0, -1], 0),
            ],
        )
        res = lp_max(lp)
        assert res.status == "optimal"
        assert res.objective == F(1, 20)
        assert res.x == (F(1, 25), F(0), F(1), F(0))

    def test_degenerate_vertex(self):
        lp = LinearProgram.maximize(
            [1, 1],
            le=[([1, 0], 1), ([0, 1], 1), ([1, 1], 2), ([1, -1], 0)],
        )
        res = lp_max(lp)
        assert res.objective == 2


class TestAgainstBruteForce:
    def test_random_inequality_programs(self):
        rng = random.Random(101)
        statuses = {"optimal": 0, "infeasible": 0}
        for _ in range(40):
            n = rng.randint(2, 3)
            lp = LinearProgram.maximize(
                [F(rng.randint(-4, 4)) for _ in range(n)],
                le=[
                    (
                        tuple(F(rng.randint(-3, 3)) for _ in range(n)),
                        F(rng.randint(-4, 6)),
                    )
                    for _ in range(rng.randint(2, 5))
                ],
            )
            lp = boxed(lp)
            res = lp_max(lp)
            expected = brute_force_max(lp)
            if expected is None:
                assert res.status == "infeasible"
            else:
                assert res.status == "optimal"
                assert res.objective == expected
            statuses[res.status] += 1
        assert statuses["optimal"] > 0  # the sample exercises both paths

    def test_random_mixed_programs(self):
        rng = random.Random(202)
        seen_infeasible = False
        for _ in range(30):
            n = rng.randint(2, 3)
            eq = []
            if rng.random() < 0.7:
                eq.append(
                    (
                        tuple(F(rng.randint(-2, 2)) for _ in range(n)),
                        F(rng.randint(-3, 3)),
                    )
                )
            lp = LinearProgram.maximize(
                [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)],
                eq=eq,
                le=[
                    (
                        tuple(F(rng.randint(-3, 3)) for _ in range(n)),
                        F(rng.randint(-3, 6)),
                    )
                    for _ in range(rng.randint(1, 4))
                ],
            )
            lp = boxed(lp)
            res = lp_max(lp)
            expected = brute_force_max(lp)
            if expected is None:
                assert res.status == "infeasible"
                seen_infeasible = True
            else:
                assert res.status == "optimal", expected
                assert res.objective == expected
        assert seen_infeasible


class TestWitnesses:
    def test_exact_resubstitution(self):
        lp = LinearProgram.maximize(
            [F(2), F(-1, 3)],
            eq=[([1, 1], F(5, 7))],
            le=[([1, -1], 2), ([-1, 0], 0)],
        )
        res = lp_max(lp)
        assert res.status == "optimal"
        for coeffs, rhs in lp.eq:
            assert sum(c * v for c, v in zip(coeffs, res.x)) == rhs
        for coeffs, rhs in lp.le:
            assert sum(c * v for c, v in zip(coeffs, res.x)) <= rhs
        assert sum(c * v for c, v in zip(lp.objective, res.x)) == res.objective

    def test_determinism(self):
        lp = LinearProgram.maximize(
            [1, 2, -1],
            le=[([1, 1, 1], 4), ([1, -1, 0], 1), ([-1, 0, 2], 3)],
            eq=[([1, 0, -1], 0)],
        )
        first = lp_max(lp)
        second = lp_max(lp)
        assert first == second

    def test_rejects_empty_program(self):
        with pytest.raises(ValueError):
            lp_max(LinearProgram.maximize([]))
