"""Tests for the exact simplex solver and the linear-algebra helpers."""

import unittest
from fractions import Fraction

from pypersuade.game.constants import LpStatus, Relation, Sense
from pypersuade.game.errors import ParameterError
from pypersuade.geometry.linalg import nullspace, rank, rref, solve_unique
from pypersuade.geometry.lp import Constraint, LinearProgram, simplex_constraints, solve_lp

F = Fraction


def _le(coefficients, rhs) -> Constraint:
    return Constraint(tuple(F(c) for c in coefficients), Relation.LE, F(rhs))


def _ge(coefficients, rhs) -> Constraint:
    return Constraint(tuple(F(c) for c in coefficients), Relation.GE, F(rhs))


class TestSolveLp(unittest.TestCase):
    """Statuses, optima and certificates."""

    def test_optimal_with_duals(self) -> None:
        """Textbook program; the duals price both rows."""
        lp = LinearProgram(objective=(F(1), F(1)), constraints=(_le([1, 2], 4), _le([3, 1], 6)))
        solution = solve_lp(lp)
        self.assertEqual(LpStatus.OPTIMAL, solution.status)
        self.assertEqual(F(14, 5), solution.value)
        self.assertEqual((F(8, 5), F(6, 5)), solution.point)
        self.assertEqual((F(2, 5), F(1, 5)), solution.certificate)
        self.assertEqual(solution.value, solution.certificate_value)

    def test_minimize(self) -> None:
        """Minimization reports the minimum and a matching dual value."""
        lp = LinearProgram(
            objective=(F(2), F(3)),
            constraints=(_ge([1, 1], 4), _ge([1, 3], 6)),
            sense=Sense.MINIMIZE,
        )
        solution = solve_lp(lp)
        self.assertEqual(F(9), solution.value)
        self.assertEqual((F(3), F(1)), solution.point)
        self.assertEqual(solution.value, solution.certificate_value)

    def test_infeasible_farkas(self) -> None:
        """An infeasible program returns a Farkas vector of negative value."""
        lp = LinearProgram(objective=(F(1),), constraints=(_ge([1], 2), _le([1], 1)))
        solution = solve_lp(lp)
        self.assertEqual(LpStatus.INFEASIBLE, solution.status)
        self.assertIsNone(solution.value)
        self.assertIsNotNone(solution.certificate)
        self.assertLess(solution.certificate_value, 0)
        y_ge, y_le = solution.certificate
        self.assertLessEqual(y_ge, 0)
        self.assertGreaterEqual(y_le, 0)
        self.assertGreaterEqual(y_ge + y_le, 0)

    def test_unbounded(self) -> None:
        """Unbounded programs are a status, not an exception."""
        solution = solve_lp(LinearProgram(objective=(F(1), F(0)), constraints=(_le([0, 1], 1),)))
        self.assertEqual(LpStatus.UNBOUNDED, solution.status)
        self.assertFalse(solution.optimal)

    def test_free_and_bounded_variables(self) -> None:
        """Free variables may go negative; finite bound pairs add certificate entries."""
        free = LinearProgram(
            objective=(F(1),), constraints=(_ge([1], -5),), lower_bounds=(None,), sense=Sense.MINIMIZE
        )
        self.assertEqual(F(-5), solve_lp(free).value)
        boxed = LinearProgram(
            objective=(F(1), F(1)),
            constraints=(_le([1, 1], 3),),
            upper_bounds=(F(2), None),
        )
        solution = solve_lp(boxed)
        self.assertEqual(F(3), solution.value)
        self.assertEqual(2, len(solution.certificate))
        self.assertEqual(solution.value, solution.certificate_value)

    def test_degenerate_cycling_example(self) -> None:
        """Beale's program cycles under pure Dantzig pivoting; the solver still terminates."""
        lp = LinearProgram(
            objective=(F(3, 4), F(-150), F(1, 50), F(-6)),
            constraints=(
                _le([F(1, 4), -60, F(-1, 25), 9], 0),
                _le([F(1, 2), -90, F(-1, 50), 3], 0),
                _le([0, 0, 1, 0], 1),
            ),
        )
        solution = solve_lp(lp)
        self.assertEqual(F(1, 20), solution.value)
        self.assertTrue(lp.is_feasible_point(solution.point))
        self.assertEqual(solution.value, solution.certificate_value)

    def test_program_validation(self) -> None:
        """Malformed programs are rejected when built."""
        with self.assertRaises(ParameterError):
            LinearProgram(objective=())
        with self.assertRaises(ParameterError):
            LinearProgram(objective=(F(1),), constraints=(_le([1, 1], 1),))
        with self.assertRaises(ParameterError):
            LinearProgram(objective=(F(1),), lower_bounds=(F(2),), upper_bounds=(F(1),))

    def test_simplex_constraints(self) -> None:
        """Face rows pin coordinates outside the mask to zero."""
        rows = simplex_constraints(3, frozenset({0, 2}))
        self.assertEqual(2, len(rows))
        self.assertTrue(all(r.relation is Relation.EQ for r in rows))
        self.assertEqual((F(0), F(1), F(0)), rows[1].coefficients)


class TestLinalg(unittest.TestCase):
    """Exact Gauss-Jordan helpers."""

    def test_rref_and_rank(self) -> None:
        """Dependent rows drop out."""
        rows = [[F(1), F(2)], [F(2), F(4)], [F(0), F(1)]]
        reduced, pivots = rref(rows)
        self.assertEqual([0, 1], pivots)
        self.assertEqual([[F(1), F(0)], [F(0), F(1)]], reduced)
        self.assertEqual(1, rank(rows[:2]))

    def test_solve_unique(self) -> None:
        """Unique, underdetermined and inconsistent systems."""
        self.assertEqual([F(1), F(2)], solve_unique([[F(1), F(1)], [F(1), F(-1)]], [F(3), F(-1)]))
        self.assertIsNone(solve_unique([[F(1), F(1)]], [F(1)]))
        self.assertIsNone(solve_unique([[F(1)], [F(1)]], [F(1), F(2)]))

    def test_nullspace(self) -> None:
        """The basis spans the kernel."""
        rows = [[F(1), F(1), F(1)]]
        basis = nullspace(rows, 3)
        self.assertEqual(2, len(basis))
        for vector in basis:
            self.assertEqual(0, sum(vector))
