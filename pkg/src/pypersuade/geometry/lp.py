"""Exact two-phase simplex over the rationals.

Pivoting uses Dantzig's rule until the first degenerate pivot and Bland's rule
from then on, which rules out cycling. Every solve returns a dual
certificate: for optimal solves the dual vector whose value equals the optimum,
for infeasible solves a Farkas vector with negative value. Certificates have
one entry per constraint row, followed by one entry per variable with both a
finite lower and a finite upper bound (those bounds become extra rows).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from pypersuade.game.constants import LpStatus, Relation, Sense
from pypersuade.game.errors import ParameterError
from pypersuade.game.model import Row

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass(frozen=True)
class Constraint:
    """A single row ``coefficients @ x (relation) rhs``."""

    coefficients: Row
    relation: Relation
    rhs: Fraction

    def __post_init__(self) -> None:
        """Coerce entries to fractions."""
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        """Exact feasibility test of one point."""
        lhs = sum((a * x for a, x in zip(self.coefficients, point, strict=True)), ZERO)
        if self.relation is Relation.LE:
            return lhs <= self.rhs
        if self.relation is Relation.GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """A linear program with per-variable bounds.

    Lower bounds default to zero and upper bounds to none; pass ``None`` in
    ``lower_bounds`` to declare a free variable.
    """

    objective: Row
    constraints: tuple[Constraint, ...] = ()
    lower_bounds: tuple[Fraction | None, ...] = field(default=())
    upper_bounds: tuple[Fraction | None, ...] = field(default=())
    sense: Sense = Sense.MAXIMIZE

    def __post_init__(self) -> None:
        """Fill default bounds and check dimensions."""
        n = len(self.objective)
        if n == 0:
            raise ParameterError("a linear program needs at least one variable")
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        lower = self.lower_bounds or (ZERO,) * n
        upper = self.upper_bounds or (None,) * n
        if len(lower) != n or len(upper) != n:
            raise ParameterError("bounds must have one entry per variable")
        object.__setattr__(self, "lower_bounds", tuple(_maybe_fraction(b) for b in lower))
        object.__setattr__(self, "upper_bounds", tuple(_maybe_fraction(b) for b in upper))
        for lo, hi in zip(self.lower_bounds, self.upper_bounds, strict=True):
            if lo is not None and hi is not None and lo > hi:
                raise ParameterError(f"lower bound {lo} exceeds upper bound {hi}")
        for row in self.constraints:
            if len(row.coefficients) != n:
                raise ParameterError(f"constraint has {len(row.coefficients)} coefficients for {n} variables")

    @property
    def n_variables(self) -> int:
        """Number of decision variables."""
        return len(self.objective)

    def is_feasible_point(self, point: Sequence[Fraction]) -> bool:
        """Whether ``point`` satisfies every row and bound exactly."""
        for x, lo, hi in zip(point, self.lower_bounds, self.upper_bounds, strict=True):
            if (lo is not None and x < lo) or (hi is not None and x > hi):
                return False
        return all(row.satisfied_by(point) for row in self.constraints)


@dataclass(frozen=True)
class LpSolution:
    """Outcome of :func:`solve_lp`.

    ``value`` and ``point`` are set for optimal solves. ``certificate`` is the
    dual vector (optimal) or the Farkas vector (infeasible); its value against
    the shifted right-hand sides is ``certificate_value``.
    """

    status: LpStatus
    value: Fraction | None = None
    point: Row | None = None
    certificate: Row | None = None
    certificate_value: Fraction | None = None

    @property
    def optimal(self) -> bool:
        """Whether an optimum was found."""
        return self.status is LpStatus.OPTIMAL


def _maybe_fraction(value: Fraction | int | None) -> Fraction | None:
    return None if value is None else Fraction(value)


@dataclass
class _StandardForm:
    """``max c @ z`` subject to rows over ``z >= 0``, with the map back to ``x``."""

    columns: list[tuple[int, int]]
    shift: list[Fraction]
    rows: list[list[Fraction]]
    relations: list[Relation]
    rhs: list[Fraction]
    objective: list[Fraction]

    @classmethod
    def from_program(cls, lp: LinearProgram) -> "_StandardForm":
        columns: list[tuple[int, int]] = []
        shift: list[Fraction] = []
        bound_rows: list[tuple[int, Fraction]] = []
        for j, (lo, hi) in enumerate(zip(lp.lower_bounds, lp.upper_bounds, strict=True)):
            if lo is not None:
                columns.append((j, 1))
                shift.append(lo)
                if hi is not None:
                    bound_rows.append((len(columns) - 1, hi - lo))
            elif hi is not None:
                columns.append((j, -1))
                shift.append(hi)
            else:
                columns.extend(((j, 1), (j, -1)))
                shift.append(ZERO)
        rows, relations, rhs = [], [], []
        for constraint in lp.constraints:
            a = constraint.coefficients
            rows.append([a[j] * sign for j, sign in columns])
            relations.append(constraint.relation)
            rhs.append(constraint.rhs - sum((a[j] * shift[j] for j in range(len(a))), ZERO))
        for column, bound in bound_rows:
            row = [ZERO] * len(columns)
            row[column] = Fraction(1)
            rows.append(row)
            relations.append(Relation.LE)
            rhs.append(bound)
        flip = -1 if lp.sense is Sense.MINIMIZE else 1
        objective = [flip * lp.objective[j] * sign for j, sign in columns]
        return cls(columns, shift, rows, relations, rhs, objective)


class _Tableau:
    """Dense simplex tableau with the objective row kept as reduced costs."""

    def __init__(self, form: _StandardForm):
        self.form = form
        m = len(form.rows)
        n_struct = len(form.columns)
        self.flips: list[int] = []
        normalized = []
        for row, relation, b in zip(form.rows, form.relations, form.rhs, strict=True):
            if b < 0:
                row, b = [-x for x in row], -b
                relation = {Relation.LE: Relation.GE, Relation.GE: Relation.LE}.get(relation, relation)
                self.flips.append(-1)
            else:
                self.flips.append(1)
            normalized.append((row, relation, b))
        n_slack = sum(1 for _, rel, _ in normalized if rel is not Relation.EQ)
        n_art = sum(1 for _, rel, _ in normalized if rel is not Relation.LE)
        self.n_struct = n_struct
        self.n_cols = n_struct + n_slack + n_art
        self.artificial_start = n_struct + n_slack
        self.table: list[list[Fraction]] = []
        self.basis: list[int] = []
        self.unit: list[int] = []
        slack = n_struct
        art = self.artificial_start
        for i, (row, rel, b) in enumerate(normalized):
            full = [*row, *([ZERO] * (self.n_cols - n_struct)), b]
            if rel is Relation.LE:
                full[slack] = Fraction(1)
                self.unit.append(slack)
                slack += 1
            else:
                if rel is Relation.GE:
                    full[slack] = Fraction(-1)
                    slack += 1
                full[art] = Fraction(1)
                self.unit.append(art)
                art += 1
            self.table.append(full)
            self.basis.append(self.unit[i])
        self.costs: list[Fraction] = [ZERO] * self.n_cols
        self.reduced: list[Fraction] = []
        self.bland = False
        self.pivots = 0
        logger.debug("Tableau with %d rows and %d columns", m, self.n_cols)

    def is_artificial(self, col: int) -> bool:
        return col >= self.artificial_start

    def set_costs(self, costs: list[Fraction]) -> None:
        self.costs = costs
        reduced = [-c for c in costs] + [ZERO]
        for i, row in enumerate(self.table):
            cb = costs[self.basis[i]]
            if cb:
                for k, x in enumerate(row):
                    if x:
                        reduced[k] += cb * x
        self.reduced = reduced

    def pivot(self, r: int, c: int) -> None:
        prow = self.table[r]
        lead = prow[c]
        if lead != 1:
            prow = [x / lead for x in prow]
            self.table[r] = prow
        nonzero = [k for k, x in enumerate(prow) if x]
        for i, row in enumerate(self.table):
            if i != r and row[c]:
                factor = row[c]
                for k in nonzero:
                    row[k] -= factor * prow[k]
        if self.reduced[c]:
            factor = self.reduced[c]
            for k in nonzero:
                self.reduced[k] -= factor * prow[k]
        self.basis[r] = c
        self.pivots += 1

    def run(self, allow_artificial: bool) -> LpStatus:
        while True:
            candidates = [
                j
                for j in range(self.n_cols)
                if self.reduced[j] < 0 and (allow_artificial or not self.is_artificial(j))
            ]
            if not candidates:
                return LpStatus.OPTIMAL
            if self.bland:
                col = candidates[0]
            else:
                col = min(candidates, key=lambda j: (self.reduced[j], j))
            best: tuple[Fraction, int, int] | None = None
            for i, row in enumerate(self.table):
                if row[col] > 0:
                    key = (row[-1] / row[col], self.basis[i], i)
                    if best is None or key < best:
                        best = key
            if best is None:
                return LpStatus.UNBOUNDED
            if best[0] == 0 and not self.bland:
                logger.debug("Degenerate pivot after %d pivots; switching to Bland's rule", self.pivots)
                self.bland = True
            self.pivot(best[2], col)

    def drive_out_artificials(self) -> None:
        for i in range(len(self.table)):
            if self.is_artificial(self.basis[i]):
                row = self.table[i]
                col = next((j for j in range(self.artificial_start) if row[j] != 0), None)
                if col is not None:
                    self.pivot(i, col)

    def duals(self) -> list[Fraction]:
        """Dual values in the orientation of the un-normalized rows."""
        return [
            flip * (self.reduced[u] + self.costs[u])
            for flip, u in zip(self.flips, self.unit, strict=True)
        ]

    def objective_value(self) -> Fraction:
        return self.reduced[-1]

    def primal(self) -> list[Fraction]:
        z = [ZERO] * self.n_struct
        for i, col in enumerate(self.basis):
            if col < self.n_struct:
                z[col] = self.table[i][-1]
        return z


def solve_lp(lp: LinearProgram) -> LpSolution:
    """Solve a linear program exactly.

    Args:
        lp: The program.

    Returns:
        An :class:`LpSolution`; infeasible and unbounded programs are statuses.
    """
    form = _StandardForm.from_program(lp)
    tableau = _Tableau(form)
    if tableau.artificial_start < tableau.n_cols:
        tableau.set_costs(
            [Fraction(-1) if tableau.is_artificial(j) else ZERO for j in range(tableau.n_cols)]
        )
        tableau.run(allow_artificial=True)
        if tableau.objective_value() < 0:
            farkas = tableau.duals()
            value = sum((y * b for y, b in zip(farkas, form.rhs, strict=True)), ZERO)
            logger.debug("Infeasible after %d pivots", tableau.pivots)
            return LpSolution(
                status=LpStatus.INFEASIBLE, certificate=tuple(farkas), certificate_value=value
            )
        tableau.drive_out_artificials()
    costs = [*form.objective, *([ZERO] * (tableau.n_cols - tableau.n_struct))]
    tableau.set_costs(costs)
    if tableau.run(allow_artificial=False) is LpStatus.UNBOUNDED:
        logger.debug("Unbounded after %d pivots", tableau.pivots)
        return LpSolution(status=LpStatus.UNBOUNDED)

    z = tableau.primal()
    point = list(form.shift)
    for value_z, (j, sign) in zip(z, form.columns, strict=True):
        point[j] += sign * value_z
    constant = sum((c * s for c, s in zip(lp.objective, form.shift, strict=True)), ZERO)
    duals = tableau.duals()
    if lp.sense is Sense.MINIMIZE:
        duals = [-y for y in duals]
    value = sum((c * x for c, x in zip(lp.objective, point, strict=True)), ZERO)
    certificate_value = sum((y * b for y, b in zip(duals, form.rhs, strict=True)), ZERO) + constant
    logger.debug("Optimal value %s after %d pivots", value, tableau.pivots)
    return LpSolution(
        status=LpStatus.OPTIMAL,
        value=value,
        point=tuple(point),
        certificate=tuple(duals),
        certificate_value=certificate_value,
    )


def simplex_constraints(n: int, mask: frozenset[int] | None = None) -> list[Constraint]:
    """Rows pinning the first ``n`` variables to the face ``Delta(mask)`` of the simplex.

    Nonnegativity comes from the default lower bounds; this adds ``sum = 1``
    and zeroes the coordinates outside ``mask``.
    """
    rows = [Constraint(tuple([Fraction(1)] * n), Relation.EQ, Fraction(1))]
    if mask is not None:
        for i in range(n):
            if i not in mask:
                unit = [ZERO] * n
                unit[i] = Fraction(1)
                rows.append(Constraint(tuple(unit), Relation.EQ, ZERO))
    return rows
