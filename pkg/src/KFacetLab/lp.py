# lp.py
"""
Exact two-phase simplex over ``Fraction`` with Bland's rule.

``LinearProgram`` is a small builder: variables with optional bounds, rows
``<=``, ``>=`` or ``==``, and a linear objective to maximize. ``solve`` brings
it into standard form (shifted / mirrored / split variables, slacks), runs
phase 1 on artificial variables where no slack can start the basis, then
phase 2 on the real objective. Bland's rule (lowest index enters, lowest
basic index leaves on ratio ties) makes every run terminate and keeps the
pivot sequence, and therefore the returned vertex, deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InputError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

ZERO = Fraction(0)


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[Tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


class LinearProgram:
    """maximize c.x  s.t. rows, lo_j <= x_j <= hi_j (``None`` = unbounded)."""

    def __init__(self, num_vars: int):
        if num_vars < 1:
            raise InputError("A linear program needs at least one variable")
        self.num_vars = num_vars
        self.objective: List[Fraction] = [ZERO] * num_vars
        self.lower: List[Optional[Fraction]] = [None] * num_vars
        self.upper: List[Optional[Fraction]] = [None] * num_vars
        self.rows: List[Tuple[List[Fraction], str, Fraction]] = []

    # ----- builder -----

    def _dense(self, coeffs) -> List[Fraction]:
        if isinstance(coeffs, dict):
            row = [ZERO] * self.num_vars
            for j, a in coeffs.items():
                row[j] += Fraction(a)
            return row
        if len(coeffs) != self.num_vars:
            raise InputError(f"Row has {len(coeffs)} coefficients, LP has {self.num_vars} variables")
        return [Fraction(a) for a in coeffs]

    def maximize(self, coeffs) -> "LinearProgram":
        self.objective = self._dense(coeffs)
        return self

    def bound(self, j: int, lo=None, hi=None) -> "LinearProgram":
        lo = None if lo is None else Fraction(lo)
        hi = None if hi is None else Fraction(hi)
        if lo is not None and hi is not None and lo > hi:
            raise InputError(f"Empty bounds [{lo}, {hi}] for variable {j}")
        self.lower[j], self.upper[j] = lo, hi
        return self

    def fix(self, j: int, value) -> "LinearProgram":
        return self.bound(j, value, value)

    def add(self, coeffs, op: str, rhs) -> "LinearProgram":
        if op not in ("<=", ">=", "=="):
            raise InputError(f"Unknown constraint operator {op!r}")
        self.rows.append((self._dense(coeffs), op, Fraction(rhs)))
        return self

    # ----- standard form -----

    def _substitution(self):
        """x_j = const_j + sum(coef * y); returns (consts, expansions, ny, extra bound rows)."""
        consts: List[Fraction] = []
        expansions: List[List[Tuple[int, int]]] = []
        extra: List[Tuple[Dict[int, Fraction], Fraction]] = []
        ny = 0
        for lo, hi in zip(self.lower, self.upper):
            if lo is not None:
                consts.append(lo)
                expansions.append([(ny, 1)])
                if hi is not None:
                    extra.append(({ny: Fraction(1)}, hi - lo))
                ny += 1
            elif hi is not None:
                consts.append(hi)
                expansions.append([(ny, -1)])
                ny += 1
            else:
                consts.append(ZERO)
                expansions.append([(ny, 1), (ny + 1, -1)])
                ny += 2
        return consts, expansions, ny, extra

    def solve(self) -> LPResult:
        consts, expansions, ny, extra = self._substitution()

        def to_y(coeffs: Sequence[Fraction]) -> Tuple[Dict[int, Fraction], Fraction]:
            row: Dict[int, Fraction] = {}
            shift = ZERO
            for j, a in enumerate(coeffs):
                if a == 0:
                    continue
                shift += a * consts[j]
                for y, s in expansions[j]:
                    row[y] = row.get(y, ZERO) + s * a
            return row, shift

        std_rows: List[Tuple[Dict[int, Fraction], str, Fraction]] = []
        for coeffs, op, rhs in self.rows:
            row, shift = to_y(coeffs)
            std_rows.append((row, op, rhs - shift))
        for row, rhs in extra:
            std_rows.append((row, "<=", rhs))
        cost_y, cost_shift = to_y(self.objective)

        values = _two_phase(std_rows, ny, cost_y)
        if isinstance(values, str):
            return LPResult(values)
        x = tuple(consts[j] + sum((s * values[y] for y, s in expansions[j]), ZERO) for j in range(self.num_vars))
        obj = sum((c * xi for c, xi in zip(self.objective, x)), ZERO)
        return LPResult(OPTIMAL, x, obj)


# ----- tableau -----

class _Tableau:
    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int]):
        self.A = rows
        self.b = rhs
        self.basis = basis

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        row_i = [a / piv for a in self.A[i]]
        b_i = self.b[i] / piv
        self.A[i], self.b[i] = row_i, b_i
        for k in range(len(self.A)):
            if k == i:
                continue
            f = self.A[k][j]
            if f != 0:
                row_k = self.A[k]
                self.A[k] = [a - f * c for a, c in zip(row_k, row_i)]
                self.b[k] -= f * b_i
        self.basis[i] = j

    def reduced_costs(self, cost: Sequence[Fraction], allowed: int) -> List[Fraction]:
        cb = [cost[v] for v in self.basis]
        out = []
        for j in range(allowed):
            r = cost[j]
            for i, c in enumerate(cb):
                if c:
                    a = self.A[i][j]
                    if a:
                        r -= c * a
            out.append(r)
        return out

    def run(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Maximize cost over columns < ``allowed`` from the current feasible basis."""
        while True:
            rc = self.reduced_costs(cost, allowed)
            entering = next((j for j in range(allowed) if rc[j] > 0 and j not in self.basis), None)
            if entering is None:
                return OPTIMAL
            try:
                _, _, i = min(
                    (self.b[i] / self.A[i][entering], self.basis[i], i)
                    for i in range(len(self.A))
                    if self.A[i][entering] > 0
                )
            except ValueError:
                return UNBOUNDED
            self.pivot(i, entering)


def _two_phase(rows, ny: int, cost_y: Dict[int, Fraction]):
    m = len(rows)
    n_slack = sum(1 for _, op, _ in rows if op != "==")
    # columns: y (ny) | slacks (n_slack) | artificials (added below)
    width = ny + n_slack
    A: List[List[Fraction]] = []
    b: List[Fraction] = []
    basis: List[Optional[int]] = []
    s = ny
    for row, op, rhs in rows:
        dense = [ZERO] * width
        for j, a in row.items():
            dense[j] = a
        slack_sign = 0
        if op != "==":
            slack_sign = 1 if op == "<=" else -1
            dense[s] = Fraction(slack_sign)
            slack_col = s
            s += 1
        if rhs < 0:
            dense = [-a for a in dense]
            rhs = -rhs
            slack_sign = -slack_sign
        A.append(dense)
        b.append(rhs)
        basis.append(slack_col if slack_sign == 1 else None)

    art_rows = [i for i in range(m) if basis[i] is None]
    n_art = len(art_rows)
    total = width + n_art
    for i, row in enumerate(A):
        row.extend([ZERO] * n_art)
    for a, i in enumerate(art_rows):
        A[i][width + a] = Fraction(1)
        basis[i] = width + a

    tab = _Tableau(A, b, basis)  # type: ignore[arg-type]
    if n_art:
        phase1 = [ZERO] * width + [Fraction(-1)] * n_art
        tab.run(phase1, total)
        if any(tab.b[i] != 0 for i in range(m) if tab.basis[i] >= width):
            return INFEASIBLE
        # drive zero-valued artificials out of the basis; drop redundant rows
        i = 0
        while i < len(tab.A):
            if tab.basis[i] >= width:
                j = next((c for c in range(width) if tab.A[i][c] != 0), None)
                if j is None:
                    del tab.A[i], tab.b[i], tab.basis[i]
                    continue
                tab.pivot(i, j)
            i += 1
        tab.A = [row[:width] for row in tab.A]

    cost = [ZERO] * width
    for j, c in cost_y.items():
        cost[j] = c
    status = tab.run(cost, width)
    if status != OPTIMAL:
        return status
    values = [ZERO] * width
    for i, v in enumerate(tab.basis):
        values[v] = tab.b[i]
    return values[:ny]
