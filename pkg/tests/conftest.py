from fractions import Fraction

import pytest

from symham.pointset import PointSet


def integrate_product_by_cells(P1: PointSet, P2: PointSet) -> Fraction:
    """Integral of Delta(P1) * Delta(P2) over the unit square, straight from counting.

    Box counts are constant on cells (x_k, x_{k+1}] x (y_k, y_{k+1}] between
    consecutive coordinate values, so each cell contributes a polynomial in
    alpha * beta integrated in closed form.
    """
    d = 1 << P1.level
    cuts_x = sorted({0, d} | {a for a, _ in P1.points + P2.points if a < d})
    cuts_y = sorted({0, d} | {b for _, b in P1.points + P2.points if b < d})
    n1, n2 = P1.size, P2.size
    total = Fraction(0)
    for x0, x1 in zip(cuts_x, cuts_x[1:]):
        for y0, y1 in zip(cuts_y, cuts_y[1:]):
            # on this cell the box [0, alpha) x [0, beta) contains points with a <= x0, b <= y0
            c1 = sum(1 for a, b in P1.points if a <= x0 and b <= y0)
            c2 = sum(1 for a, b in P2.points if a <= x0 and b <= y0)
            X0, X1, Y0, Y1 = (Fraction(v, d) for v in (x0, x1, y0, y1))
            area = (X1 - X0) * (Y1 - Y0)
            m1 = (X1**2 - X0**2) / 2 * (Y1**2 - Y0**2) / 2
            m2 = (X1**3 - X0**3) / 3 * (Y1**3 - Y0**3) / 3
            # (c1 - n1 t)(c2 - n2 t) with t = alpha * beta
            total += c1 * c2 * area - (c1 * n2 + c2 * n1) * m1 + n1 * n2 * m2
    return total


@pytest.fixture(scope="session")
def cell_oracle():
    return integrate_product_by_cells


ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def acceptance():
    """Record one verdict line per acceptance criterion."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append((name, bool(ok), detail))
        print(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
