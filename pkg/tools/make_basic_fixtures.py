"""Write the hand-derived curve-data fixtures (Hermitian, RS, tiny RS).

These three codes have closed-form bases and multiplication tables, so the
fixture files are emitted directly from those formulas.  The exporter
package regenerates them independently; agreement is tested there.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from agcode.codedata import CodeData
from agcode.gf import GF

DATA = Path(__file__).resolve().parents[1] / "src" / "agcode" / "data"


def hermitian():
    # y^3 + y = x^4 over F_9, alpha^2 = alpha + 1, G = -O + 18Q
    F = GF(3, 2, [2, 2, 1], [0, 1])
    A = F.from_power
    pts = [
        (0, A(2)), (0, A(6)), (1, 2), (1, A(1)), (1, A(3)), (2, 2), (2, A(1)),
        (2, A(3)), (A(1), 1), (A(1), A(7)), (A(1), A(5)), (A(2), 2), (A(2), A(1)),
        (A(2), A(3)), (A(7), 1), (A(7), A(7)), (A(7), A(5)), (A(5), 1),
        (A(5), A(7)), (A(5), A(5)), (A(3), 1), (A(3), A(7)), (A(3), A(5)),
        (A(6), 2), (A(6), A(1)), (A(6), A(3)),
    ]
    for x, y in pts:
        assert F.add(F.pow(y, 3), y) == F.pow(x, 4)
    ev_x = [p[0] for p in pts]
    ev_y1 = [p[1] for p in pts]
    ev_y2 = [F.mul(y, y) for y in ev_y1]
    ones = [1] * 26
    neg1 = F.neg(1)
    x3 = [0, 0, 0, 1]
    x4 = [0, 0, 0, 0, 1]
    unit = lambda j: [[1] if i == j else [] for i in range(3)]
    table = [
        [unit(0), unit(1), unit(2)],
        [[[], [0, 1], []], [[], [], [1]], [x3, [neg1], []]],
        [[[], [], [0, 1]], [x3, [neg1], []], [[], x4, [neg1]]],
    ]
    return CodeData(
        field=F, n=26, genus=3, gamma=3, degG=17,
        a=[0, 4, 8], b=[-15, -14, -10],
        ev_x=ev_x, ev_y=[ones, ev_y1, ev_y2], ev_ybar=[ev_x, ev_y1, ev_y2],
        table=table,
    )


def rs_63():
    # projective line over F_64, G = -O + 39Q, D = the 63 nonzero elements
    F = GF(2, 6, [1, 1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 0])
    ev_x = [F.from_power(t) for t in range(63)]
    inv_x = [F.inv(v) for v in ev_x]
    return CodeData(
        field=F, n=63, genus=0, gamma=1, degG=38,
        a=[0], b=[-38],
        ev_x=ev_x, ev_y=[[1] * 63], ev_ybar=[ev_x], table=[[[[1]]]],
    )


def rs_7():
    # projective line over F_8, G = 2O, D = the 7 nonzero elements
    F = GF(2, 3, [1, 1, 0, 1], [0, 1, 0])
    ev_x = [F.from_power(t) for t in range(7)]
    ybar0 = [F.inv(F.mul(v, v)) for v in ev_x]
    return CodeData(
        field=F, n=7, genus=0, gamma=1, degG=2,
        a=[0], b=[-2],
        ev_x=ev_x, ev_y=[[1] * 7], ev_ybar=[ybar0], table=[[[[1]]]],
    )


def main():
    DATA.mkdir(exist_ok=True)
    for name, build in (
        ("hermitian_f9_26", hermitian),
        ("rs_f64_63", rs_63),
        ("rs_f8_7", rs_7),
    ):
        code = build().validate()
        code.save(DATA / f"{name}.json")
        print(f"{name}: n={code.n} gamma={code.gamma} k={code.k}")


if __name__ == "__main__":
    main()
