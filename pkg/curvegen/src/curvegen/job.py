"""Curve-job files: the input format of the exporter.

A job describes a curve, the distinguished place Q (a smooth monomial
chart at infinity, or a cusp), the divisor G, the function x of pole
order gamma at Q, an optional common denominator for the basis of
functions with poles on G, and the evaluation points.  Field elements
are digit vectors; an element of the coordinate ring is a list (by
y-degree) of polynomials in x, each a list of digit vectors.
"""

from __future__ import annotations

import json
from importlib import resources

from curvegen.field import Field
from curvegen.poly import Ring, ptrim


class JobError(ValueError):
    pass


class Job:
    def __init__(self, obj):
        try:
            self._parse(obj)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, JobError):
                raise
            raise JobError(f"malformed job file: {exc}") from exc

    def _parse(self, obj):
        self.name = obj["name"]
        self.field = Field.from_json(obj["field"])
        F = self.field
        self.ring = Ring(F, [self._poly1(p) for p in obj["curve"]])
        self.genus = int(obj["genus"])
        self.gamma = int(obj["gamma"])
        self.x_num = self._elem(obj["x"]["num"])
        self.x_den = self._elem(obj["x"]["den"]) if "den" in obj["x"] else None

        inf = obj["infinity"]
        q = inf["Q"]
        self.cusp = bool(q.get("cusp", False))
        self.q_chart = None if self.cusp else (tuple(q["x"]), tuple(q["y"]))
        self.other_charts = [
            (tuple(ch["x"]), tuple(ch["y"])) for ch in inf.get("others", [])
        ]

        G = obj["G"]
        self.nQ = int(G["Q"])
        self.other_mults = [int(m) for m in G.get("others", [0] * len(self.other_charts))]
        if len(self.other_mults) != len(self.other_charts):
            raise JobError("G.others does not match the other infinite places")
        self.finite_g = [
            (F.from_digits(e["point"][0]), F.from_digits(e["point"][1]), int(e["mult"]))
            for e in G.get("finite", [])
        ]
        for x0, y0, _ in self.finite_g:
            if self.ring.curve_value(x0, y0) != 0:
                raise JobError(f"G point ({x0}, {y0}) is not on the curve")

        if "denominator" in obj:
            d = obj["denominator"]
            self.den = (self._elem(d["elem"]), int(d.get("power", 1)))
        else:
            self.den = None

        self.points_spec = obj["points"]
        self.ambient_xdeg = int(obj.get("ambient_xdeg", 20))
        self.prec = int(obj.get("prec", 160))

    def _poly1(self, p):
        return ptrim([self.field.from_digits(c) for c in p])

    def _elem(self, e):
        out = [self._poly1(p) for p in e]
        dy = max(self.ring.dy, 1)
        if len(out) > dy:
            raise JobError("element has y-degree outside the coordinate ring")
        while len(out) < dy:
            out.append([])
        return out

    def resolve_points(self):
        F, ring = self.field, self.ring
        spec = self.points_spec
        if isinstance(spec, list):
            pts = [(F.from_digits(x), F.from_digits(y)) for x, y in spec]
        else:
            exclude = {
                (F.from_digits(x), F.from_digits(y)) for x, y in spec.get("exclude", [])
            }
            allpts = ring.rational_points()
            if spec.get("order", "int") == "power":
                bycoord = {}
                for x0, y0 in allpts:
                    bycoord.setdefault(x0, []).append(y0)
                pts = [
                    (x0, y0)
                    for x0 in (F.from_power(t) for t in range(F.q - 1))
                    for y0 in bycoord.get(x0, [])
                ]
            else:
                pts = allpts
            pts = [p for p in pts if p not in exclude]
        for x0, y0 in pts:
            if ring.curve_value(x0, y0) != 0:
                raise JobError(f"evaluation point ({x0}, {y0}) is not on the curve")
        if len(set(pts)) != len(pts):
            raise JobError("duplicate evaluation points")
        return pts

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise JobError(f"not valid JSON: {exc}") from exc
        return cls(obj)


# -- shipped jobs ----------------------------------------------------------


def job_path(name):
    """Path of a shipped curve-job file, e.g. 'suzuki_f8_63'."""
    if not name.endswith(".json"):
        name += ".json"
    return resources.files("curvegen").joinpath("jobs", name)


def list_jobs():
    data = resources.files("curvegen").joinpath("jobs")
    return sorted(p.name[:-5] for p in data.iterdir() if p.name.endswith(".json"))


def load_job(name):
    return Job(json.loads(job_path(name).read_text()))
