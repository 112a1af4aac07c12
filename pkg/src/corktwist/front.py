"""Piecewise-linear Legendrian front diagrams with exact rational geometry.

A front is a union of oriented polyline arcs in the xy-plane.  Vertical
segments are forbidden: where a smooth front would have a vertical
tangency these diagrams have a cusp, i.e. a vertex at which the
x-direction of travel reverses.  At a crossing the strand of smaller
slope is the over strand, so over/under data is never stored, only
derived.  Coordinates are fractions.Fraction throughout and every
predicate is exact.

Optionally a diagram carries 1-handle attaching balls: vertical segments
that come in pairs, with arc ends on one ball of a pair continued from
the matching (same height rank) position on the other ball.  Cusps and
crossings are counted exactly as drawn; passing through a handle adds
nothing.  That counting convention is surfaced in reports as
``handle_convention`` so alternatives can be compared downstream.

Thurston-Bennequin number of a component: writhe minus half the number
of cusps, both read off this diagram.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

Point = tuple[Fraction, Fraction]

HANDLE_CONVENTION = "cusps and crossings counted as drawn; no correction per ball passage"


class FrontError(ValueError):
    """Base class for front diagram problems."""


class FrontParseError(FrontError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class FrontGeometryError(FrontError):
    """Genericity violation: touching endpoints, triple points, overlaps, ..."""


@dataclass(frozen=True)
class Arc:
    component: str
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise FrontGeometryError(f"arc of {self.component!r} needs at least 2 points")
        for a, b in zip(self.points, self.points[1:]):
            if a == b:
                raise FrontGeometryError(f"zero-length segment at {_fmt_pt(a)} in {self.component!r}")
            if a[0] == b[0]:
                raise FrontGeometryError(
                    f"vertical segment at x={a[0]} in {self.component!r}; "
                    "fronts replace vertical tangencies with cusps"
                )


@dataclass(frozen=True)
class HandleBall:
    handle: str
    x: Fraction
    ytop: Fraction
    ybot: Fraction

    def __post_init__(self) -> None:
        if self.ytop <= self.ybot:
            raise FrontGeometryError(f"handle ball {self.handle!r} has ytop <= ybot")

    def contains(self, p: Point) -> bool:
        return p[0] == self.x and self.ybot <= p[1] <= self.ytop


@dataclass(frozen=True)
class Crossing:
    point: Point
    over_component: str
    under_component: str
    over_dir: tuple[Fraction, Fraction]
    under_dir: tuple[Fraction, Fraction]
    sign: int
    # traversal coordinates (component, segment index, parameter) of both strands
    over_at: tuple[str, int, Fraction]
    under_at: tuple[str, int, Fraction]


@dataclass(frozen=True)
class _Step:
    """One directed segment of a component traversal."""

    start: Point
    end: Point
    arc_index: int
    after_jump: bool  # entered through a handle ball


@dataclass(frozen=True)
class FrontDiagram:
    arcs: tuple[Arc, ...]
    balls: tuple[HandleBall, ...] = ()
    orientations: tuple[tuple[str, int], ...] = ()
    knottypes: tuple[tuple[str, str], ...] = ()

    # populated during validation; excluded from equality and hashing
    _traversals: dict = field(default_factory=dict, compare=False, repr=False, hash=False)
    _crossings: tuple = field(default=(), compare=False, repr=False, hash=False)
    _cusps: dict = field(default_factory=dict, compare=False, repr=False, hash=False)
    _jumps: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        traversals, jumps = _chain_components(self.arcs, self.balls)
        orient = dict(self.orientations)
        for comp in orient:
            if comp not in traversals:
                raise FrontParseError(f"orientation for unknown component {comp!r}")
        for comp, _ in self.knottypes:
            if comp not in traversals:
                raise FrontParseError(f"knot type for unknown component {comp!r}")
        for comp, steps in traversals.items():
            if orient.get(comp, 1) == -1:
                traversals[comp] = _reverse_steps(steps)
        cusps = {comp: _find_cusps(steps) for comp, steps in traversals.items()}
        for comp, pts in cusps.items():
            if len(pts) % 2 != 0:
                raise FrontGeometryError(
                    f"component {comp!r} has {len(pts)} cusps; a closed front "
                    "reverses x-direction an even number of times"
                )
            if jumps[comp] == 0 and len(pts) < 2:
                raise FrontGeometryError(f"component {comp!r} is closed in the plane but has no cusps")
        crossings = _find_crossings(traversals, self.balls)
        object.__setattr__(self, "_traversals", traversals)
        object.__setattr__(self, "_crossings", tuple(crossings))
        object.__setattr__(self, "_cusps", cusps)
        object.__setattr__(self, "_jumps", jumps)

    # -- queries --------------------------------------------------------------

    def components(self) -> list[str]:
        seen: list[str] = []
        for arc in self.arcs:
            if arc.component not in seen:
                seen.append(arc.component)
        return seen

    def orientation(self, comp: str) -> int:
        return dict(self.orientations).get(comp, 1)

    def knottype(self, comp: str) -> str | None:
        return dict(self.knottypes).get(comp)

    def crossings(self) -> tuple[Crossing, ...]:
        return self._crossings

    def cusp_count(self, comp: str) -> int:
        self._require(comp)
        return len(self._cusps[comp])

    def cusp_points(self, comp: str) -> list[Point]:
        self._require(comp)
        return sorted(self._cusps[comp])

    def handle_passes(self, comp: str) -> int:
        self._require(comp)
        return self._jumps[comp]

    def writhe(self, comp: str) -> int:
        self._require(comp)
        return sum(
            c.sign
            for c in self._crossings
            if c.over_component == comp and c.under_component == comp
        )

    def tb(self, comp: str) -> int:
        """Thurston-Bennequin number: writhe minus half the cusp count."""
        return self.writhe(comp) - self.cusp_count(comp) // 2

    def linking_number(self, c1: str, c2: str) -> int:
        self._require(c1)
        self._require(c2)
        if c1 == c2:
            raise ValueError("linking number needs two distinct components")
        total = 0
        count = 0
        for c in self._crossings:
            pair = {c.over_component, c.under_component}
            if pair == {c1, c2}:
                total += c.sign
                count += 1
        if count % 2 != 0:
            raise FrontGeometryError(
                f"components {c1!r}, {c2!r} cross an odd number of times; diagram is not closed"
            )
        return total // 2

    def _require(self, comp: str) -> None:
        if comp not in self._traversals:
            raise KeyError(f"no component {comp!r}; have {self.components()}")

    def steps(self, comp: str) -> list[_Step]:
        self._require(comp)
        return list(self._traversals[comp])

    def tb_report(self, comp: str) -> dict:
        """Structured tb computation: every crossing sign and cusp listed."""
        self._require(comp)
        selfx = [
            c
            for c in self._crossings
            if c.over_component == comp and c.under_component == comp
        ]
        selfx.sort(key=lambda c: c.point)
        return {
            "component": comp,
            "crossings": [
                {"point": [str(c.point[0]), str(c.point[1])], "sign": c.sign} for c in selfx
            ],
            "writhe": self.writhe(comp),
            "cusps": [[str(p[0]), str(p[1])] for p in self.cusp_points(comp)],
            "cusp_count": self.cusp_count(comp),
            "tb": self.tb(comp),
            "handle_passes": self.handle_passes(comp),
            "handle_convention": HANDLE_CONVENTION,
        }


# -- exact segment predicates -------------------------------------------------

def _cross2(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _sub(a: Point, b: Point) -> tuple[Fraction, Fraction]:
    return (a[0] - b[0], a[1] - b[1])


def _seg_meet(p: Point, q: Point, r: Point, s: Point):
    """Classify how segments pq and rs meet.

    Returns one of
      ("none",), ("overlap",),
      ("touch", point),
      ("cross", t, u, point)   with 0 < t, u < 1 strictly interior.
    """
    d1 = _sub(q, p)
    d2 = _sub(s, r)
    denom = _cross2(d1, d2)
    rp = _sub(r, p)
    if denom == 0:
        if _cross2(rp, d1) != 0:
            return ("none",)
        # collinear: compare x-intervals (segments are never vertical)
        lo1, hi1 = sorted((p[0], q[0]))
        lo2, hi2 = sorted((r[0], s[0]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return ("none",)
        if lo == hi:
            x = lo
            y = p[1] + (q[1] - p[1]) * (x - p[0]) / (q[0] - p[0])
            return ("touch", (x, y))
        return ("overlap",)
    t = _cross2(rp, d2) / denom
    u = _cross2(rp, d1) / denom
    if t < 0 or t > 1 or u < 0 or u > 1:
        return ("none",)
    point = (p[0] + t * d1[0], p[1] + t * d1[1])
    if 0 < t < 1 and 0 < u < 1:
        return ("cross", t, u, point)
    return ("touch", point)


def _slope(a: Point, b: Point) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


# -- chaining arcs into closed components -------------------------------------

def _chain_components(
    arcs: tuple[Arc, ...], balls: tuple[HandleBall, ...]
) -> tuple[dict[str, list[_Step]], dict[str, int]]:
    if not arcs:
        raise FrontParseError("diagram has no arcs")
    _validate_balls(arcs, balls)

    ends: list[tuple[int, int]] = []  # (arc index, 0=start 1=end)
    for i, _ in enumerate(arcs):
        ends.append((i, 0))
        ends.append((i, 1))

    def end_point(e: tuple[int, int]) -> Point:
        arc = arcs[e[0]]
        return arc.points[0] if e[1] == 0 else arc.points[-1]

    by_point: dict[Point, list[tuple[int, int]]] = {}
    for e in ends:
        by_point.setdefault(end_point(e), []).append(e)

    partner: dict[tuple[int, int], tuple[tuple[int, int], bool]] = {}
    ball_ends: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(balls))}
    for pt, group in by_point.items():
        if len(group) == 2:
            a, b = group
            partner[a] = (b, False)
            partner[b] = (a, False)
        elif len(group) == 1:
            e = group[0]
            hits = [i for i, ball in enumerate(balls) if ball.contains(pt)]
            if not hits:
                raise FrontGeometryError(
                    f"open component: arc end at {_fmt_pt(pt)} matches nothing"
                )
            if len(hits) > 1:
                raise FrontGeometryError(f"arc end at {_fmt_pt(pt)} lies on two handle balls")
            ball_ends[hits[0]].append(e)
        else:
            raise FrontGeometryError(f"{len(group)} arc ends meet at {_fmt_pt(pt)}")

    pair_of: dict[str, list[int]] = {}
    for i, ball in enumerate(balls):
        pair_of.setdefault(ball.handle, []).append(i)
    for handle, pair in pair_of.items():
        ia, ib = pair
        left = sorted(ball_ends[ia], key=lambda e: end_point(e)[1], reverse=True)
        right = sorted(ball_ends[ib], key=lambda e: end_point(e)[1], reverse=True)
        if len(left) != len(right):
            raise FrontGeometryError(
                f"handle {handle!r} balls carry {len(left)} and {len(right)} strand ends"
            )
        ys = [end_point(e)[1] for e in left]
        if len(set(ys)) != len(ys) or len({end_point(e)[1] for e in right}) != len(right):
            raise FrontGeometryError(f"two strand ends at the same height on a ball of {handle!r}")
        for a, b in zip(left, right):
            partner[a] = (b, True)
            partner[b] = (a, True)

    # walk cycles
    traversals: dict[str, list[_Step]] = {}
    jumps: dict[str, int] = {}
    visited = [False] * len(arcs)
    order = sorted(range(len(arcs)), key=lambda i: (0, i))
    for start in order:
        if visited[start]:
            continue
        comp = arcs[start].component
        if comp in traversals:
            raise FrontGeometryError(f"component {comp!r} splits into several closed curves")
        steps: list[_Step] = []
        njumps = 0
        current = start
        forward = True
        entered_by_jump = False
        while True:
            visited[current] = True
            arc = arcs[current]
            if arc.component != comp:
                raise FrontGeometryError(
                    f"arcs labelled {comp!r} and {arc.component!r} chain into one curve"
                )
            pts = arc.points if forward else tuple(reversed(arc.points))
            for k, (a, b) in enumerate(zip(pts, pts[1:])):
                steps.append(_Step(a, b, current, after_jump=(k == 0 and entered_by_jump)))
            exit_end = (current, 1 if forward else 0)
            nxt, via_ball = partner[exit_end]
            if via_ball:
                njumps += 1
            entered_by_jump = via_ball
            current, entry = nxt
            forward = entry == 0
            if current == start and forward:
                # adjust the recorded entry flag of the first step
                if entered_by_jump != steps[0].after_jump:
                    steps[0] = _Step(
                        steps[0].start, steps[0].end, steps[0].arc_index, entered_by_jump
                    )
                break
            if visited[current] and not (current == start):
                raise FrontGeometryError(f"arc chaining of {comp!r} revisits an arc; bad matching")
        traversals[comp] = steps
        jumps[comp] = njumps

    declared = {arc.component for arc in arcs}
    missing = declared - set(traversals)
    if missing:
        raise FrontGeometryError(f"components never closed: {sorted(missing)}")
    return traversals, jumps


def _validate_balls(arcs: tuple[Arc, ...], balls: tuple[HandleBall, ...]) -> None:
    counts: dict[str, int] = {}
    for ball in balls:
        counts[ball.handle] = counts.get(ball.handle, 0) + 1
    for handle, n in counts.items():
        if n != 2:
            raise FrontParseError(f"handle {handle!r} has {n} balls; need exactly 2")
    for i, b1 in enumerate(balls):
        for b2 in balls[i + 1 :]:
            if b1.x == b2.x and not (b1.ytop < b2.ybot or b2.ytop < b1.ybot):
                raise FrontGeometryError(f"balls of {b1.handle!r} and {b2.handle!r} overlap")
    # interior vertices may not sit on balls
    for arc in arcs:
        for p in arc.points[1:-1]:
            for ball in balls:
                if ball.contains(p):
                    raise FrontGeometryError(
                        f"interior vertex {_fmt_pt(p)} of {arc.component!r} lies on a handle ball"
                    )


def _reverse_steps(steps: list[_Step]) -> list[_Step]:
    out: list[_Step] = []
    n = len(steps)
    for i in range(n - 1, -1, -1):
        s = steps[i]
        # after reversal the jump flag belongs to the step that FOLLOWS the jump,
        # which is the reversal of the step that preceded it
        flag = steps[(i + 1) % n].after_jump
        out.append(_Step(s.end, s.start, s.arc_index, flag))
    return out


def _find_cusps(steps: list[_Step]) -> list[Point]:
    cusps: list[Point] = []
    n = len(steps)
    for i in range(n):
        cur = steps[i]
        nxt = steps[(i + 1) % n]
        if nxt.after_jump:
            continue
        dx1 = cur.end[0] - cur.start[0]
        dx2 = nxt.end[0] - nxt.start[0]
        if (dx1 > 0) != (dx2 > 0):
            cusps.append(cur.end)
    return cusps


def _find_crossings(
    traversals: dict[str, list[_Step]], balls: tuple[HandleBall, ...]
) -> list[Crossing]:
    segs: list[tuple[str, int, _Step]] = []
    for comp, steps in traversals.items():
        for i, s in enumerate(steps):
            segs.append((comp, i, s))

    for comp, i, s in segs:
        _check_ball_contacts(comp, s, balls)

    crossings: list[Crossing] = []
    for a in range(len(segs)):
        comp1, i1, s1 = segs[a]
        n1 = len(traversals[comp1])
        for b in range(a + 1, len(segs)):
            comp2, i2, s2 = segs[b]
            if comp1 == comp2:
                successor = (i1 + 1) % n1 == i2 and not traversals[comp1][i2].after_jump
                predecessor = (i2 + 1) % n1 == i1 and not traversals[comp1][i1].after_jump
                if successor or predecessor:
                    continue  # joined at a shared vertex
            result = _seg_meet(s1.start, s1.end, s2.start, s2.end)
            kind = result[0]
            if kind == "none":
                continue
            if kind == "overlap":
                raise FrontGeometryError(
                    f"segments of {comp1!r} and {comp2!r} overlap along a line"
                )
            if kind == "touch":
                raise FrontGeometryError(
                    f"segments of {comp1!r} and {comp2!r} touch at {_fmt_pt(result[1])}; "
                    "perturb the diagram"
                )
            t, u, point = result[1], result[2], result[3]
            slope1 = _slope(s1.start, s1.end)
            slope2 = _slope(s2.start, s2.end)
            if slope1 == slope2:
                raise FrontGeometryError(f"equal slopes at crossing {_fmt_pt(point)}")
            if slope1 < slope2:
                over = (comp1, i1, t, s1)
                under = (comp2, i2, u, s2)
            else:
                over = (comp2, i2, u, s2)
                under = (comp1, i1, t, s1)
            odir = _sub(over[3].end, over[3].start)
            udir = _sub(under[3].end, under[3].start)
            sign = 1 if _cross2(odir, udir) > 0 else -1
            crossings.append(
                Crossing(
                    point=point,
                    over_component=over[0],
                    under_component=under[0],
                    over_dir=odir,
                    under_dir=udir,
                    sign=sign,
                    over_at=(over[0], over[1], over[2]),
                    under_at=(under[0], under[1], under[2]),
                )
            )

    by_point: dict[Point, int] = {}
    for c in crossings:
        by_point[c.point] = by_point.get(c.point, 0) + 1
    for pt, n in by_point.items():
        if n > 1:
            raise FrontGeometryError(f"triple point at {_fmt_pt(pt)}")
    return crossings


def _check_ball_contacts(comp: str, s: _Step, balls: tuple[HandleBall, ...]) -> None:
    for ball in balls:
        if s.start[0] == s.end[0]:
            continue  # impossible; arcs have no vertical segments
        t = (ball.x - s.start[0]) / (s.end[0] - s.start[0])
        if t < 0 or t > 1:
            continue
        y = s.start[1] + t * (s.end[1] - s.start[1])
        if not (ball.ybot <= y <= ball.ytop):
            continue
        if t == 0 and s.start == (ball.x, y) and ball.contains(s.start):
            continue
        if t == 1 and ball.contains(s.end):
            continue
        raise FrontGeometryError(
            f"segment of {comp!r} runs through a ball of handle {ball.handle!r}"
        )


# -- stabilization ------------------------------------------------------------

def stabilize(d: FrontDiagram, comp: str, sign: int) -> FrontDiagram:
    """Insert a zigzag into comp: two new cusps, no new crossings, tb drops by 1.

    sign +1 bulges the zigzag toward +y, -1 toward -y.  The insertion site
    is deterministic: the first traversal segment, in its largest
    crossing-free window, with the zigzag shrunk until the diagram stays
    generic.
    """
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    d._require(comp)
    steps = d._traversals[comp]
    seg_index = 0
    step = steps[seg_index]
    params = sorted(
        at[2]
        for c in d._crossings
        for at in (c.over_at, c.under_at)
        if at[0] == comp and at[1] == seg_index
    )
    cuts = [Fraction(0)] + params + [Fraction(1)]
    best = max(range(len(cuts) - 1), key=lambda i: (cuts[i + 1] - cuts[i], -i))
    lo, hi = cuts[best], cuts[best + 1]
    mid = (lo + hi) / 2
    width = (hi - lo) / 3

    old_crossing_count = len(d._crossings)
    arc = d.arcs[step.arc_index]
    # locate the stored segment matching this step (traversal may run it
    # backwards when the component is negatively oriented)
    stored = None
    for k, (a, b) in enumerate(zip(arc.points, arc.points[1:])):
        if (a, b) == (step.start, step.end) or (b, a) == (step.start, step.end):
            stored = k
            break
    assert stored is not None, "traversal step lost its arc segment"
    a, b = arc.points[stored], arc.points[stored + 1]

    for attempt in range(80):
        w = width / (2**attempt)
        h = w * abs(b[0] - a[0]) / (2 ** (attempt + 1))
        t1, t2 = mid - w / 2, mid + w / 2
        if (a, b) == (step.start, step.end):
            s1, s2 = t1, t2
        else:
            s1, s2 = 1 - t2, 1 - t1
        m1 = _lerp(a, b, s1)
        m2 = _lerp(a, b, s2)
        dxy = _sub(m2, m1)
        za = (m1[0] + Fraction(3, 4) * dxy[0], m1[1] + Fraction(3, 4) * dxy[1] + sign * h)
        zb = (m1[0] + Fraction(1, 4) * dxy[0], m1[1] + Fraction(1, 4) * dxy[1] - sign * h)
        new_points = arc.points[: stored + 1] + (m1, za, zb, m2) + arc.points[stored + 1 :]
        arcs = list(d.arcs)
        arcs[step.arc_index] = Arc(arc.component, new_points)
        try:
            candidate = FrontDiagram(tuple(arcs), d.balls, d.orientations, d.knottypes)
        except FrontError:
            continue
        if len(candidate._crossings) != old_crossing_count:
            continue
        if candidate.cusp_count(comp) != d.cusp_count(comp) + 2:
            continue
        return candidate
    raise FrontGeometryError(f"could not fit a zigzag on component {comp!r}")


def _lerp(a: Point, b: Point, t: Fraction) -> Point:
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


# -- parsing and serialization ------------------------------------------------

def _fmt_pt(p: Point) -> str:
    return f"({p[0]},{p[1]})"


def parse_rational(tok: str, line: int | None = None) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise FrontParseError(f"bad rational {tok!r}: {exc}", line)


class FrontBuilder:
    """Accumulates parsed statements, then builds a validated diagram."""

    def __init__(self) -> None:
        self.arcs: list[Arc] = []
        self.balls: list[HandleBall] = []
        self.orientations: list[tuple[str, int]] = []
        self.knottypes: list[tuple[str, str]] = []

    def statement(self, text: str, line: int) -> bool:
        """Consume one front-grammar line; False if the keyword is foreign."""
        head, _, rest = text.partition(" ")
        if head == "arc":
            name, _, pts = rest.partition(":")
            name = name.strip()
            if not name:
                raise FrontParseError("arc needs a component id", line)
            self.arcs.append(Arc(name, _parse_points(pts, line)))
            return True
        if head == "handle":
            name, _, params = rest.partition(":")
            name = name.strip()
            vals: dict[str, Fraction] = {}
            for tok in params.split():
                key, _, val = tok.partition("=")
                if key not in ("x", "ytop", "ybot") or not val:
                    raise FrontParseError(f"bad handle parameter {tok!r}", line)
                vals[key] = parse_rational(val, line)
            if set(vals) != {"x", "ytop", "ybot"}:
                raise FrontParseError("handle needs x=, ytop= and ybot=", line)
            self.balls.append(HandleBall(name, vals["x"], vals["ytop"], vals["ybot"]))
            return True
        if head == "orient":
            parts = rest.split()
            if len(parts) != 2 or parts[1] not in ("+", "-"):
                raise FrontParseError("usage: orient <component> +|-", line)
            self.orientations.append((parts[0], 1 if parts[1] == "+" else -1))
            return True
        if head == "knottype":
            parts = rest.split()
            if len(parts) != 2:
                raise FrontParseError("usage: knottype <component> <name>", line)
            self.knottypes.append((parts[0], parts[1]))
            return True
        return False

    def build(self) -> FrontDiagram:
        try:
            return FrontDiagram(
                tuple(self.arcs),
                tuple(self.balls),
                tuple(self.orientations),
                tuple(self.knottypes),
            )
        except FrontError:
            raise
        except ValueError as exc:
            raise FrontGeometryError(str(exc))


def _parse_points(text: str, line: int) -> tuple[Point, ...]:
    pts: list[Point] = []
    for tok in text.split():
        if not (tok.startswith("(") and tok.endswith(")")):
            raise FrontParseError(f"expected (x,y), got {tok!r}", line)
        x, comma, y = tok[1:-1].partition(",")
        if not comma:
            raise FrontParseError(f"expected (x,y), got {tok!r}", line)
        pts.append((parse_rational(x, line), parse_rational(y, line)))
    if not pts:
        raise FrontParseError("arc has no points", line)
    return tuple(pts)


def parse_front(text: str) -> FrontDiagram:
    """Parse the line grammar, or the JSON equivalent if text starts with '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return front_from_doc(json.loads(text))
    builder = FrontBuilder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not builder.statement(line, lineno):
            raise FrontParseError(f"unknown statement {line.split()[0]!r}", lineno)
    if not builder.arcs:
        raise FrontParseError("no arcs in document")
    return builder.build()


def front_from_doc(doc: dict) -> FrontDiagram:
    arcs = tuple(
        Arc(
            a["component"],
            tuple((parse_rational(str(x)), parse_rational(str(y))) for x, y in a["points"]),
        )
        for a in doc.get("arcs", [])
    )
    balls: list[HandleBall] = []
    for h in doc.get("handles", []):
        for ball in h["balls"]:
            balls.append(
                HandleBall(
                    h["id"],
                    parse_rational(str(ball["x"])),
                    parse_rational(str(ball["ytop"])),
                    parse_rational(str(ball["ybot"])),
                )
            )
    orientations = tuple(
        (comp, 1 if s == "+" else -1) for comp, s in doc.get("orient", {}).items()
    )
    knottypes = tuple(doc.get("knottypes", {}).items())
    return FrontDiagram(arcs, tuple(balls), orientations, knottypes)


def front_to_doc(d: FrontDiagram) -> dict:
    handles: dict[str, list[dict]] = {}
    for ball in d.balls:
        handles.setdefault(ball.handle, []).append(
            {"x": str(ball.x), "ytop": str(ball.ytop), "ybot": str(ball.ybot)}
        )
    return {
        "arcs": [
            {"component": a.component, "points": [[str(x), str(y)] for x, y in a.points]}
            for a in d.arcs
        ],
        "handles": [{"id": name, "balls": balls} for name, balls in handles.items()],
        "orient": {comp: ("+" if s == 1 else "-") for comp, s in d.orientations},
        "knottypes": dict(d.knottypes),
    }


def front_to_text(d: FrontDiagram) -> str:
    lines: list[str] = []
    for a in d.arcs:
        pts = " ".join(_fmt_pt(p) for p in a.points)
        lines.append(f"arc {a.component} : {pts}")
    for ball in d.balls:
        lines.append(f"handle {ball.handle} : x={ball.x} ytop={ball.ytop} ybot={ball.ybot}")
    for comp, s in d.orientations:
        lines.append(f"orient {comp} {'+' if s == 1 else '-'}")
    for comp, name in d.knottypes:
        lines.append(f"knottype {comp} {name}")
    return "\n".join(lines) + "\n"
