"""Deterministic SVG plots for 1D envelopes and the planar zero-line picture."""
from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .numeric import Surd

SIZE = 800
MARGIN = 40


def _num(v) -> str:
    return f"{float(v):.6f}".rstrip("0").rstrip(".")


class _Canvas:
    def __init__(self, extent):
        self.extent = Fraction(extent)
        self.scale = Fraction(SIZE - 2 * MARGIN) / self.extent
        self.items = []

    def px(self, x, y):
        return (MARGIN + Fraction(x) * self.scale, SIZE - MARGIN - Fraction(y) * self.scale)

    def line(self, p, q, cls):
        (x1, y1), (x2, y2) = self.px(*p), self.px(*q)
        self.items.append(f'<line class="{cls}" x1="{_num(x1)}" y1="{_num(y1)}" '
                          f'x2="{_num(x2)}" y2="{_num(y2)}"/>')

    def polyline(self, pts, cls):
        coords = " ".join(f"{_num(a)},{_num(b)}" for a, b in (self.px(x, y) for x, y in pts))
        self.items.append(f'<polyline class="{cls}" points="{coords}"/>')

    def marker(self, p, label):
        cx, cy = self.px(*p)
        self.items.append(f'<circle class="max" cx="{_num(cx)}" cy="{_num(cy)}" r="5"/>')
        self.items.append(f'<text x="{_num(cx + 8)}" y="{_num(cy - 8)}">{escape(label)}</text>')

    def render(self, title) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
                f'viewBox="0 0 {SIZE} {SIZE}">\n'
                '<style>line,polyline{fill:none;stroke-width:1.5}'
                '.graph{stroke:#1f4e9a}.ref{stroke:#c0392b;stroke-dasharray:6 4}'
                '.zero{stroke:#555;stroke-width:1}.frame{stroke:#000}'
                '.max{fill:#c0392b}text{font:12px sans-serif}</style>\n'
                f'<title>{escape(title)}</title>\n')
        e = self.extent
        frame = [(0, 0), (e, 0), (e, e), (0, e), (0, 0)]
        body = [self._frame(frame)] + self.items
        return head + "\n".join(body) + "\n</svg>\n"

    def _frame(self, pts):
        coords = " ".join(f"{_num(a)},{_num(b)}" for a, b in (self.px(x, y) for x, y in pts))
        return f'<polyline class="frame" points="{coords}"/>'


def envelope_svg(f, maxima, reference: Surd, title: str) -> str:
    """Graph of a PWL on [0, 1/2]^2 with a horizontal reference line."""
    c = _Canvas(Fraction(1, 2))
    c.polyline(list(zip(f.xs, f.values)), "graph")
    ref = Fraction(str(reference.to_decimal(30)))
    c.line((f.lo, ref), (f.hi, ref), "ref")
    for x, y in maxima:
        c.marker((x, y), f"({x}, {y})")
    return c.render(title)


def _clip_unit(a: int, b: int, h: Fraction):
    """Endpoints of ``a x + b y = h`` inside the unit square, or None."""
    pts = set()
    for x in (0, 1):
        if b:
            y = (h - a * x) / Fraction(b)
            if 0 <= y <= 1:
                pts.add((Fraction(x), y))
    for y in (0, 1):
        if a:
            x = (h - b * y) / Fraction(a)
            if 0 <= x <= 1:
                pts.add((x, Fraction(y)))
    pts = sorted(pts)
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def planar_svg(creases, maximizers, title: str) -> str:
    """Unit square with the zero lines of every ``||G_n||`` and maximizer markers."""
    c = _Canvas(1)
    for cl in creases:
        if not cl.is_zero_line:
            continue
        seg = _clip_unit(cl.a, cl.b, cl.level)
        if seg is not None and seg[0] != seg[1]:
            c.line(seg[0], seg[1], "zero")
    for x, y in maximizers:
        c.marker((x, y), f"({x}, {y})")
    return c.render(title)
