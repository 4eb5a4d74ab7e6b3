"""
Minimal deterministic SVG 1.1 writer shared by snail and tree drawings.

Drawing calls take axis coordinates (``y`` pointing up); the canvas scales them and flips ``y``.
Numbers are written with fixed ``%f`` formatting, so equal drawings give equal bytes.
"""

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(width)f" height="%(height)f" viewBox="%(min_x)f %(min_y)f %(width)f %(height)f" \
version="1.1" xmlns="http://www.w3.org/2000/svg">
<style type="text/css">
.axis {stroke:#000000; stroke-width:1; fill:none}
.green {stroke:#1a9641; stroke-width:2; fill:none}
.red {stroke:#d7191c; stroke-width:2; fill:none}
.arc {stroke:#404040; stroke-width:2; fill:none}
circle.green {fill:#1a9641}
circle.red {fill:#d7191c}
circle.arc {fill:#404040}
text.green {fill:#1a9641; stroke:none}
text.red {fill:#d7191c; stroke:none}
.marked {fill:#000000; stroke:none}
text {font-family:monospace; font-size:%(font_size)fpx}
</style>
"""

POSTAMBLE = """\
</svg>
"""


def _f(value):
    # Avoids "-0.000000".
    return '%f' % (float(value) + 0.0)


class SVG(object):
    """
    :param float scale: User units per axis unit.
    :param float margin: Border around the drawing, in axis units.
    """

    def __init__(self, scale, margin=1.0):
        self.scale = float(scale)
        self.margin = float(margin)
        self.min_x = self.max_x = self.min_y = self.max_y = None
        self.commands = []

    def _point(self, x, y):
        return float(x) * self.scale, -float(y) * self.scale

    def require(self, x, y):
        sx, sy = self._point(x, y)
        if self.min_x is None:
            self.min_x = self.max_x = sx
            self.min_y = self.max_y = sy
        else:
            self.min_x = min(self.min_x, sx)
            self.max_x = max(self.max_x, sx)
            self.min_y = min(self.min_y, sy)
            self.max_y = max(self.max_y, sy)

    def line(self, x1, y1, x2, y2, cls):
        self.require(x1, y1)
        self.require(x2, y2)
        (sx1, sy1), (sx2, sy2) = self._point(x1, y1), self._point(x2, y2)
        self.commands.append('<line class="%s" x1="%s" y1="%s" x2="%s" y2="%s"/>' % (
            cls, _f(sx1), _f(sy1), _f(sx2), _f(sy2)))

    def arc(self, x1, y1, x2, y2, radius, upward, cls):
        """
        Circular arc from ``(x1, y1)`` to ``(x2, y2)``.
        ``upward`` selects the arc bulging up when drawn from left to right.
        """
        self.require(x1, y1)
        self.require(x2, y2)
        (sx1, sy1), (sx2, sy2) = self._point(x1, y1), self._point(x2, y2)
        r = float(radius) * self.scale
        sweep = 1 if upward else 0
        self.commands.append('<path class="%s" d="M %s %s A %s %s 0 0 %d %s %s"/>' % (
            cls, _f(sx1), _f(sy1), _f(r), _f(r), sweep, _f(sx2), _f(sy2)))

    def dot(self, x, y, radius, cls):
        self.require(x, y)
        sx, sy = self._point(x, y)
        self.commands.append('<circle class="%s" cx="%s" cy="%s" r="%s"/>' % (
            cls, _f(sx), _f(sy), _f(radius)))

    def text(self, x, y, content, cls=''):
        self.require(x, y)
        sx, sy = self._point(x, y)
        attr = ' class="%s"' % cls if cls else ''
        self.commands.append('<text%s x="%s" y="%s">%s</text>' % (attr, _f(sx), _f(sy), content))

    def render(self):
        pad = self.margin * self.scale
        if self.min_x is None:
            self.min_x = self.max_x = self.min_y = self.max_y = 0.0
        min_x = self.min_x - pad
        min_y = self.min_y - pad
        width = self.max_x - self.min_x + 2 * pad
        height = self.max_y - self.min_y + 2 * pad
        font_size = max(self.scale / 3.0, 8.0)
        out = [PREAMBLE % locals()]
        out.extend(item + '\n' for item in self.commands)
        out.append(POSTAMBLE)
        return ''.join(out)
