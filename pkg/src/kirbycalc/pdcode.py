"""Linking numbers and writhes from crossing lists.

A diagram here is just the list of its crossings, each recorded as
(over component, under component, sign).  That is all linking numbers and
blackboard framings need.  Signs follow the right-hand rule: a crossing is
+1 when, looking along the over-strand, the under-strand passes from right
to left (the standard positive crossing, as in the positive Hopf link).
"""
from dataclasses import dataclass
from typing import Tuple

from kirbycalc.intmat import IntegerMatrix


@dataclass(frozen=True)
class Crossing:
    over: int
    under: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class PlanarDiagram:
    n_components: int
    crossings: Tuple[Crossing, ...] = ()

    def __init__(self, n_components, crossings=()):
        crossings = tuple(c if isinstance(c, Crossing) else Crossing(*c) for c in crossings)
        for c in crossings:
            if not (1 <= c.over <= n_components and 1 <= c.under <= n_components):
                raise ValueError(f"crossing {c} refers to an unknown component")
        object.__setattr__(self, "n_components", n_components)
        object.__setattr__(self, "crossings", crossings)

    def mirror(self):
        return PlanarDiagram(self.n_components,
                             [Crossing(c.over, c.under, -c.sign) for c in self.crossings])

    def reverse_component(self, a):
        """Flip the orientation of component ``a``: mixed crossings change sign."""
        self._check(a)
        return PlanarDiagram(self.n_components, [
            Crossing(c.over, c.under, -c.sign if (c.over == a) != (c.under == a) else c.sign)
            for c in self.crossings])

    def add_kink(self, a, sign=1):
        self._check(a)
        return PlanarDiagram(self.n_components, self.crossings + (Crossing(a, a, sign),))

    def _check(self, a):
        if not 1 <= a <= self.n_components:
            raise ValueError(f"unknown component {a}")


def linking_number(pd, a, b):
    pd._check(a)
    pd._check(b)
    if a == b:
        raise ValueError("linking number needs two distinct components")
    total = sum(c.sign for c in pd.crossings if {c.over, c.under} == {a, b})
    if total % 2:
        raise ValueError(f"odd crossing-sign sum {total} between {a} and {b}: malformed diagram")
    return total // 2


def writhe(pd, a):
    pd._check(a)
    return sum(c.sign for c in pd.crossings if c.over == a and c.under == a)


def linking_matrix_from_pd(pd, components=None):
    """Writhes on the diagonal, pairwise linking numbers elsewhere.

    ``components`` restricts (and orders) the rows; default is all of them.
    """
    comps = list(range(1, pd.n_components + 1)) if components is None else list(components)
    rows = [[writhe(pd, a) if a == b else linking_number(pd, a, b) for b in comps]
            for a in comps]
    return IntegerMatrix(rows, len(comps), len(comps))


def parse_pd(text):
    n = None
    crossings = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "pd":
            if n is not None or len(tok) != 2 or not tok[1].startswith("components="):
                raise ValueError(f"line {lineno}: bad header")
            n = int(tok[1].split("=", 1)[1])
        elif tok[0] == "x":
            if n is None:
                raise ValueError("pd file must start with 'pd components=<k>'")
            if len(tok) != 4:
                raise ValueError(f"line {lineno}: crossing lines are 'x <over> <under> <+1|-1>'")
            crossings.append(Crossing(int(tok[1]), int(tok[2]), int(tok[3])))
        else:
            raise ValueError(f"line {lineno}: unexpected {tok[0]!r}")
    if n is None:
        raise ValueError("pd file must start with 'pd components=<k>'")
    return PlanarDiagram(n, crossings)


def format_pd(pd):
    lines = [f"pd components={pd.n_components}"]
    lines += [f"x {c.over} {c.under} {c.sign:+d}" for c in pd.crossings]
    return "\n".join(lines) + "\n"
