"""H_4(Z^r), identified with the fourth exterior power of Z^r.

Classes are stored as coefficients on increasing 4-subsets {i1<i2<i3<i4}
(1-based).  ``eta_of_ihx`` measures an IHX-move along an embedding of V_4
and ``plan_cancellation`` produces coordinate IHX-moves that cancel a
given class.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Tuple

from kirbycalc.homlink import EmbeddingShadow
from kirbycalc.intmat import IntegerMatrix

# Global sign of eta for a positively oriented coordinate embedding.  It
# depends on an orientation convention that is not pinned down; every
# contract below holds for either value.
ETA_SIGN = 1


@dataclass(frozen=True)
class Wedge4Class:
    r: int
    coeffs: Tuple[Tuple[Tuple[int, int, int, int], int], ...] = ()

    def __init__(self, r, coeffs=None):
        items = dict(coeffs or {})
        clean = {}
        for subset, c in items.items():
            subset = tuple(subset)
            if len(subset) != 4 or list(subset) != sorted(set(subset)):
                raise ValueError(f"{subset} is not a strictly increasing 4-subset")
            if subset[0] < 1 or subset[-1] > r:
                raise ValueError(f"{subset} out of range for r={r}")
            if c:
                clean[subset] = int(c)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "coeffs", tuple(sorted(clean.items())))

    @classmethod
    def zero(cls, r):
        return cls(r)

    @classmethod
    def basis(cls, r, subset, coeff=1):
        return cls(r, {tuple(subset): coeff})

    def as_dict(self) -> Dict[Tuple[int, ...], int]:
        return dict(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.r != other.r:
            raise ValueError(f"rank mismatch {self.r} vs {other.r}")

    def __add__(self, other):
        self._check(other)
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return Wedge4Class(self.r, d)

    def __neg__(self):
        return Wedge4Class(self.r, {k: -v for k, v in self.coeffs})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return Wedge4Class(self.r, {s: k * v for s, v in self.coeffs})

    def to_text(self):
        return format_wedge(self)


def add(a, b):
    return a + b


def negate(a):
    return -a


def is_zero(a):
    return a.is_zero()


def wedge4(y1, y2, y3, y4):
    """y1 ^ y2 ^ y3 ^ y4: coefficient on each 4-subset is the matching 4x4 minor."""
    vecs = [tuple(y) for y in (y1, y2, y3, y4)]
    r = len(vecs[0])
    if any(len(v) != r for v in vecs):
        raise ValueError("wedge4 needs four vectors of equal length")
    coeffs = {}
    for subset in combinations(range(r), 4):
        minor = IntegerMatrix([[v[i] for v in vecs] for i in subset], 4, 4).det()
        if minor:
            coeffs[tuple(i + 1 for i in subset)] = minor
    return Wedge4Class(r, coeffs)


def eta_of_ihx(sh, sign=1):
    """Class of an IHX-move along an embedding with F = (y1 y2 y3 y4)."""
    if sh.g != 4:
        raise ValueError("IHX obstruction needs a genus-4 shadow")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return wedge4(*(sh.F.col(j) for j in range(4))).scale(ETA_SIGN * sign)


def coordinate_shadow(r, subset):
    """Genus-4 shadow sending x_k to the coordinate vector e_{subset[k]}."""
    F = IntegerMatrix([[int(i + 1 == s) for s in subset] for i in range(r)], r, 4)
    return EmbeddingShadow(4, r, F, IntegerMatrix.zeros(4, 4), IntegerMatrix.zeros(4, 0))


def plan_cancellation(target):
    """Coordinate IHX-moves whose classes sum to -target."""
    plan = []
    for subset, c in target.coeffs:
        sh = coordinate_shadow(target.r, subset)
        # eta(sh, s) = ETA_SIGN * s * e_subset; we need -c e_subset in total
        s = -ETA_SIGN if c > 0 else ETA_SIGN
        plan += [(sh, s)] * abs(c)
    return plan


def total_eta(plan, r):
    out = Wedge4Class.zero(r)
    for sh, s in plan:
        out = out + eta_of_ihx(sh, s)
    return out


def parse_wedge(text):
    r = None
    coeffs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "wedge4":
            if len(tok) != 2 or not tok[1].startswith("r="):
                raise ValueError(f"line {lineno}: bad header")
            r = int(tok[1][2:])
        elif tok[0] == "coef":
            if r is None:
                raise ValueError("wedge file must start with 'wedge4 r=<r>'")
            if len(tok) != 6:
                raise ValueError(f"line {lineno}: expected 'coef i1 i2 i3 i4 <int>'")
            idx = tuple(int(t) for t in tok[1:5])
            if idx in coeffs:
                raise ValueError(f"line {lineno}: repeated subset {idx}")
            coeffs[idx] = int(tok[5])
        else:
            raise ValueError(f"line {lineno}: unexpected {tok[0]!r}")
    if r is None:
        raise ValueError("wedge file must start with 'wedge4 r=<r>'")
    return Wedge4Class(r, coeffs)


def format_wedge(w):
    lines = [f"wedge4 r={w.r}"]
    lines += [f"coef {' '.join(map(str, s))} {c}" for s, c in w.coeffs]
    return "\n".join(lines) + "\n"
