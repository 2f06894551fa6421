"""Sequences of elementary moves on ordered, oriented framed links.

A move sequence S = (e_1, ..., e_k) is sent to the matrix
phi(S) = x_k ... x_2 x_1, where x_m is the matrix of the m-th move.  The
first move is therefore the *rightmost* factor.

Move matrices:

* ``Reorder(i, j)``  -> P_{i,j}, swap of basis vectors i and j
* ``Reorient(i)``    -> Q_i = I - 2 E_{i,i}
* ``Slide(i, j, e)`` -> W_{i,j}^e = I + e E_{i,j}; component i slides over j

Worked example pinning the slide convention (component 1 slides over
component 2 in a link with linking matrix diag(1, -1)):

>>> from kirbycalc.intmat import IntegerMatrix
>>> seq = MoveSequence(2, [Slide(1, 2, +1)])
>>> phi(seq)
IntegerMatrix([[1, 1], [0, 1]])
>>> evolve_lk(IntegerMatrix.diag([1, -1]), seq)
IntegerMatrix([[0, -1], [-1, -1]])
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from kirbycalc.intmat import (
    IntegerMatrix, SignatureType, ipq, perm_matrix, reflection_matrix, slide_matrix,
)

# Abstract D_{2,2} word on slots 1..4, listed in application order (the
# rightmost factor of W21^-1 W31^-1 W24 W34 W43^-1 W13^-1 W42 W12 first).
D22_WORD = ((1, 2, 1), (4, 2, 1), (1, 3, -1), (4, 3, -1),
            (3, 4, 1), (2, 4, 1), (3, 1, -1), (2, 1, -1))


@dataclass(frozen=True)
class ElementaryMove:
    kind: str
    i: int
    j: Optional[int] = None
    eps: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("P", "Q", "W"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.i < 1 or (self.j is not None and self.j < 1):
            raise ValueError("move indices are 1-based")
        if self.kind in ("P", "W"):
            if self.j is None or self.i == self.j:
                raise ValueError(f"{self.kind}-move needs two distinct indices")
        if self.kind == "W" and self.eps not in (1, -1):
            raise ValueError("slide sign must be +1 or -1")

    def max_index(self):
        return max(self.i, self.j or 0)

    def matrix(self, n):
        if self.max_index() > n:
            raise ValueError(f"move {self} out of range for {n} components")
        if self.kind == "P":
            return perm_matrix(n, self.i, self.j)
        if self.kind == "Q":
            return reflection_matrix(n, self.i)
        return slide_matrix(n, self.i, self.j, self.eps)

    def reverse(self):
        if self.kind == "W":
            return ElementaryMove("W", self.i, self.j, -self.eps)
        return self

    def __str__(self):
        if self.kind == "P":
            return f"P {self.i} {self.j}"
        if self.kind == "Q":
            return f"Q {self.i}"
        return f"W{'+' if self.eps > 0 else '-'} {self.i} {self.j}"


def Reorder(i, j):
    return ElementaryMove("P", i, j)


def Reorient(i):
    return ElementaryMove("Q", i)


def Slide(i, j, eps=1):
    return ElementaryMove("W", i, j, eps)


@dataclass(frozen=True)
class MoveSequence:
    n: int
    moves: Tuple[ElementaryMove, ...] = ()

    def __init__(self, n, moves=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "moves", tuple(moves))
        for m in self.moves:
            if m.max_index() > n:
                raise ValueError(f"move {m} out of range for {n} components")

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def then(self, other):
        """Concatenation: self first, then other."""
        if other.n != self.n:
            raise ValueError("cannot concatenate sequences on different component counts")
        return MoveSequence(self.n, self.moves + other.moves)

    def to_text(self):
        return format_sequence(self)


def phi(seq):
    out = IntegerMatrix.identity(seq.n)
    for move in seq:
        out = move.matrix(seq.n) @ out
    return out


def reverse(seq):
    return MoveSequence(seq.n, [m.reverse() for m in reversed(seq.moves)])


def evolve_lk(lk, seq):
    if not lk.is_symmetric():
        raise ValueError("linking matrix must be symmetric")
    if lk.rows != seq.n:
        raise ValueError(f"{lk.rows}x{lk.rows} linking matrix vs {seq.n}-component sequence")
    T = phi(seq)
    return T @ lk @ T.T


def is_band_slide_realizable(seq):
    return phi(seq) == IntegerMatrix.identity(seq.n)


def admissible_type(lk) -> Optional[SignatureType]:
    """(p, q) when lk is exactly I_p + (-I_q), else None."""
    if not lk.is_symmetric() or not lk.is_diagonal():
        return None
    d = lk.diagonal()
    p = 0
    while p < len(d) and d[p] == 1:
        p += 1
    if any(x != -1 for x in d[p:]):
        return None
    sig = SignatureType(p, len(d) - p)
    return sig if lk == ipq(sig) else None


def normalize_admissible(lk):
    """Reorders sorting a diagonal +-1 matrix into I_{p,q} form.

    Returns (MoveSequence, SignatureType) or None.
    """
    if not lk.is_symmetric() or not lk.is_diagonal():
        return None
    d = list(lk.diagonal())
    if any(x not in (1, -1) for x in d):
        return None
    moves = []
    # selection sort: bring every +1 forward, recording each swap
    target = 0
    for k in range(len(d)):
        if d[k] == 1:
            if k != target:
                d[k], d[target] = d[target], d[k]
                moves.append(Reorder(target + 1, k + 1))
            target += 1
    return MoveSequence(len(d), moves), SignatureType(target, len(d) - target)


def expand_d_move(n, slots, eps=1):
    """The eight slides realising D_{2,2} (eps=+1) or its inverse (eps=-1).

    ``slots`` = (a1, a2, b1, b2) receive abstract indices 1, 2, 3, 4.
    """
    if len(slots) != 4 or len(set(slots)) != 4:
        raise ValueError("D-move needs four distinct slots")
    if any(s < 1 or s > n for s in slots):
        raise ValueError(f"D-move slots {slots} out of range for n={n}")
    if eps not in (1, -1):
        raise ValueError("D-move sign must be +1 or -1")
    moves = [Slide(slots[i - 1], slots[j - 1], e) for i, j, e in D22_WORD]
    seq = MoveSequence(n, moves)
    return seq if eps == 1 else reverse(seq)


def parse_sequence(text):
    """Parse the move-sequence text format.

    Header ``n <count>``; then one move per line: ``P i j``, ``Q i``,
    ``W+ i j``, ``W- i j``, ``BS i j`` (band-slide macro),
    ``D+ a1 a2 b1 b2`` / ``D- a1 a2 b1 b2``.  ``#`` starts a comment.
    """
    n = None
    moves = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head, args = tok[0], tok[1:]
        try:
            vals = [int(a) for a in args]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer argument in {raw!r}") from None
        if head == "n":
            if n is not None or len(vals) != 1:
                raise ValueError(f"line {lineno}: bad header")
            n = vals[0]
            continue
        if n is None:
            raise ValueError("move sequence must start with 'n <count>'")
        arity = {"P": 2, "Q": 1, "W+": 2, "W-": 2, "BS": 2, "D+": 4, "D-": 4}.get(head)
        if arity is None:
            raise ValueError(f"line {lineno}: unknown move {head!r}")
        if len(vals) != arity:
            raise ValueError(f"line {lineno}: {head} takes {arity} indices")
        if head == "P":
            moves.append(Reorder(*vals))
        elif head == "Q":
            moves.append(Reorient(*vals))
        elif head in ("W+", "W-"):
            moves.append(Slide(vals[0], vals[1], 1 if head == "W+" else -1))
        elif head == "BS":
            moves += [Slide(vals[0], vals[1], 1), Slide(vals[0], vals[1], -1)]
        else:
            moves += expand_d_move(n, vals, 1 if head == "D+" else -1).moves
    if n is None:
        raise ValueError("move sequence must start with 'n <count>'")
    return MoveSequence(n, moves)


def format_sequence(seq):
    return "".join([f"n {seq.n}\n"] + [f"{m}\n" for m in seq])
