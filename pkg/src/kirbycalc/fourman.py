"""Homology of a closed 4-manifold from a Kirby-diagram skeleton.

Only the 2-handle attaching words are known (as words in the dotted-circle
generators), so H_2, H_3, H_4 come from Poincare duality and the Euler
characteristic.  That is valid for closed, connected, orientable inputs
only, and ``closed4_homology`` refuses anything else it can detect.
"""
from dataclasses import dataclass
from typing import Tuple

from kirbycalc.braidclasp import FreeWord
from kirbycalc.intmat import AbelianGroup, IntegerMatrix, cokernel


@dataclass(frozen=True)
class KirbySkeleton:
    handles: Tuple[int, int, int, int, int]
    words: Tuple[FreeWord, ...] = ()

    def __init__(self, handles, words=()):
        handles = tuple(int(h) for h in handles)
        if len(handles) != 5 or any(h < 0 for h in handles):
            raise ValueError("need five non-negative handle counts")
        words = tuple(w if isinstance(w, FreeWord) else FreeWord(handles[1], w) for w in words)
        if len(words) != handles[2]:
            raise ValueError(f"{handles[2]} 2-handles but {len(words)} attaching words")
        if any(w.n != handles[1] for w in words):
            raise ValueError("attaching words must be over the 1-handle generators")
        object.__setattr__(self, "handles", handles)
        object.__setattr__(self, "words", words)

    @property
    def euler_characteristic(self):
        h0, h1, h2, h3, h4 = self.handles
        return h0 - h1 + h2 - h3 + h4


def boundary2(sk):
    """h1 x h2 matrix; column k holds the exponent sums of the k-th word."""
    h1, h2 = sk.handles[1], sk.handles[2]
    cols = [w.exponent_sums() for w in sk.words]
    return IntegerMatrix([[cols[k][i] for k in range(h2)] for i in range(h1)], h1, h2)


def pi1_abelianization(sk):
    return cokernel(boundary2(sk))


def closed4_homology(sk):
    """(H_0, ..., H_4) of the closed orientable 4-manifold with this skeleton."""
    h0, _, _, _, h4 = sk.handles
    if h0 != 1 or h4 != 1:
        raise ValueError("closed connected input needs exactly one 0-handle and one 4-handle")
    H1 = pi1_abelianization(sk)
    b1 = H1.free_rank
    b2 = sk.euler_characteristic - 2 + 2 * b1
    if b2 < 0:
        raise ValueError(f"handle counts give b2 = {b2}; not a closed orientable 4-manifold")
    H2 = AbelianGroup(b2, H1.torsion)
    H3 = AbelianGroup(b1)
    groups = (AbelianGroup(1), H1, H2, H3, AbelianGroup(1))
    assert groups[1].free_rank == groups[3].free_rank
    return groups


def parse_skeleton(text):
    lines = [l.split("#", 1)[0].strip() for l in text.splitlines()]
    lines = [l for l in lines if l]
    if not lines:
        raise ValueError("empty skeleton file")
    tok = lines[0].split()
    if tok[0] != "kirby4" or len(tok) != 6 or not tok[1].startswith("h="):
        raise ValueError("skeleton must start with 'kirby4 h=<h0> <h1> <h2> <h3> <h4>'")
    handles = [int(tok[1][2:])] + [int(t) for t in tok[2:]]
    words = []
    for line in lines[1:]:
        tok = line.split()
        if tok[0] != "rel":
            raise ValueError(f"unexpected line {line!r}")
        words.append(FreeWord(handles[1], [int(t) for t in tok[1:]]))
    return KirbySkeleton(handles, words)


def format_skeleton(sk):
    lines = ["kirby4 h=" + " ".join(map(str, sk.handles))]
    lines += ["rel " + " ".join(f"{a:+d}" for a in w.letters) for w in sk.words]
    return "\n".join(lines) + "\n"
