"""Figure-dependent constants, derived from encoded planar diagrams.

Each constant is a curve system in a handlebody V_g.  Its diagram lists the
g strands (the closed-up cores whose meridians generate H_1 V_g) followed by
the curves.  The class of a curve is its vector of linking numbers with the
strands, and its internal linking matrix is read off the curve components.

The derived systems are also stored under ``data/constants``; ``provenance``
re-derives each one and compares the formatted text byte for byte.
"""
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from kirbycalc.homlink import CurveSystemShadow, format_curves, parse_curves
from kirbycalc.intmat import IntegerMatrix
from kirbycalc.movecalc import evolve_lk, parse_sequence
from kirbycalc.pdcode import linking_matrix_from_pd, linking_number, parse_pd


@dataclass(frozen=True)
class Derivation:
    name: str
    pd_file: str
    strands: tuple
    curves: tuple


DERIVATIONS = {d.name: d for d in (
    Derivation("ihx", "ihx.pd", (1, 2, 3, 4), tuple(range(5, 11))),
    Derivation("ihx_adm", "ihx_adm.pd", (1, 2, 3, 4), tuple(range(5, 14))),
    Derivation("lantern_k", "lantern_k.pd", (1, 2, 3), (4, 5, 6, 7)),
    Derivation("lantern_kprime", "lantern_kprime.pd", (1, 2, 3), (4, 5, 6)),
    Derivation("y2_assoc_a", "y2_assoc_a.pd", (), (1, 2)),
    Derivation("y2_assoc_b", "y2_assoc_b.pd", (), (1, 2, 3)),
)}


def data_text(*parts):
    return resources.files("kirbycalc").joinpath("data", *parts).read_text()


def derive_curves(pd, strands, curves):
    classes = [[linking_number(pd, k, s) for s in strands] for k in curves]
    return CurveSystemShadow(len(strands), classes, linking_matrix_from_pd(pd, curves))


def derive(name):
    d = DERIVATIONS[name]
    return derive_curves(parse_pd(data_text("pd", d.pd_file)), d.strands, d.curves)


def stored_text(name):
    return data_text("constants", f"{name}.curves")


@lru_cache(maxsize=None)
def stored(name):
    return parse_curves(stored_text(name))


def ihx_block():
    return stored("ihx")


def ihx_adm_block():
    return stored("ihx_adm")


def lantern_k():
    return stored("lantern_k")


def lantern_k_prime():
    return stored("lantern_kprime")


def y2_assoc_a():
    return stored("y2_assoc_a")


def y2_assoc_b():
    return stored("y2_assoc_b")


def provenance():
    """[(name, derived text == stored text)] for every shipped constant."""
    return [(name, format_curves(derive(name)) == stored_text(name)) for name in DERIVATIONS]


def clasper_adm_sequence():
    return parse_sequence(data_text("moves", "clasper_adm.seq"))


def clasper_adm_certificate():
    """Linking-matrix shadow of passing from L_T to L_T^adm.

    L_T gets a (-1)-framed unknot inserted as the middle component, then
    the shipped slide sequence is applied.  Returns (result, target) where
    the target is the derived L_T^adm block; they should agree and be
    diagonal with entries +-1.
    """
    a = derive("y2_assoc_a").internal_lk
    start = IntegerMatrix([[a[0, 0], 0, a[0, 1]],
                           [0, -1, 0],
                           [a[1, 0], 0, a[1, 1]]])
    return evolve_lk(start, clasper_adm_sequence()), derive("y2_assoc_b").internal_lk


def clasper_adm_holds():
    result, target = clasper_adm_certificate()
    return (result == target and result.is_diagonal()
            and all(abs(x) == 1 for x in result.diagonal()))


def block_consistency():
    """The IHX blocks are three copies of the single-clasper blocks."""
    out = {}
    for big, small in (("ihx", "y2_assoc_a"), ("ihx_adm", "y2_assoc_b")):
        s = derive(small).internal_lk
        b = derive(big)
        out[big] = (b.internal_lk == s.block_sum(s).block_sum(s)
                    and all(not any(c) for c in b.classes))
    return out
