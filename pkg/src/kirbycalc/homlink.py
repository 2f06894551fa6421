"""Homological shadows of framed links in a 3-manifold M with H_1(M) = Z^r.

A ``HomFramedLink`` keeps, per component, its class in H_1(M) and the
symmetric linking matrix (framings on the diagonal).  Every move of the
calculus acts on this shadow.  Anything that lives only in pi_1 is lost:
for instance the pair-move and K_3-move components built from commutators
in the proof of the admissible calculus all carry class 0 here.

Since H_1(M) is torsion-free, Q-null-homologous and Z-null-homologous
coincide for these shadows.
"""
from dataclasses import dataclass
from typing import Tuple

from kirbycalc.intmat import AbelianGroup, IntegerMatrix, cokernel, format_matrix
from kirbycalc.movecalc import Slide, MoveSequence, evolve_lk


def _vec(v):
    return tuple(int(x) for x in v)


@dataclass(frozen=True)
class HomFramedLink:
    r: int
    classes: Tuple[Tuple[int, ...], ...]
    lk: IntegerMatrix

    def __init__(self, r, classes, lk):
        classes = tuple(_vec(c) for c in classes)
        if not isinstance(lk, IntegerMatrix):
            lk = IntegerMatrix(lk, len(classes), len(classes))
        if lk.shape != (len(classes), len(classes)):
            raise ValueError("linking matrix size does not match the component count")
        if not lk.is_symmetric():
            raise ValueError("linking matrix must be symmetric")
        if any(len(c) != r for c in classes):
            raise ValueError(f"component classes must have length r={r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "lk", lk)

    @classmethod
    def empty(cls, r):
        return cls(r, (), IntegerMatrix.zeros(0, 0))

    @property
    def n(self):
        return len(self.classes)

    @property
    def framings(self):
        return self.lk.diagonal()

    def to_text(self):
        return format_link(self)


@dataclass(frozen=True)
class EmbeddingShadow:
    """Homological data of an embedding f: V_g -> M minus L.

    F      r x g, classes in H_1(M) of the handle generators
    lam    g x g symmetric, linking form of pushed-off handle cores
    mu     g x n, linking of handle generators with the link components
    """
    g: int
    r: int
    F: IntegerMatrix
    lam: IntegerMatrix
    mu: IntegerMatrix

    def __post_init__(self):
        if self.F.shape != (self.r, self.g):
            raise ValueError(f"F must be {self.r}x{self.g}, got {self.F.shape}")
        if self.lam.shape != (self.g, self.g) or not self.lam.is_symmetric():
            raise ValueError(f"lambda must be a symmetric {self.g}x{self.g} matrix")
        if self.mu.rows != self.g:
            raise ValueError(f"mu must have {self.g} rows")

    @classmethod
    def trivial(cls, g, r, n=0):
        return cls(g, r, IntegerMatrix.zeros(r, g), IntegerMatrix.zeros(g, g),
                   IntegerMatrix.zeros(g, n))

    @property
    def n(self):
        return self.mu.cols

    def to_text(self):
        return format_shadow(self)


@dataclass(frozen=True)
class CurveSystemShadow:
    """m curves in V_g: classes in H_1(V_g) = Z^g and their internal linking
    (framings measured in the cylinder on the diagonal)."""
    g: int
    classes: Tuple[Tuple[int, ...], ...]
    internal_lk: IntegerMatrix

    def __init__(self, g, classes, internal_lk):
        classes = tuple(_vec(c) for c in classes)
        if not isinstance(internal_lk, IntegerMatrix):
            internal_lk = IntegerMatrix(internal_lk, len(classes), len(classes))
        if internal_lk.shape != (len(classes), len(classes)) or not internal_lk.is_symmetric():
            raise ValueError("internal linking must be a symmetric m x m matrix")
        if any(len(c) != g for c in classes):
            raise ValueError(f"curve classes must have length g={g}")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "internal_lk", internal_lk)

    @property
    def m(self):
        return len(self.classes)

    def to_text(self):
        return format_curves(self)


class MoveError(ValueError):
    """A move's precondition does not hold on the given link."""


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _matvec(A, v):
    return tuple(_dot(row, v) for row in A)


def _with(L, classes, lk_rows):
    n = len(classes)
    return HomFramedLink(L.r, classes, IntegerMatrix(lk_rows, n, n))


def append_components(L, classes, cross, block):
    """Append components with given classes, linking rows against the old
    components (``cross[k][i]``) and mutual block (``block[k][k']``)."""
    old = L.lk.tolist()
    n, m = L.n, len(classes)
    rows = [old[i] + [cross[k][i] for k in range(m)] for i in range(n)]
    rows += [list(cross[k]) + list(block[k]) for k in range(m)]
    return _with(L, L.classes + tuple(_vec(c) for c in classes), rows)


def remove_components(L, indices):
    """Drop the 1-based ``indices``."""
    drop = {i - 1 for i in indices}
    keep = [i for i in range(L.n) if i not in drop]
    lk = L.lk.submatrix(keep, keep)
    return HomFramedLink(L.r, [L.classes[i] for i in keep], lk)


def transport(cs, sh, L):
    """Append f(curves) to L, computing classes and linking bilinearly."""
    if sh.g != cs.g:
        raise ValueError(f"shadow genus {sh.g} vs curve system genus {cs.g}")
    if sh.r != L.r:
        raise ValueError(f"shadow rank {sh.r} vs link rank {L.r}")
    if sh.n != L.n:
        raise ValueError(f"shadow mu has {sh.n} columns, link has {L.n} components")
    lam_c = [_matvec(sh.lam, c) for c in cs.classes]
    classes = [_matvec(sh.F, c) for c in cs.classes]
    cross = [_matvec(sh.mu.T, c) for c in cs.classes]
    block = [[cs.internal_lk[k, kk] + _dot(cs.classes[k], lam_c[kk])
              for kk in range(cs.m)] for k in range(cs.m)]
    return append_components(L, classes, cross, block)


def _check_index(L, *idx):
    for i in idx:
        if not 1 <= i <= L.n:
            raise MoveError(f"component index {i} out of range 1..{L.n}")


def _is_isolated(L, i, exclude=()):
    others = [j for j in range(L.n) if j != i and j not in exclude]
    return all(L.lk[i, j] == 0 for j in others)


def stabilize(L, sign=1):
    if sign not in (1, -1):
        raise MoveError("stabilization sign must be +1 or -1")
    return append_components(L, [(0,) * L.r], [[0] * L.n], [[sign]])


def destabilize(L, i):
    _check_index(L, i)
    k = i - 1
    if any(L.classes[k]) or L.lk[k, k] not in (1, -1) or not _is_isolated(L, k):
        raise MoveError(f"component {i} is not an isolated +-1-framed null-homologous unknot")
    return remove_components(L, [i])


def handle_slide(L, i, j, eps=1):
    if i == j:
        raise MoveError("a component cannot slide over itself")
    _check_index(L, i, j)
    lk = evolve_lk(L.lk, MoveSequence(L.n, [Slide(i, j, eps)]))
    classes = list(L.classes)
    classes[i - 1] = tuple(a + eps * b for a, b in zip(classes[i - 1], classes[j - 1]))
    return HomFramedLink(L.r, classes, lk)


def band_slide(L, i, j):
    return handle_slide(handle_slide(L, i, j, 1), i, j, -1)


def apply_sequence(L, seq):
    """Apply a movecalc sequence (reorders, reorientations, slides)."""
    if seq.n != L.n:
        raise ValueError("sequence and link have different component counts")
    for move in seq:
        if move.kind == "W":
            L = handle_slide(L, move.i, move.j, move.eps)
        elif move.kind == "P":
            classes = list(L.classes)
            a, b = move.i - 1, move.j - 1
            classes[a], classes[b] = classes[b], classes[a]
            L = HomFramedLink(L.r, classes, evolve_lk(L.lk, MoveSequence(L.n, [move])))
        else:
            classes = list(L.classes)
            classes[move.i - 1] = tuple(-x for x in classes[move.i - 1])
            L = HomFramedLink(L.r, classes, evolve_lk(L.lk, MoveSequence(L.n, [move])))
    return L


def k3_add(L, framing, lk_row):
    """Add a null-homologous K with the given framing and linking row, plus
    its 0-framed meridian K'."""
    lk_row = list(lk_row)
    if len(lk_row) != L.n:
        raise MoveError(f"linking row must have {L.n} entries")
    zero = (0,) * L.r
    return append_components(L, [zero, zero], [lk_row, [0] * L.n],
                             [[framing, 1], [1, 0]])


def k3_remove(L, i, j):
    """Remove K = component i together with its meridian K' = component j."""
    _check_index(L, i, j)
    a, b = i - 1, j - 1
    if a == b:
        raise MoveError("K and its meridian must be different components")
    if any(L.classes[a]) or any(L.classes[b]):
        raise MoveError("K_3 components must be null-homologous")
    if L.lk[a, b] != 1 or L.lk[b, b] != 0 or not _is_isolated(L, b, exclude=(a,)):
        raise MoveError(f"component {j} is not a 0-framed meridian of component {i}")
    return remove_components(L, [i, j])


def pair_add(L):
    zero = (0,) * L.r
    return append_components(L, [zero, zero], [[0] * L.n, [0] * L.n], [[1, 0], [0, -1]])


def pair_remove(L, i, j):
    _check_index(L, i, j)
    a, b = i - 1, j - 1
    if a == b:
        raise MoveError("pair components must differ")
    if any(L.classes[a]) or any(L.classes[b]):
        raise MoveError("pair components must be null-homologous")
    if (L.lk[a, a], L.lk[b, b]) != (1, -1):
        raise MoveError("pair components must have framings +1 and -1")
    if not (_is_isolated(L, a) and _is_isolated(L, b)):
        raise MoveError("pair components must not link anything")
    return remove_components(L, [i, j])


def ihx_add(L, sh, block=None):
    if sh.g != 4:
        raise ValueError("an IHX-move needs a genus-4 embedding shadow")
    if block is None:
        from kirbycalc.constants import ihx_block
        block = ihx_block()
    return transport(block, sh, L)


def admissible_ihx_add(L, sh, block=None):
    if sh.g != 4:
        raise ValueError("an admissible IHX-move needs a genus-4 embedding shadow")
    if not is_admissible(L):
        raise MoveError("admissible IHX-move applied to a non-admissible link")
    if block is None:
        from kirbycalc.constants import ihx_adm_block
        block = ihx_adm_block()
    return transport(block, sh, L)


def lantern_swap(L, block_indices, sh, direction="K->K'", k=None, k_prime=None):
    """Replace the transported lantern block at ``block_indices`` (1-based)
    by the transport of the other side.  New components are appended."""
    if sh.g != 3:
        raise ValueError("a lantern-move needs a genus-3 embedding shadow")
    if k is None or k_prime is None:
        from kirbycalc.constants import lantern_k, lantern_k_prime
        k = lantern_k() if k is None else k
        k_prime = lantern_k_prime() if k_prime is None else k_prime
    if direction == "K->K'":
        src, dst = k, k_prime
    elif direction == "K'->K":
        src, dst = k_prime, k
    else:
        raise ValueError(f"unknown lantern direction {direction!r}")
    block_indices = list(block_indices)
    if len(block_indices) != src.m or len(set(block_indices)) != src.m:
        raise MoveError(f"block must list {src.m} distinct components")
    _check_index(L, *block_indices)
    for cs in (src, dst):
        if any(any(_matvec(sh.F, c)) for c in cs.classes):
            raise MoveError("lantern curves must be null-homologous in M")
    rest = remove_components(L, block_indices)
    expected = transport(src, sh, rest)
    # compare the block, in the given order, against the transported curves
    keep = [i for i in range(L.n) if i + 1 not in block_indices]
    actual_order = keep + [i - 1 for i in block_indices]
    actual = HomFramedLink(L.r, [L.classes[i] for i in actual_order],
                           L.lk.submatrix(actual_order, actual_order))
    if actual != expected:
        raise MoveError("indicated block is not the transported lantern link")
    return transport(dst, sh, rest)


def is_z_null(L):
    return all(not any(c) for c in L.classes)


def is_q_null(L):
    # H_1(M) is free abelian, so rational and integral null-homology agree
    return is_z_null(L)


def is_admissible(L):
    return (is_z_null(L) and L.lk.is_diagonal()
            and all(f in (1, -1) for f in L.lk.diagonal()))


def presentation_matrix(L):
    """n x (r + n) relation matrix [classes | lk]."""
    rows = [list(c) + list(L.lk.row(i)) for i, c in enumerate(L.classes)]
    return IntegerMatrix(rows, L.n, L.r + L.n)


def h1_of_surgery(L) -> AbelianGroup:
    """H_1 of the surgered manifold: Z^{r+n} modulo the rows of [classes | lk]."""
    return cokernel(presentation_matrix(L).T)


# -- text formats ---------------------------------------------------------

def _header_fields(line, keyword):
    tok = line.split()
    if not tok or tok[0] != keyword:
        raise ValueError(f"expected a '{keyword}' header")
    fields = {}
    for t in tok[1:]:
        key, _, val = t.partition("=")
        fields[key] = int(val)
    return fields


def _content_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _parse_comp_line(line, width, vec_key):
    # "<kw> <i> h=<ints...> f=<int>" with the vector possibly empty
    tok = line.split()
    idx = int(tok[1])
    vec_tok, frame = [], None
    mode = None
    for t in tok[2:]:
        if t.startswith(vec_key + "="):
            mode = "vec"
            rest = t[len(vec_key) + 1:]
            if rest:
                vec_tok.append(rest)
        elif t.startswith("f="):
            frame = int(t[2:])
            mode = None
        elif mode == "vec":
            vec_tok.append(t)
        else:
            raise ValueError(f"unexpected token {t!r}")
    if frame is None or len(vec_tok) != width:
        raise ValueError(f"bad component line {line!r}")
    return idx, tuple(int(x) for x in vec_tok), frame


def _parse_components(lines, count, width, kw, vec_key):
    classes = [None] * count
    lk = [[0] * count for _ in range(count)]
    for line in lines:
        head = line.split()[0]
        if head == kw:
            i, vec, f = _parse_comp_line(line, width, vec_key)
            if not 1 <= i <= count or classes[i - 1] is not None:
                raise ValueError(f"bad or repeated component index {i}")
            classes[i - 1] = vec
            lk[i - 1][i - 1] = f
        elif head == "lk":
            _, a, b, v = line.split()
            a, b, v = int(a), int(b), int(v)
            if not (1 <= a < b <= count):
                raise ValueError(f"lk line needs 1 <= i < j <= {count}")
            lk[a - 1][b - 1] = lk[b - 1][a - 1] = v
        else:
            raise ValueError(f"unexpected line {line!r}")
    if any(c is None for c in classes):
        raise ValueError("missing component line")
    return classes, lk


def parse_link(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ValueError("empty link file")
    hdr = _header_fields(lines[0], "homlink")
    r, n = hdr["r"], hdr["n"]
    classes, lk = _parse_components(lines[1:], n, r, "comp", "h")
    return HomFramedLink(r, classes, IntegerMatrix(lk, n, n))


def _format_components(kw, vec_key, classes, lk):
    out = []
    for i, c in enumerate(classes):
        vec = " ".join(str(x) for x in c)
        out.append(f"{kw} {i + 1} {vec_key}={vec} f={lk[i, i]}")
    n = len(classes)
    for i in range(n):
        for j in range(i + 1, n):
            if lk[i, j]:
                out.append(f"lk {i + 1} {j + 1} {lk[i, j]}")
    return out


def format_link(L):
    lines = [f"homlink r={L.r} n={L.n}"] + _format_components("comp", "h", L.classes, L.lk)
    return "\n".join(lines) + "\n"


def parse_curves(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ValueError("empty curve-system file")
    hdr = _header_fields(lines[0], "curves")
    m, g = hdr["m"], hdr["g"]
    classes, lk = _parse_components(lines[1:], m, g, "curve", "c")
    return CurveSystemShadow(g, classes, IntegerMatrix(lk, m, m))


def format_curves(cs):
    lines = [f"curves m={cs.m} g={cs.g}"] + _format_components("curve", "c", cs.classes,
                                                               cs.internal_lk)
    return "\n".join(lines) + "\n"


def parse_shadow(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ValueError("empty shadow file")
    hdr = _header_fields(lines[0], "shadow")
    g, r = hdr["g"], hdr["r"]
    blocks = {}
    tokens = " ".join(lines[1:]).split()
    pos = 0
    while pos < len(tokens):
        name = tokens[pos]
        if name not in ("F", "lambda", "mu"):
            raise ValueError(f"unknown shadow block {name!r}")
        rows, cols = int(tokens[pos + 1]), int(tokens[pos + 2])
        body = [int(t) for t in tokens[pos + 3:pos + 3 + rows * cols]]
        if len(body) != rows * cols:
            raise ValueError(f"truncated {name} block")
        blocks[name] = IntegerMatrix([body[i * cols:(i + 1) * cols] for i in range(rows)],
                                     rows, cols)
        pos += 3 + rows * cols
    F = blocks.get("F", IntegerMatrix.zeros(r, g))
    lam = blocks.get("lambda", IntegerMatrix.zeros(g, g))
    mu = blocks.get("mu", IntegerMatrix.zeros(g, 0))
    return EmbeddingShadow(g, r, F, lam, mu)


def format_shadow(sh):
    return (f"shadow g={sh.g} r={sh.r}\n"
            f"F\n{format_matrix(sh.F)}lambda\n{format_matrix(sh.lam)}mu\n{format_matrix(sh.mu)}")
