"""Exact integer matrices, Smith normal form, cokernels and O(p,q;Z).

Everything here works over Python ints, so entries never overflow and no
floating point is involved.
"""
from itertools import combinations
from typing import NamedTuple


class IntegerMatrix:
    """Immutable integer matrix stored row-major.

    >>> IntegerMatrix([[1, 2], [3, 4]]) @ IntegerMatrix.identity(2)
    IntegerMatrix([[1, 2], [3, 4]])
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, rows=None, cols=None):
        data = [tuple(int(x) for x in row) for row in data]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError("ragged or mis-sized matrix data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", tuple(data))

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diag(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def unit(cls, n, i, j):
        """The matrix unit E_{i,j} (1-based indices)."""
        return cls([[int(r == i - 1 and c == j - 1) for c in range(n)] for r in range(n)], n, n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return tuple(x for row in self._data for x in row)

    def tolist(self):
        return [list(row) for row in self._data]

    def row(self, i):
        return self._data[i]

    def col(self, j):
        return tuple(row[j] for row in self._data)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()})"

    @property
    def T(self):
        if self.rows == 0:
            return IntegerMatrix([() for _ in range(self.cols)], self.cols, 0)
        return IntegerMatrix(list(zip(*self._data)), self.cols, self.rows)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        return IntegerMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows, self.cols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return IntegerMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            self.rows, self.cols)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        return IntegerMatrix([[k * a for a in r] for r in self._data], self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and self == self.T

    def is_diagonal(self):
        return all(self._data[i][j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self):
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    def det(self):
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self):
        return self.is_square() and abs(self.det()) == 1

    def inverse(self):
        """Exact inverse of a unimodular matrix; anything else raises."""
        if not self.is_unimodular():
            raise ValueError("only unimodular integer matrices have integer inverses")
        dec = smith_normal_form(self)
        # U A V = I  =>  A^{-1} = V U
        return dec.V @ dec.U

    def block_sum(self, other):
        rows = [list(r) + [0] * other.cols for r in self._data]
        rows += [[0] * self.cols + list(r) for r in other._data]
        return IntegerMatrix(rows, self.rows + other.rows, self.cols + other.cols)

    def submatrix(self, row_idx, col_idx):
        return IntegerMatrix([[self._data[i][j] for j in col_idx] for i in row_idx],
                             len(row_idx), len(col_idx))

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return IntegerMatrix([list(r) + list(s) for r, s in zip(self._data, other._data)],
                             self.rows, self.cols + other.cols)

    def to_text(self):
        return format_matrix(self)


def mat_mul(A, B):
    if A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    Bt = list(zip(*B._data)) if B.rows else [()] * B.cols
    return IntegerMatrix([[sum(a * b for a, b in zip(r, c)) for c in Bt] for r in A._data],
                         A.rows, B.cols)


class SignatureType(NamedTuple):
    p: int
    q: int

    @property
    def n(self):
        return self.p + self.q


def as_signature(sig):
    p, q = sig
    if p < 0 or q < 0:
        raise ValueError("signature counts must be non-negative")
    return SignatureType(int(p), int(q))


class SmithDecomposition(NamedTuple):
    """U @ A @ V == S with U, V unimodular."""
    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix


class AbelianGroup(NamedTuple):
    free_rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.insert(0, "Z")
        elif self.free_rank > 1:
            parts.insert(0, f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion


def smith_normal_form(A):
    """Smith normal form with transforms.

    The diagonal of S is non-negative and each entry divides the next, which
    makes S unique.
    """
    m, n = A.shape
    S = A.tolist()
    U = IntegerMatrix.identity(m).tolist()
    V = IntegerMatrix.identity(n).tolist()

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        S[dst] = [a + k * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for M in (S, V):
            for r in M:
                r[dst] += k * r[src]

    def nearest(a, b):
        # quotient rounded to nearest, so remainders are at most |b|/2
        q, r = divmod(a, b)  # r has the sign of b
        return q + 1 if 2 * abs(r) > abs(b) else q

    for t in range(min(m, n)):
        while True:
            # pivot: smallest non-zero magnitude in the trailing block
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -nearest(S[i][t], p))
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -nearest(S[t][j], p))
            if any(S[i][t] for i in range(t + 1, m)) or any(S[t][j] for j in range(t + 1, n)):
                continue  # a smaller remainder exists; re-pivot on it
            # divisibility: pivot must divide the whole trailing block
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return SmithDecomposition(IntegerMatrix(U, m, m), IntegerMatrix(S, m, n),
                              IntegerMatrix(V, n, n))


def cokernel(A):
    """Z^rows / A Z^cols as an AbelianGroup."""
    S = smith_normal_form(A).S
    d = [x for x in S.diagonal() if x != 0]
    return AbelianGroup(A.rows - len(d), tuple(x for x in d if x > 1))


def ipq(sig):
    sig = as_signature(sig)
    return IntegerMatrix.diag([1] * sig.p + [-1] * sig.q)


def is_in_opq(T, sig):
    """True iff T I_{p,q} T^t == I_{p,q} (which forces det T = +-1)."""
    sig = as_signature(sig)
    if T.shape != (sig.n, sig.n):
        raise ValueError(f"matrix of shape {T.shape} cannot lie in O{tuple(sig)}")
    form = ipq(sig)
    return T @ form @ T.T == form and abs(T.det()) == 1


def perm_matrix(n, i, j):
    """P_{i,j}: the transposition of basis vectors i and j (1-based)."""
    rows = IntegerMatrix.identity(n).tolist()
    rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
    return IntegerMatrix(rows, n, n)


def reflection_matrix(n, i):
    """Q_i = I - 2 E_{i,i}."""
    return IntegerMatrix.identity(n) - IntegerMatrix.unit(n, i, i).scale(2)


def slide_matrix(n, i, j, eps):
    """W_{i,j}^eps = I + eps E_{i,j}."""
    if i == j:
        raise ValueError("slide indices must differ")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return IntegerMatrix.identity(n) + IntegerMatrix.unit(n, i, j).scale(eps)


def _require_wall_range(sig):
    sig = as_signature(sig)
    if sig.p < 2 or sig.q < 2:
        raise ValueError(f"Wall's generators need p >= 2 and q >= 2, got {tuple(sig)}")
    return sig


def d_pq(sig):
    """The matrix D_{p,q}, acting on indices 1, 2, p+1, p+2."""
    p, q = _require_wall_range(sig)
    n = p + q
    idx = (0, 1, p, p + 1)
    core = ((1, 1, -1, 0),
            (-1, 1, 0, 1),
            (-1, 0, 1, 1),
            (0, 1, -1, 1))
    rows = IntegerMatrix.identity(n).tolist()
    for a, ra in zip(idx, core):
        for b, v in zip(idx, ra):
            rows[a][b] = v
    return IntegerMatrix(rows, n, n)


# Standalone D_{2,2} display with entry (1,1) = -1.  Kept only so the
# discrepancy with the block form and with the W-word can be reported.
D22_DISPLAY_VARIANT = IntegerMatrix([[-1, 1, -1, 0],
                                     [-1, 1, 0, 1],
                                     [-1, 0, 1, 1],
                                     [0, 1, -1, 1]])


def wall_generators(sig):
    """Wall's generating set of O(p,q;Z) for p, q >= 2, as (name, matrix) pairs."""
    p, q = _require_wall_range(sig)
    n = p + q
    gens = []
    for i, j in combinations(range(1, p + 1), 2):
        gens.append((f"P{i},{j}", perm_matrix(n, i, j)))
    for i, j in combinations(range(p + 1, n + 1), 2):
        gens.append((f"P{i},{j}", perm_matrix(n, i, j)))
    for i in range(1, n + 1):
        gens.append((f"Q{i}", reflection_matrix(n, i)))
    gens.append(("D", d_pq((p, q))))
    return gens


def slide_generators(n):
    """All W_{i,j}^{+-1} on n indices as (name, matrix) pairs; closed under inverses."""
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                for eps in (1, -1):
                    out.append((f"W{i},{j}{'+' if eps > 0 else '-'}", slide_matrix(n, i, j, eps)))
    return out


def _key(entries, cap):
    return bytes(e + cap for e in entries)


def _sparse(M):
    return [[(k, v) for k, v in enumerate(row) if v] for row in M]


def _left_mul(sparse_g, flat, n):
    # (g @ M) with M given as a flat row-major tuple
    out = []
    for row in sparse_g:
        acc = [0] * n
        for k, v in row:
            base = k * n
            for c in range(n):
                acc[c] += v * flat[base + c]
        out.extend(acc)
    return tuple(out)


def bfs_decompose_opq(T, sig, generators, max_len, entry_cap=64, exact_length=False):
    """Search for a word g_k ... g_1 over ``generators`` whose product is T.

    ``generators`` is a list of (name, matrix) pairs that must contain the
    inverse of each of its members.  The search runs breadth-first from I
    and from T at once, keyed on a byte encoding of the entries, and is
    bounded by ``max_len`` and by ``entry_cap`` on entry magnitudes.

    By default the shortest word is returned.  With ``exact_length=True``
    only words of length exactly ``max_len`` are considered among freely
    reduced words (no generator next to its inverse); layers are not
    de-duplicated against each other, so non-geodesic words are found.

    Returns the generator names in application order (g_1 first), or None.
    """
    if not is_in_opq(T, sig):
        raise ValueError("target is not in O(p,q;Z)")
    mats = [g for _, g in generators]
    inv_index = []
    for g in mats:
        try:
            inv_index.append(mats.index(g.inverse()))
        except ValueError:
            raise ValueError("generator list is not closed under inverses") from None
    n = T.rows
    if max(map(abs, T.entries), default=0) >= entry_cap:
        return None
    fwd_gens = [_sparse(g) for g in mats]
    bwd_gens = [fwd_gens[inv_index[i]] for i in range(len(mats))]
    start = IntegerMatrix.identity(n).entries
    goal = T.entries
    if exact_length:
        found = _meet_exact(start, goal, fwd_gens, bwd_gens, inv_index, n, max_len, entry_cap)
    else:
        found = _meet_shortest(start, goal, fwd_gens, bwd_gens, n, max_len, entry_cap)
    if found is None:
        return None
    return [generators[gi][0] for gi in found]


def _step(frontier, gens, n, cap, layer, stop_keys=None):
    # layer[key] = (parent_key, gen_index); returns a meeting key if one is hit
    nxt = []
    for state in frontier:
        skey = _key(state, cap)
        for gi, g in enumerate(gens):
            new = _left_mul(g, state, n)
            if max(map(abs, new)) >= cap:
                continue
            key = _key(new, cap)
            if key in layer:
                continue
            layer[key] = (skey, gi)
            nxt.append(new)
            if stop_keys is not None and key in stop_keys:
                return nxt, key
    return nxt, None


def _meet_shortest(start, goal, fwd_gens, bwd_gens, n, max_len, cap):
    if start == goal:
        return []
    # one shared dictionary per side: every state keeps its first parent
    fwd = {_key(start, cap): None}
    bwd = {_key(goal, cap): None}
    ff, bf = [start], [goal]
    df = db = 0
    meet = None
    while df + db < max_len and (ff or bf):
        if ff and (df <= db or not bf):
            ff, meet = _step(ff, fwd_gens, n, cap, fwd, bwd)
            df += 1
        else:
            bf, meet = _step(bf, bwd_gens, n, cap, bwd, fwd)
            db += 1
        if meet is not None:
            break
    if meet is None:
        return None

    def walk(table, key):
        out = []
        while table[key] is not None:
            parent, gi = table[key]
            out.append(gi)
            key = parent
        return out

    return walk(fwd, meet)[::-1] + walk(bwd, meet)


def _meet_exact(start, goal, fwd_gens, bwd_gens, inv_index, n, length, cap):
    # Layered search over freely reduced words of exactly ``length`` letters.
    # A layer maps key -> {last_gen: (parent_key, parent_last_gen)}.
    half_f = (length + 1) // 2
    half_b = length - half_f

    def grow(origin, gens, depth):
        layers = []
        frontier = {_key(origin, cap): (origin, {None: None})}
        for _ in range(depth):
            layer = {}
            for skey, (state, lasts) in frontier.items():
                for gi, g in enumerate(gens):
                    if all(last is not None and inv_index[gi] == last for last in lasts):
                        continue
                    new = _left_mul(g, state, n)
                    if max(map(abs, new)) >= cap:
                        continue
                    key = _key(new, cap)
                    entry = layer.setdefault(key, (new, {}))
                    if gi not in entry[1]:
                        parent_last = next(l for l in lasts if l is None or inv_index[gi] != l)
                        entry[1][gi] = (skey, parent_last)
            layers.append(layer)
            frontier = layer
        return layers, frontier

    fwd_layers, f_last = grow(start, fwd_gens, half_f)
    bwd_layers, b_last = grow(goal, bwd_gens, half_b)

    def path(layers, key, last):
        out = []
        for layer in reversed(layers):
            parent, parent_last = layer[key][1][last]
            out.append(last)
            key, last = parent, parent_last
        return out

    for key, (_, f_lasts) in f_last.items():
        if key not in b_last:
            continue
        for fl in f_lasts:
            for bl in b_last[key][1]:
                # forward ends with g_fl; backward's first step used the inverse
                # of g_bl, so the word continues with g_bl
                if fl is not None and bl is not None and inv_index[fl] == bl:
                    continue
                first = path(fwd_layers, key, fl)[::-1] if fwd_layers else []
                second = path(bwd_layers, key, bl) if bwd_layers else []
                return first + second
    return None


def evaluate_word(names, generators, n):
    """Product g_k ... g_1 for names listed in application order."""
    table = dict(generators)
    out = IntegerMatrix.identity(n)
    for name in names:
        out = table[name] @ out
    return out


def parse_matrix(text):
    """Parse ``<rows> <cols>`` followed by the entries, whitespace-insensitive.

    ``#`` starts a comment running to the end of the line.
    """
    tokens = " ".join(line.split("#", 1)[0] for line in text.splitlines()).split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a '<rows> <cols>' header")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in matrix text: {exc}") from None
    rows, cols = values[0], values[1]
    if rows < 0 or cols < 0:
        raise ValueError("negative matrix dimensions")
    body = values[2:]
    if len(body) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(body)}")
    return IntegerMatrix([body[i * cols:(i + 1) * cols] for i in range(rows)], rows, cols)


def format_matrix(A):
    lines = [f"{A.rows} {A.cols}"]
    lines += [" ".join(str(x) for x in row) for row in A]
    return "\n".join(lines) + "\n"
