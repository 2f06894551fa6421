"""Command-line front end.

Every subcommand reads its inputs from files (``-`` for standard input) and
exits with 0 when the result is verified or the computation succeeded, 1
when a check is refuted, and 2 on bad input.  ``--format machine`` prints
``## key=value`` lines instead of the human report.
"""
import argparse
import sys

from kirbycalc import acceptance, constants
from kirbycalc.braidclasp import (
    WITT_HALL_CONVENTION, braid_is_trivial, parse_braid,
    select_witt_hall_convention, verify_ihx_braid_identity,
)
from kirbycalc.fourman import boundary2, closed4_homology, parse_skeleton
from kirbycalc.h4 import eta_of_ihx, format_wedge, parse_wedge, plan_cancellation, total_eta
from kirbycalc.homlink import (
    MoveError, admissible_ihx_add, apply_sequence, band_slide, destabilize, format_link,
    h1_of_surgery, handle_slide, ihx_add, k3_add, k3_remove, lantern_swap, pair_add,
    pair_remove, parse_link, parse_shadow, stabilize,
)
from kirbycalc.intmat import (
    D22_DISPLAY_VARIANT, bfs_decompose_opq, cokernel, d_pq, evaluate_word, format_matrix,
    is_in_opq, parse_matrix, slide_generators, smith_normal_form, wall_generators,
)
from kirbycalc.movecalc import (
    evolve_lk, expand_d_move, format_sequence, is_band_slide_realizable, parse_sequence, phi,
)
from kirbycalc.pdcode import linking_matrix_from_pd, parse_pd

OK, REFUTED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    def __init__(self):
        self.lines = []
        self.fields = []
        self.code = OK

    def say(self, text):
        self.lines.extend(text.rstrip("\n").split("\n"))

    def put(self, key, value):
        if isinstance(value, str):
            value = value.strip().replace("\n", ";")
        self.fields.append((key, value))

    def verdict(self, ok, key="verified"):
        self.put(key, str(bool(ok)).lower())
        self.code = OK if ok else REFUTED

    def render(self, fmt):
        if fmt == "machine":
            return "".join(f"## {k}={v}\n" for k, v in self.fields)
        return "".join(line + "\n" for line in self.lines)


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _matrix_line(A):
    return ";".join(" ".join(map(str, row)) for row in A)


# subcommands

def cmd_phi(args, rep):
    T = phi(parse_sequence(_read(args.seqfile)))
    rep.say(format_matrix(T))
    rep.put("matrix", _matrix_line(T))


def cmd_evolve_lk(args, rep):
    lk = parse_matrix(_read(args.matrixfile))
    out = evolve_lk(lk, parse_sequence(_read(args.seqfile)))
    rep.say(format_matrix(out))
    rep.put("matrix", _matrix_line(out))


def cmd_band_slide_check(args, rep):
    seq = parse_sequence(_read(args.seqfile))
    ok = is_band_slide_realizable(seq)
    rep.say(f"phi(S) {'=' if ok else '!='} I: "
            + ("realizable by band-slides" if ok else "not band-slide realizable"))
    rep.verdict(ok)


def cmd_opq_check(args, rep):
    T = parse_matrix(_read(args.matrixfile))
    ok = is_in_opq(T, (args.p, args.q))
    rep.say(f"{'in' if ok else 'not in'} O({args.p},{args.q};Z)")
    rep.verdict(ok)


def _generator_set(name, sig):
    if name == "slides":
        return slide_generators(sig[0] + sig[1])
    gens = wall_generators(sig)
    D = d_pq(sig)
    return gens + [("D^-1", D.inverse())]


def cmd_opq_decompose(args, rep):
    sig = (args.p, args.q)
    T = parse_matrix(_read(args.matrixfile))
    if not is_in_opq(T, sig):
        raise InputError(f"matrix is not in O({args.p},{args.q};Z)")
    gens = _generator_set(args.generators, sig)
    word = bfs_decompose_opq(T, sig, gens, args.max_len, exact_length=args.exact)
    if word is None:
        rep.say(f"not found within bound {args.max_len}")
        rep.put("found", "false")
        rep.code = REFUTED
        return
    assert evaluate_word(word, gens, args.p + args.q) == T
    rep.say(" ".join(word) if word else "(empty word)")
    rep.say(f"length {len(word)}, product re-verified")
    rep.put("found", "true")
    rep.put("length", len(word))
    rep.put("word", " ".join(word))


def cmd_verify_d22(args, rep):
    seq = expand_d_move(4, (1, 2, 3, 4))
    W = phi(seq)
    D = d_pq((2, 2))
    word_ok = W == D
    in_opq = is_in_opq(D, (2, 2))
    display_in = is_in_opq(D22_DISPLAY_VARIANT, (2, 2))
    rep.say("slide word (application order):")
    rep.say(format_sequence(seq))
    rep.say("product:")
    rep.say(format_matrix(W))
    rep.say(f"product equals block-form D_2,2: {word_ok}")
    rep.say(f"D_2,2 in O(2,2;Z): {in_opq}")
    rep.say(f"variant with entry (1,1) = -1 in O(2,2;Z): {display_in}")
    if not display_in:
        rep.say("  the (1,1) = -1 display is a typo; +1 is forced by the congruence")
    rep.put("word_equals_dpq", str(word_ok).lower())
    rep.put("dpq_in_opq", str(in_opq).lower())
    rep.put("display_variant_in_opq", str(display_in).lower())
    rep.verdict(word_ok and in_opq and not display_in)


def cmd_snf(args, rep):
    U, S, V = smith_normal_form(parse_matrix(_read(args.matrixfile)))
    rep.say("U\n" + format_matrix(U) + "S\n" + format_matrix(S) + "V\n" + format_matrix(V))
    rep.put("invariant_factors", " ".join(str(x) for x in S.diagonal()))
    rep.put("U", _matrix_line(U))
    rep.put("S", _matrix_line(S))
    rep.put("V", _matrix_line(V))


def cmd_coker(args, rep):
    G = cokernel(parse_matrix(_read(args.matrixfile)))
    rep.say(str(G))
    rep.put("group", str(G))


def cmd_h1_surgery(args, rep):
    G = h1_of_surgery(parse_link(_read(args.linkfile)))
    rep.say(str(G))
    rep.put("group", str(G))
    rep.put("free_rank", G.free_rank)
    rep.put("torsion", " ".join(map(str, G.torsion)))


def _ints(tokens):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"expected integers, got {' '.join(tokens)!r}") from None


_FIXED_ARITY = {"stabilize": (stabilize, 1), "destabilize": (destabilize, 1),
                "slide": (handle_slide, 3), "band-slide": (band_slide, 2),
                "k3-remove": (k3_remove, 2), "pair-add": (pair_add, 0),
                "pair-remove": (pair_remove, 2)}


def _apply(L, spec):
    if not spec:
        raise InputError("missing move")
    name, rest = spec[0], spec[1:]
    if name in _FIXED_ARITY:
        fn, arity = _FIXED_ARITY[name]
        if len(rest) != arity:
            raise InputError(f"{name} takes {arity} integer argument(s)")
        return fn(L, *_ints(rest))
    if name == "k3-add":
        vals = _ints(rest)
        if not vals:
            raise InputError("k3-add needs a framing and a linking row")
        return k3_add(L, vals[0], vals[1:])
    if name in ("ihx-add", "adm-ihx-add"):
        if len(rest) != 1:
            raise InputError(f"{name} takes one shadow file")
        sh = parse_shadow(_read(rest[0]))
        return (ihx_add if name == "ihx-add" else admissible_ihx_add)(L, sh)
    if name == "lantern":
        if len(rest) < 3:
            raise InputError("lantern takes <shadowfile> <K->K'|K'->K> <components...>")
        return lantern_swap(L, _ints(rest[2:]), parse_shadow(_read(rest[0])), rest[1])
    if name == "seq":
        if len(rest) != 1:
            raise InputError("seq takes one sequence file")
        return apply_sequence(L, parse_sequence(_read(rest[0])))
    raise InputError(f"unknown move {name!r}")


def cmd_apply_move(args, rep):
    L = _apply(parse_link(_read(args.linkfile)), args.move)
    rep.say(format_link(L))
    rep.put("n", L.n)
    rep.put("link", format_link(L))


def cmd_eta_ihx(args, rep):
    w = eta_of_ihx(parse_shadow(_read(args.shadowfile)), args.sign)
    rep.say(format_wedge(w))
    rep.put("zero", str(w.is_zero()).lower())
    rep.put("coeffs", ";".join(f"{' '.join(map(str, s))} {c}" for s, c in w.coeffs))


def cmd_plan_cancel(args, rep):
    target = parse_wedge(_read(args.wedgefile))
    plan = plan_cancellation(target)
    for k, (sh, s) in enumerate(plan, 1):
        rep.say(f"# move {k}: sign {s:+d}")
        rep.say(sh.to_text())
    ok = total_eta(plan, target.r) == -target
    rep.say(f"# {len(plan)} coordinate IHX-moves; total class = -target: {ok}")
    rep.put("moves", len(plan))
    rep.verdict(ok, "cancels")


def cmd_braid_trivial(args, rep):
    b = parse_braid(_read(args.braidfile))
    ok = braid_is_trivial(b)
    rep.say(f"{'trivial' if ok else 'non-trivial'} ({len(b)} letters, {b.strands} strands)")
    rep.verdict(ok, "trivial")


def cmd_verify_witt_hall(args, rep):
    good = select_witt_hall_convention()
    for conv in ("left", "right"):
        rep.say(f"{conv} conjugation: product {'reduces to 1' if conv in good else 'is non-trivial'}")
    rep.put("conventions", " ".join(good))
    ok = good == [WITT_HALL_CONVENTION]
    rep.verdict(ok)


def cmd_verify_ihx_braid(args, rep):
    beta1 = parse_braid(_read(args.beta1file))
    alpha = parse_braid(_read(args.alphafile))
    ok = verify_ihx_braid_identity(beta1, alpha)
    rep.say(f"beta1 (a^2 beta1 a^-2) (a beta1 a^-1) is {'trivial' if ok else 'non-trivial'}")
    rep.verdict(ok)


def cmd_kirby_homology(args, rep):
    sk = parse_skeleton(_read(args.skeletonfile))
    groups = closed4_homology(sk)
    for k, G in enumerate(groups):
        rep.say(f"H_{k} = {G}")
    rep.say(f"d2 zero: {all(x == 0 for x in boundary2(sk).entries)}; chi = {sk.euler_characteristic}")
    rep.put("ranks", " ".join(str(G.free_rank) for G in groups))
    for k, G in enumerate(groups):
        rep.put(f"H{k}", str(G))
    rep.put("chi", sk.euler_characteristic)


def cmd_pd_lk(args, rep):
    M = linking_matrix_from_pd(parse_pd(_read(args.pdfile)))
    rep.say(format_matrix(M))
    rep.put("matrix", _matrix_line(M))


def cmd_verify_all(args, rep):
    only = set(args.only) if args.only else None
    results = acceptance.run_all(seed=args.seed, numbers=only)
    for r in results:
        rep.say(r.line())
        rep.put(f"criterion_{r.number}", "pass" if r.passed else "fail")
    passed = sum(r.passed for r in results)
    rep.say(f"{passed}/{len(results)} criteria passed")
    for name, ok in constants.provenance():
        rep.put(f"constant_{name}", "match" if ok else "mismatch")
    rep.verdict(passed == len(results))


def cmd_show(args, rep):
    """Print a shipped data file (``kirbycalc show braids/beta1.braid``)."""
    parts = args.name.split("/")
    try:
        text = constants.data_text(*parts)
    except (FileNotFoundError, IsADirectoryError):
        raise InputError(f"no shipped data file {args.name!r}") from None
    rep.say(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing; exit code only")
    common.add_argument("--format", choices=("plain", "machine"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="kirbycalc", parents=[common],
                                description="Homological Kirby-calculus verifications.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    add("phi", cmd_phi, "matrix of a move sequence").add_argument("seqfile")
    sp = add("evolve-lk", cmd_evolve_lk, "linking matrix after a move sequence")
    sp.add_argument("matrixfile")
    sp.add_argument("seqfile")
    add("band-slide-check", cmd_band_slide_check,
        "is phi(S) = I, i.e. realizable by band-slides").add_argument("seqfile")
    for name, fn, h in (("opq-check", cmd_opq_check, "membership in O(p,q;Z)"),
                        ("opq-decompose", cmd_opq_decompose, "word over generators by BFS")):
        sp = add(name, fn, h)
        sp.add_argument("matrixfile")
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("-q", type=int, required=True)
        if name == "opq-decompose":
            sp.add_argument("--max-len", type=int, default=8)
            sp.add_argument("--generators", choices=("slides", "wall"), default="slides")
            sp.add_argument("--exact", action="store_true",
                            help="require exactly --max-len letters, freely reduced")
    add("verify-d22", cmd_verify_d22, "the D_2,2 slide word and the display typo")
    add("snf", cmd_snf, "Smith normal form with transforms").add_argument("matrixfile")
    add("coker", cmd_coker, "cokernel of a matrix").add_argument("matrixfile")
    add("h1-surgery", cmd_h1_surgery, "H_1 of surgery on a link shadow").add_argument("linkfile")
    sp = add("apply-move", cmd_apply_move, "apply one move to a link shadow")
    sp.add_argument("linkfile")
    sp.add_argument("move", nargs=argparse.REMAINDER,
                    help="stabilize s | destabilize i | slide i j e | band-slide i j | "
                         "k3-add f row... | k3-remove i j | pair-add | pair-remove i j | "
                         "ihx-add SHADOW | adm-ihx-add SHADOW | lantern SHADOW DIR i... | seq FILE")
    sp = add("eta-ihx", cmd_eta_ihx, "H_4 class of an IHX-move")
    sp.add_argument("shadowfile")
    sp.add_argument("--sign", type=int, choices=(1, -1), default=1)
    add("plan-cancel", cmd_plan_cancel, "IHX-moves cancelling a class").add_argument("wedgefile")
    add("braid-trivial", cmd_braid_trivial, "triviality via the Artin action").add_argument("braidfile")
    add("verify-witt-hall", cmd_verify_witt_hall, "which conjugation makes Witt-Hall hold")
    sp = add("verify-ihx-braid", cmd_verify_ihx_braid, "the IHX braid product is trivial")
    sp.add_argument("beta1file")
    sp.add_argument("alphafile")
    add("kirby-homology", cmd_kirby_homology, "homology of a closed 4-manifold skeleton"
        ).add_argument("skeletonfile")
    add("pd-lk", cmd_pd_lk, "linking matrix of a crossing list").add_argument("pdfile")
    sp = add("verify-all", cmd_verify_all, "run the acceptance suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--only", type=int, nargs="+", metavar="N")
    add("show", cmd_show, "print a shipped data file").add_argument("name")
    return p


def run(argv=None):
    """Parse, execute, and return (exit code, output text, error text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (INPUT_ERROR if exc.code else OK), "", ""
    fmt = getattr(args, "format", "plain")
    quiet = getattr(args, "quiet", False)
    rep = Report()
    try:
        args.func(args, rep)
    except (InputError, MoveError, ValueError) as exc:
        return INPUT_ERROR, "", f"kirbycalc: error: {exc}\n"
    return rep.code, ("" if quiet else rep.render(fmt)), ""


def main(argv=None):
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
