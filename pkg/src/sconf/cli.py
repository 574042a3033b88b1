"""Command line surface: build algebras, classify twists, compute
exact symmetry algebras, and run the verification sweeps.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Reports
are deterministic for a fixed --seed; wall-clock timing is only added
when SCONF_EMIT_TIMING=1 so that repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from sconf.exactlinalg import (
    I,
    Matrix,
    ONE,
    Subspace,
    ZERO,
    parse_matrix,
)
from sconf import centralizer as centralizer_mod
from sconf import realform as realform_mod
from sconf import sampling
from sconf import twist as twist_mod
from sconf.superlie import (
    AlgebraElement,
    SuperMatrix,
    build_conf,
    build_f4_5d,
    build_osp,
    build_psl44,
    build_sl_super,
    supercommutator,
    verify_algebra,
)

DEFAULT_SEED = 7
SCHEMA_VERSION = "1"

CONF_SIGNATURES = (
    (3, 0), (2, 1),
    (4, 0), (3, 1), (2, 2),
    (5, 0), (4, 1), (3, 2),
    (6, 0), (5, 1), (4, 2), (3, 3),
)
SL_KS = (1, 2, 3, 5, 6)
OSP_KS = (1, 2, 3, 4, 5, 6, 7, 8)


def _build_family(family, k):
    if family == "sl4k":
        if k is None:
            raise SystemExit2("--k is required for sl4k")
        return build_psl44() if k == 4 else build_sl_super(4, k)
    if family == "psl44":
        return build_psl44()
    if family == "osp":
        if k is None:
            raise SystemExit2("--k is required for osp")
        return build_osp(k, 4)
    if family == "f4":
        return build_f4_5d()
    raise SystemExit2(f"unknown family {family!r}")


class SystemExit2(Exception):
    """Usage error carrying a message; mapped to exit code 2."""


def _emit(report, args):
    if getattr(args, "format", "json") == "markdown":
        text = report if isinstance(report, str) else _markdown(report)
    else:
        if os.environ.get("SCONF_EMIT_TIMING") == "1" and isinstance(report, dict):
            report = dict(report)
            report["elapsed_ms"] = int((time.time() - _T0) * 1000)
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _markdown(report):
    lines = ["| key | value |", "| --- | --- |"]
    for k in sorted(report):
        lines.append(f"| {k} | {report[k]} |")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_algebra(args):
    alg = _build_family(args.family, args.k)
    res = verify_algebra(alg)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "algebra",
        "name": alg.name,
        "dim": alg.dim,
        "even_dim": alg.even_dim,
        "odd_dim": alg.odd_dim,
        "verified": res["ok"],
        "checks": res["checks"],
    }
    if args.dump:
        report["algebra"] = alg.to_json_dict()
    _emit(report, args)
    return 0 if res["ok"] else 1


def _parse_block(text, rows, cols):
    if text == "zero":
        return Matrix.zeros(rows, cols)
    m = parse_matrix(text)
    if m.rows != rows or m.cols != cols:
        raise SystemExit2(f"expected a {rows}x{cols} matrix literal")
    return m


def cmd_twist_classify(args):
    if args.family in ("sl4k", "psl44"):
        k = 4 if args.family == "psl44" else args.k
        if k is None:
            raise SystemExit2("--k is required")
        qp = _parse_block(args.qplus or "zero", k, 4)
        qm = _parse_block(args.qminus or "zero", 4, k)
        q = twist_mod.Supercharge4d(k, qp, qm)
        el = q.to_element()
        if not twist_mod.is_square_zero(el):
            diag = "bracket [Q, Q] is nonzero"
            if k != 4:
                if not (qp @ qm).is_zero():
                    diag = "Q+ o Q- is nonzero"
                elif not (qm @ qp).is_zero():
                    diag = "Q- o Q+ is nonzero"
            _emit({"schema_version": SCHEMA_VERSION, "command": "twist",
                   "square_zero": False, "diagnostic": diag}, args)
            return 1
        orbit = twist_mod.orbit_invariant_4d(q)
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": "twist",
            "square_zero": True,
            "family": orbit.family,
            "rank_data": list(orbit.rank_data),
            "extra": None if orbit.extra is None else str(orbit.extra),
        }
        _emit(report, args)
        return 0
    if args.family == "osp":
        if args.k is None or args.matrix is None:
            raise SystemExit2("--k and --matrix are required for osp")
        m = _parse_block(args.matrix, 4, args.k)
        q = twist_mod.Supercharge3d(args.k, *(m.row(i) for i in range(4)))
        el = q.to_element()
        if not twist_mod.is_square_zero(el):
            rows = [m.row(i) for i in range(4)]
            bad = [
                f"g(w{i+1},w{j+1}) != 0"
                for i in range(4)
                for j in range(i, 4)
                if twist_mod.g_pair(rows[i], rows[j])
            ]
            diag = "; ".join(bad) if bad else "wedge sum w1^w2 + w3^w4 is nonzero"
            _emit({"schema_version": SCHEMA_VERSION, "command": "twist",
                   "square_zero": False, "diagnostic": diag}, args)
            return 1
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": "twist",
            "square_zero": True,
            "family": "osp-3d",
            "rank_data": [twist_mod.orbit_rank_3d(q)],
            "extra": None,
        }
        _emit(report, args)
        return 0
    raise SystemExit2("twist classify supports families sl4k, psl44, osp")


def cmd_centralizer(args):
    if args.family in ("sl4k", "psl44"):
        k = 4 if args.family == "psl44" else args.k
        if k is None or args.r is None:
            raise SystemExit2("--k and --r are required")
        row = centralizer_mod.table1_report(k, args.r)
        row["schema_version"] = SCHEMA_VERSION
        row["command"] = "centralizer"
        _emit(row, args)
        return 0
    if args.family == "osp":
        if args.k is None:
            raise SystemExit2("--k is required for osp")
        rep = centralizer_mod.centralizer_3d_rank1(args.k)
        rep["schema_version"] = SCHEMA_VERSION
        rep["command"] = "centralizer"
        _emit(rep, args)
        return 0 if rep["ok"] else 1
    raise SystemExit2("centralizer supports families sl4k, psl44, osp")


def cmd_realform(args):
    if args.preset:
        theta = realform_mod.preset_involution(args.preset)
        _emit(theta.to_json_dict(), args)
        return 0
    if args.signature:
        try:
            p, q = (int(x) for x in args.signature.split(","))
        except ValueError:
            raise SystemExit2("--signature expects 'p,q'")
        rep = realform_mod.schur_realform_report((p, q))
        rep["schema_version"] = SCHEMA_VERSION
        rep["command"] = "realform"
        _emit(rep, args)
        return 0
    raise SystemExit2("realform needs --preset or --signature")


def _parse_k_range(text):
    if ".." in text:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    return [int(text)]


def _table_cell(kr):
    k, r = kr
    return centralizer_mod.table1_report(k, r)


def cmd_verify_tables(args):
    ks = _parse_k_range(args.k or "1..8")
    cells = [(k, r) for k in ks for r in range(1, min(4, k) + 1)]
    workers = int(os.environ.get("SCONF_TWIST_WORKERS", "1"))
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_table_cell, cells)
    else:
        rows = [_table_cell(c) for c in cells]
    rows.sort(key=lambda row: (row["k"], row["r"]))
    if args.format == "markdown":
        lines = [
            "| k | r | dim z | dim b | dim z/b | printed z | printed b |",
            "| - | - | ----- | ----- | ------- | --------- | --------- |",
        ]
        for row in rows:
            pz = row["printed_z"] if row["matches_printed_z"] else f"{row['printed_z']} (*)"
            pb = row["printed_b"] if row["matches_printed_b"] else f"{row['printed_b']} (*)"
            lines.append(
                f"| {row['k']} | {row['r']} | {row['dim_z']} | {row['dim_b']} "
                f"| {row['dim_quotient']} | {pz} | {pb} |"
            )
        lines.append("")
        lines.append("(*) published closed form differs from the exact computation")
        _emit("\n".join(lines) + "\n", args)
    else:
        _emit({"schema_version": SCHEMA_VERSION, "command": "verify tables", "rows": rows}, args)
    return 0


# ---------------------------------------------------------------------------
# verify all: every claim key in one sweep


def _claim_rng(seed, key):
    return random.Random(f"{seed}:{key}")


def _all_claims(seed):
    """Ordered (key, thunk) pairs; each thunk returns (ok, detail)."""
    claims = []
    seen = set()

    def add(key, fn):
        # the same algebra can show up through two families (osp(8|4) is
        # both the k=8 3d algebra and the k=2 6d one); keep one entry
        if key in seen:
            return
        seen.add(key)
        claims.append((key, fn))

    # algebra integrity
    for (p, q) in CONF_SIGNATURES:
        add(f"algebra:conf({p},{q})", lambda p=p, q=q: _ok(_verified(f"conf({p},{q})", lambda: build_conf(p, q))))
    for k in SL_KS:
        add(f"algebra:sl(4|{k})", lambda k=k: _ok(_verified(f"sl(4|{k})", lambda: build_sl_super(4, k))))
    add("algebra:psl(4|4)", lambda: _ok(_verified("psl(4|4)", build_psl44)))
    for k in OSP_KS:
        add(f"algebra:osp({k}|4)", lambda k=k: _ok(_verified(f"osp({k}|4)", lambda: build_osp(k, 4))))
    for k in (1, 2):
        add(f"algebra:osp(8|{2*k})", lambda k=k: _ok(_verified(f"osp(8|{2*k})", lambda: build_osp(8, 2 * k))))
    add("algebra:f(4)", lambda: _ok(_verified("f(4)", build_f4_5d)))

    # supermatrix oracle
    oracle_algs = (
        [("conf(3,1)", lambda: build_conf(3, 1))]
        + [(f"sl(4|{k})", lambda k=k: build_sl_super(4, k)) for k in SL_KS]
        + [("psl(4|4)", build_psl44)]
        + [(f"osp({k}|4)", lambda k=k: build_osp(k, 4)) for k in OSP_KS]
        + [(f"osp(8|{2*k})", lambda k=k: build_osp(8, 2 * k)) for k in (1, 2)]
    )
    for name, builder in oracle_algs:
        add(f"oracle:{name}", lambda name=name, builder=builder: _oracle_claim(builder(), _claim_rng(seed, f"oracle:{name}")))

    # dimension table
    for k in range(1, 9):
        for r in range(1, min(4, k) + 1):
            add(f"tables:k={k},r={r}", lambda k=k, r=r: _table_claim(k, r))
    add("tables:fullrank-diagonal", lambda: _ok(centralizer_mod.full_rank_psl44_check()["ok"]))
    add("tables:chiral-pattern", lambda: _ok(centralizer_mod.chiral_structure_check(3, 2)["ok"]))
    add("tables:rank11-pattern", lambda: _ok(centralizer_mod.rank11_check(3)["ok"]))
    add("tables:ideal", _ideal_claim)

    # Schur case study
    add("schur:dims", lambda: _eq(_schur()["dim_z"], 11) and _eq(_schur()["dim_b"], 8))
    add("schur:closed-pattern", lambda: _ok(_schur()["z_conf_equals_h_pattern"]))
    add("schur:exact-pattern", lambda: _ok(_schur()["b_conf_equals_k_pattern"]))
    add(
        "schur:translations",
        lambda: _eq(
            (_schur()["dim_translations_closed"], _schur()["dim_translations_exact"]), (3, 2)
        ),
    )
    add("schur:euclidean", lambda: _realform_claim((4, 0), 6, 0))
    add("schur:lorentzian", lambda: _realform_claim((3, 1), 7, 3))
    add("schur:split", lambda: _realform_claim((2, 2), 11, 8))
    add("schur:split-translations", lambda: _split_translations_claim())

    # involutions
    add("involution:squares", lambda: _ok(all(
        realform_mod.check_involution(realform_mod.preset_involution(n), 4)
        for n in realform_mod.PRESET_NAMES)))
    add("involution:real-forms", lambda: _ok(all(
        realform_mod.real_form_dimension_check(realform_mod.preset_involution(n))
        for n in realform_mod.PRESET_NAMES)))

    # nilpotence characterizations
    add("nilpotence:4d", lambda: _nilpotence_4d_claim(_claim_rng(seed, "nilpotence:4d")))
    add("nilpotence:4d-pure-tensor", lambda: _nilpotence_tensor_claim(_claim_rng(seed, "nilpotence:4d-pure-tensor")))
    add("nilpotence:3d", lambda: _nilpotence_3d_claim(_claim_rng(seed, "nilpotence:3d")))
    add("nilpotence:5d", lambda: _nilpotence_5d_claim(_claim_rng(seed, "nilpotence:5d")))

    # orbit invariants
    add("orbit:4d-rank", lambda: _orbit_4d_claim(_claim_rng(seed, "orbit:4d-rank")))
    add("orbit:psl44-det", lambda: _orbit_det_claim(_claim_rng(seed, "orbit:psl44-det")))
    add("orbit:3d-rank", lambda: _orbit_3d_claim(_claim_rng(seed, "orbit:3d-rank")))
    add("orbit:3d-x", lambda: _orbit_x_claim(_claim_rng(seed, "orbit:3d-x")))
    add("orbit:rank-bound", lambda: _rank_bound_claim(_claim_rng(seed, "orbit:rank-bound")))

    # 3d structure
    add("3d:example", lambda: _ok(centralizer_mod.centralizer_3d_example()["ok"]))
    add("3d:rank1-dims", lambda: _ok(all(
        centralizer_mod.centralizer_3d_rank1(k)["ok"] for k in range(2, 9))))
    add("3d:image-isotropy", lambda: _isotropy_claim(_claim_rng(seed, "3d:image-isotropy")))

    # Hermitian orbit labels
    add("hermitian:witnesses", lambda: _ok(all(
        realform_mod.hermitian_orbit_label(p) == label
        for label, p in realform_mod.orbit_label_witnesses().items())))
    add("hermitian:basis-invariance", lambda: _hermitian_mix_claim(_claim_rng(seed, "hermitian:basis-invariance")))
    add("hermitian:random-planes", lambda: _hermitian_random_claim(_claim_rng(seed, "hermitian:random-planes")))
    add("hermitian:kernel-equivariance", lambda: _kernel_equivariance_claim(_claim_rng(seed, "hermitian:kernel-equivariance")))

    return claims


def _ok(flag):
    return bool(flag), None


def _eq(got, want):
    return got == want, {"got": _plain(got), "want": _plain(want)}


def _plain(x):
    if isinstance(x, tuple):
        return list(x)
    return x


_VERIFY_CACHE = {}


def _verified(name, builder):
    if name not in _VERIFY_CACHE:
        _VERIFY_CACHE[name] = verify_algebra(builder())["ok"]
    return _VERIFY_CACHE[name]


_SCHUR_CACHE = {}


def _schur():
    if "pb" not in _SCHUR_CACHE:
        _SCHUR_CACHE["pb"] = centralizer_mod.projection_blocks()
    return _SCHUR_CACHE["pb"]


def _oracle_claim(alg, rng, pairs=100):
    for _ in range(pairs):
        # the matrix-side commutator needs homogeneous arguments
        x = _sparse_element(alg, rng, parity=rng.randrange(2))
        y = _sparse_element(alg, rng, parity=rng.randrange(2))
        res = alg.bracket_coeffs(x, y)
        mx, my = alg.matrix_of(x), alg.matrix_of(y)
        sc = supercommutator(mx, my)
        if alg.rep_project is not None:
            sc = alg.rep_project(sc)
        want = alg.expand_rep(sc)
        got = {i: c for i, c in enumerate(res) if c}
        if got != {i: c for i, c in want.items() if c}:
            return False, {"mismatch": alg.name}
    return True, None


def _sparse_element(alg, rng, terms=8, parity=None):
    pool = list(range(alg.dim))
    if parity == 0:
        pool = list(alg.even_indices)
    elif parity == 1:
        pool = list(alg.odd_indices)
    if not pool:
        pool = list(alg.even_indices)
    v = [ZERO] * alg.dim
    for _ in range(min(terms - 1, len(pool))):
        v[rng.choice(pool)] = sampling.rand_scalar(rng)
    if not any(v):
        v[rng.choice(pool)] = sampling.rand_nonzero(rng)
    return tuple(v)


def _table_claim(k, r):
    row = centralizer_mod.table1_report(k, r)
    want_z = centralizer_mod.corrected_table_z(k, r)
    want_b = centralizer_mod.corrected_table_b(k, r)
    ok = row["dim_z"] == want_z and row["dim_b"] == want_b
    return ok, {
        "dim_z": row["dim_z"],
        "dim_b": row["dim_b"],
        "matches_printed_z": row["matches_printed_z"],
        "matches_printed_b": row["matches_printed_b"],
    }


def _ideal_claim():
    alg = twist_mod.algebra_4d(3)
    q = twist_mod.canonical_rep_4d(3, 2, 0).to_element()
    rep = centralizer_mod.centralizer_report(q)
    return _ok(centralizer_mod.ideal_check(rep, alg))


def _realform_claim(signature, want_z, want_b):
    rep = realform_mod.schur_realform_report(signature)
    return _eq((rep["dim_z_real"], rep["dim_b_real"]), (want_z, want_b))


def _split_translations_claim():
    rep = realform_mod.schur_realform_report((2, 2))
    return _eq(
        (rep["translations_closed_real"], rep["translations_exact_real"]), (3, 2)
    )


def _nilpotence_4d_claim(rng, samples=200):
    alg = twist_mod.algebra_4d(3)
    for _ in range(samples):
        qp = sampling.rand_matrix(rng, 3, 4)
        qm = sampling.rand_matrix(rng, 4, 3)
        q = twist_mod.Supercharge4d(3, qp, qm)
        cond = twist_mod.check_4d_characterization(q)
        if cond != twist_mod.is_square_zero(q.to_element()):
            return False, None
    return True, None


def _nilpotence_tensor_claim(rng, samples=200):
    for _ in range(samples):
        t = twist_mod.PureTensor4d(
            sampling.rand_vector(rng, 4),
            sampling.rand_vector(rng, 4),
            sampling.rand_vector(rng, 4),
            sampling.rand_vector(rng, 4),
        )
        # classify asserts agreement between cone membership and the bracket
        twist_mod.classify_n4_component(t)
    return True, None


def _nilpotence_3d_claim(rng, samples=200):
    for _ in range(samples):
        k = rng.choice((2, 3, 4))
        q = twist_mod.Supercharge3d(k, *(sampling.rand_vector(rng, k) for _ in range(4)))
        cond = twist_mod.check_3d_conditions(q)
        if cond != twist_mod.is_square_zero(q.to_element()):
            return False, None
    return True, None


def _nilpotence_5d_claim(rng, samples=200):
    for _ in range(samples):
        if rng.randrange(2):
            q = sampling.rand_nilpotent_5d(rng)
        else:
            q = twist_mod.Supercharge5d(
                sampling.rand_vector(rng, 8), sampling.rand_vector(rng, 8)
            )
        cond = twist_mod.check_5d_conditions(q)
        if cond != twist_mod.is_square_zero(q.to_element()):
            return False, None
    return True, None


def _orbit_4d_claim(rng, samples=50):
    for _ in range(samples):
        k = rng.choice((2, 3, 5))
        q = sampling.rand_nilpotent_4d(rng, k)
        base = twist_mod.orbit_invariant_4d(q)
        a, b = sampling.rand_sl(rng, 4), sampling.rand_sl(rng, k)
        moved = twist_mod.orbit_invariant_4d(q.conjugate(a, b))
        if moved != base:
            return False, None
    return True, None


def _orbit_det_claim(rng, samples=50):
    q = twist_mod.canonical_rep_4d(4, 4, 0)
    base = twist_mod.orbit_invariant_4d(q)
    for _ in range(samples):
        a, b = sampling.rand_sl(rng, 4), sampling.rand_sl(rng, 4)
        lam = rng.choice((ONE, -ONE, I))
        if twist_mod.orbit_invariant_4d(q.conjugate(a, b, lam)) != base:
            return False, None
    return True, None


def _orbit_3d_claim(rng, samples=50):
    for _ in range(samples):
        k = rng.choice((2, 3, 4, 6))
        q = sampling.rand_nilpotent_3d(rng, k)
        base = twist_mod.orbit_rank_3d(q)
        moved = sampling.conjugate_3d(q, sampling.rand_so(rng, k), sampling.rand_sp(rng, 4))
        if twist_mod.orbit_rank_3d(moved) != base:
            return False, None
    return True, None


def _orbit_x_claim(rng, samples=50):
    k = 4
    w = (ONE, I, ZERO, ZERO)
    wp = (ZERO, ZERO, ONE, I)
    base = twist_mod.orbit_param_3d(w, wp)
    for _ in range(samples):
        rot = sampling.rand_rotation(rng, k)
        if twist_mod.orbit_param_3d(rot.apply(w), rot.apply(wp)) != base:
            return False, None
    return True, None


def _rank_bound_claim(rng, samples=50):
    for _ in range(samples):
        k = rng.choice((1, 2, 3, 4, 5))
        q = sampling.rand_nilpotent_4d(rng, k)
        inv = twist_mod.orbit_invariant_4d(q)
        rp, rm = inv.rank_data
        if rp + rm > min(4, k):
            return False, None
    return True, None


def _isotropy_claim(rng, samples=50):
    for _ in range(samples):
        k = rng.choice((2, 3, 4, 6))
        q = sampling.rand_nilpotent_3d(rng, k)
        rows = [q.w1, q.w2, q.w3, q.w4]
        for i in range(4):
            for j in range(i, 4):
                if twist_mod.g_pair(rows[i], rows[j]):
                    return False, None
    return True, None


def _hermitian_mix_claim(rng, samples=50):
    wit = realform_mod.orbit_label_witnesses()
    labels = sorted(wit)
    for _ in range(samples):
        label = rng.choice(labels)
        u, v = wit[label].plane.vectors()
        m = sampling.rand_sl(rng, 2)
        mixed = [
            tuple(m[0, 0] * x + m[0, 1] * y for x, y in zip(u, v)),
            tuple(m[1, 0] * x + m[1, 1] * y for x, y in zip(u, v)),
        ]
        p = realform_mod.GrassmannPoint(Subspace(4, mixed))
        if realform_mod.hermitian_orbit_label(p) != label:
            return False, None
    return True, None


def _hermitian_random_claim(rng, samples=500):
    seen = set()
    tries = 0
    while len(seen) < samples and tries < samples * 4:
        tries += 1
        u = sampling.rand_vector(rng, 4)
        v = sampling.rand_vector(rng, 4)
        plane = Subspace(4, [u, v])
        if plane.dim != 2:
            continue
        label = realform_mod.hermitian_orbit_label(realform_mod.GrassmannPoint(plane))
        if label not in realform_mod.ORBIT_LABELS:
            return False, {"bad_label": list(label)}
        seen.add((tuple(u), tuple(v)))
    return len(seen) >= samples, {"planes": len(seen)}


def _kernel_equivariance_claim(rng, samples=20):
    q = centralizer_mod.schur_supercharge()
    ker = realform_mod.kernel_fiber(q).plane
    for _ in range(samples):
        a, b = sampling.rand_sl(rng, 4), sampling.rand_sl(rng, 2)
        moved = Subspace(4, [a.apply(v) for v in ker.vectors()])
        if realform_mod.kernel_fiber(q.conjugate(a, b)).plane != moved:
            return False, None
    return True, None


def cmd_verify_all(args):
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    claims = _all_claims(seed)
    results = []
    failed = 0
    for key, fn in claims:
        ok, detail = fn()
        entry = {"key": key, "ok": bool(ok)}
        if detail:
            entry["detail"] = detail
        if args.corrupt_claim == key:
            entry["ok"] = not entry["ok"]
            entry["corrupted"] = True
        if not entry["ok"]:
            failed += 1
        results.append(entry)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify all",
        "seed": seed,
        "claims": results,
        "passed": len(results) - failed,
        "failed": failed,
        "ok": failed == 0,
    }
    _emit(report, args)
    return 0 if failed == 0 else 1


# ---------------------------------------------------------------------------


_T0 = time.time()


def _build_parser():
    p = argparse.ArgumentParser(prog="sconf", description=__doc__)
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("json", "markdown"), default="json")

    sp = sub.add_parser("algebra", help="build and verify an algebra")
    sp.add_argument("--family", required=True, choices=("sl4k", "psl44", "osp", "f4"))
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--dump", action="store_true", help="include structure constants")
    common(sp)
    sp.set_defaults(fn=cmd_algebra)

    sp = sub.add_parser("twist", help="classify a square-zero odd element")
    tsub = sp.add_subparsers(dest="twist_cmd", required=True)
    tc = tsub.add_parser("classify")
    tc.add_argument("--family", required=True, choices=("sl4k", "psl44", "osp"))
    tc.add_argument("--k", type=int, default=None)
    tc.add_argument("--qplus", default=None, help="k x 4 matrix literal or 'zero'")
    tc.add_argument("--qminus", default=None, help="4 x k matrix literal or 'zero'")
    tc.add_argument("--matrix", default=None, help="4 x k matrix literal (osp)")
    common(tc)
    tc.set_defaults(fn=cmd_twist_classify)

    sp = sub.add_parser("centralizer", help="closed/exact symmetry dimensions")
    sp.add_argument("--family", required=True, choices=("sl4k", "psl44", "osp"))
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--r", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_centralizer)

    sp = sub.add_parser("realform", help="real structures and fixed loci")
    sp.add_argument("--preset", default=None, choices=(None,) + realform_mod.PRESET_NAMES)
    sp.add_argument("--signature", default=None, help="'p,q' with p+q=4")
    common(sp)
    sp.set_defaults(fn=cmd_realform)

    sp = sub.add_parser("verify", help="verification sweeps")
    vsub = sp.add_subparsers(dest="verify_cmd", required=True)
    vt = vsub.add_parser("tables")
    vt.add_argument("--k", default="1..8", help="k or lo..hi")
    common(vt)
    vt.set_defaults(fn=cmd_verify_tables)
    va = vsub.add_parser("all")
    va.add_argument("--seed", type=int, default=None)
    va.add_argument("--corrupt-claim", default=None, help=argparse.SUPPRESS)
    common(va)
    va.set_defaults(fn=cmd_verify_all)

    return p


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
