"""Command-line front end: parameter-sweep reports, the verification suite,
and single-group spectra.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closed_forms import (
    FamilyTag,
    catalog_degree_indices,
    catalog_energies,
    catalog_instances,
    catalog_spectra,
    catalog_structure,
    catalog_zagreb,
    detect_family,
)
from .graphs import (
    BRUTE_FORCE_CAP,
    brute_force_star_decomposition,
    build_star_decomposition,
    graph_stats,
    assemble_matrix,
)
from .groups import MAX_GROUP_ORDER, CyclicGroupSpec, _is_prime
from .indices import degree_indices, zagreb
from .spectral import (
    MATRIX_KIND_FOR_SPECTRUM,
    closed_form_spectrum,
    e_le_check,
    energies,
    numeric_spectrum,
)


class UsageError(ValueError):
    """Bad command-line input; maps to exit code 2."""


REPORT_COLUMNS = (
    "order", "family", "p", "q", "n",
    "vertices", "edges",
    "m1", "m2", "hv_margin", "hv_holds",
    "randic", "abc", "ga", "harmonic", "sci",
    "e", "le", "le_plus", "e_cn",
    "hypoenergetic", "hyperenergetic", "l_hyper", "q_hyper", "cn_hyper",
    "e_le_chain",
)
_FLOAT_COLUMNS = frozenset(
    {"randic", "abc", "ga", "harmonic", "sci", "e", "le", "le_plus", "e_cn"}
)

AGREE_REL_TOL = 1e-9
CLUSTER_GAP = 1e-6


def _fmt_float(x: float) -> str:
    return format(x, ".9g")


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


def _report_row(order: int) -> dict:
    spec = CyclicGroupSpec.of(order)
    decomp = build_star_decomposition(spec)
    v, m = graph_stats(decomp)
    z = zagreb(decomp)
    di = degree_indices(decomp)
    er = energies(decomp)
    _, chain = e_le_check(er, v)
    tag = detect_family(spec)
    return {
        "order": order,
        "family": tag.kind,
        "p": tag.p,
        "q": tag.q,
        "n": tag.n,
        "vertices": v,
        "edges": m,
        "m1": z.m1,
        "m2": z.m2,
        "hv_margin": z.hv_margin,
        "hv_holds": z.hv_holds,
        "randic": di.randic,
        "abc": di.abc,
        "ga": di.ga,
        "harmonic": di.harmonic,
        "sci": di.sci,
        "e": er.e,
        "le": er.le,
        "le_plus": er.le_plus,
        "e_cn": er.e_cn,
        "hypoenergetic": er.hypoenergetic,
        "hyperenergetic": er.hyperenergetic,
        "l_hyper": er.l_hyper,
        "q_hyper": er.q_hyper,
        "cn_hyper": er.cn_hyper,
        "e_le_chain": chain,
    }


def _parse_int_list(raw: str | None, flag: str) -> list[int]:
    if raw is None:
        raise UsageError(f"missing {flag} for this family")
    try:
        vals = [int(piece) for piece in raw.split(",") if piece.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {raw!r}") from None
    if not vals:
        raise UsageError(f"{flag} is empty")
    return vals


def _parse_primes(raw: str | None, flag: str) -> list[int]:
    vals = _parse_int_list(raw, flag)
    for v in vals:
        if not _is_prime(v):
            raise UsageError(f"{flag} values must be prime, got {v}")
    return vals


def _checked_order(tag: FamilyTag) -> int:
    order = tag.order()
    if order > MAX_GROUP_ORDER:
        raise UsageError(
            f"order {order} for {tag.kind} parameters exceeds the cap {MAX_GROUP_ORDER}"
        )
    return order


def _resolve_orders(family: str, p: str | None, q: str | None, n: str | None,
                    max_order: int | None) -> list[int]:
    if family == "all":
        if max_order is None:
            raise UsageError("family 'all' requires --max-order")
        if not 2 <= max_order <= MAX_GROUP_ORDER:
            raise UsageError(f"--max-order must be in 2..{MAX_GROUP_ORDER}")
        return list(range(2, max_order + 1))
    if family == "pn":
        ps = _parse_primes(p, "--p")
        ns = _parse_int_list(n, "--n")
        if any(e < 1 for e in ns):
            raise UsageError("--n exponents must be >= 1")
        tags = [FamilyTag.prime_power(pp, e) for pp in ps for e in ns]
    else:
        ps = _parse_primes(p, "--p")
        qs = _parse_primes(q, "--q")
        tags = []
        for pp in ps:
            for qq in qs:
                if family == "p2q":
                    if pp != qq:
                        tags.append(FamilyTag.p2q(pp, qq))
                elif pp < qq:
                    tags.append(
                        FamilyTag.pq(pp, qq) if family == "pq" else FamilyTag.p2q2(pp, qq)
                    )
        if not tags:
            constraint = "distinct primes" if family == "p2q" else "primes with p < q"
            raise UsageError(f"no valid (p, q) combinations for {family}: needs {constraint}")
    orders = sorted({_checked_order(t) for t in tags})
    return orders


def _emit_report(rows: list[dict], fmt: str, out: str | None) -> None:
    if fmt == "csv":
        lines = [",".join(REPORT_COLUMNS)]
        for row in rows:
            cells = []
            for col in REPORT_COLUMNS:
                val = row[col]
                if val is None:
                    cells.append("")
                elif isinstance(val, bool):
                    cells.append("true" if val else "false")
                elif col in _FLOAT_COLUMNS:
                    cells.append(_fmt_float(val))
                else:
                    cells.append(str(val))
            lines.append(",".join(cells))
        _write_out("\n".join(lines) + "\n", out)
    else:
        payload = []
        for row in rows:
            obj = {}
            for col in REPORT_COLUMNS:
                val = row[col]
                if col in _FLOAT_COLUMNS and val is not None:
                    obj[col] = float(_fmt_float(val))
                else:
                    obj[col] = val
            payload.append(obj)
        _write_out(json.dumps(payload, indent=2) + "\n", out)


def cmd_report(family: str, p: str | None = None, q: str | None = None,
               n: str | None = None, max_order: int | None = None,
               fmt: str = "csv", out: str | None = None) -> int:
    """Build one row per group order and emit a deterministic CSV/JSON table."""
    orders = _resolve_orders(family, p, q, n, max_order)
    rows = [_report_row(order) for order in orders]
    rows.sort(key=lambda r: (r["order"], r["p"] or 0, r["q"] or 0))
    _emit_report(rows, fmt, out)
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _rel_close(a: float, b: float, tol: float = AGREE_REL_TOL) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _check_oracle(max_order: int):
    for order in range(1, max_order + 1):
        spec = CyclicGroupSpec.of(order)
        built = build_star_decomposition(spec)
        brute = brute_force_star_decomposition(spec)
        if built != brute:
            return False, f"decompositions disagree at order {order}", []
    return True, f"builder matches pair enumeration for orders 1..{max_order}", []


def _check_catalog():
    tags = catalog_instances()
    sci_notes = 0
    for tag in tags:
        spec = CyclicGroupSpec.of(tag.order())
        built = build_star_decomposition(spec)
        if built != catalog_structure(tag):
            return False, f"structure mismatch for {tag}", []
        z = zagreb(built)
        if (z.m1, z.m2) != catalog_zagreb(tag):
            return False, f"Zagreb mismatch for {tag}", []
        spectra = catalog_spectra(tag)
        for kind in ("A", "L", "Q", "CN"):
            if closed_form_spectrum(built, kind).pairs != spectra[kind].pairs:
                return False, f"{kind}-spectrum mismatch for {tag}", []
        er = energies(built)
        cat = catalog_energies(tag)
        for field in ("e", "le", "le_plus", "e_cn"):
            if not _rel_close(getattr(er, field), getattr(cat, field)):
                return False, f"energy {field} mismatch for {tag}", []
        if er.avg_degree_shift != cat.avg_degree_shift:
            return False, f"average-degree shift mismatch for {tag}", []
        for flag in ("hypoenergetic", "hyperenergetic", "l_hyper", "q_hyper", "cn_hyper"):
            if getattr(er, flag) != getattr(cat, flag):
                return False, f"flag {flag} mismatch for {tag}", []
        di = degree_indices(built)
        cdi = catalog_degree_indices(tag)
        for field in ("randic", "abc", "ga", "harmonic"):
            if not _rel_close(getattr(di, field), getattr(cdi, field)):
                return False, f"index {field} mismatch for {tag}", []
        if not _rel_close(di.sci, cdi.sci):
            if tag.kind in ("p2q", "p2q2"):
                sci_notes += 1
            else:
                return False, f"index sci mismatch for {tag}", []
    notes = []
    if sci_notes:
        notes.append(
            f"printed SCI deviates from the definitional sum for {sci_notes} "
            "p2q/p2q2 instances (transcribed as printed; excluded from gating)"
        )
    detail = (
        f"{len(tags)} instances: structure, Zagreb and spectra exact, "
        "energies and degree indices within 1e-09"
    )
    return True, detail, notes


def _cluster_sizes(values: list[float]) -> list[int]:
    sizes = []
    for i, v in enumerate(values):
        if i and v - values[i - 1] <= CLUSTER_GAP:
            sizes[-1] += 1
        else:
            sizes.append(1)
    return sizes


def _check_spectral(max_order: int, tol: float):
    for order in range(1, max_order + 1):
        decomp = build_star_decomposition(CyclicGroupSpec.of(order))
        if closed_form_spectrum(decomp, "L").pairs != closed_form_spectrum(decomp, "Q").pairs:
            return False, f"L-spectrum differs from Q-spectrum at order {order}", []
        for kind in ("A", "L", "Q", "CN"):
            exact = closed_form_spectrum(decomp, kind)
            matrix = assemble_matrix(decomp, MATRIX_KIND_FOR_SPECTRUM[kind])
            numeric = numeric_spectrum(matrix, tol)
            expected = exact.expand_floats()
            if len(numeric) != len(expected):
                return False, f"eigenvalue count mismatch at order {order} kind {kind}", []
            worst = max(abs(a - b) for a, b in zip(numeric, expected))
            if not worst <= tol:
                return (
                    False,
                    f"order {order} kind {kind}: max |numeric - exact| = {worst:.3e} > {tol}",
                    [],
                )
            mults = [mult for _, mult in reversed(exact.pairs)]
            if _cluster_sizes(numeric) != mults:
                return False, f"multiplicity mismatch at order {order} kind {kind}", []
    return (
        True,
        f"orders 1..{max_order}, all kinds within {tol} with matching multiplicities",
        [],
    )


def _check_hv():
    tags = catalog_instances()
    for tag in tags:
        z = zagreb(build_star_decomposition(CyclicGroupSpec.of(tag.order())))
        if not z.hv_margin > 0:
            return False, f"margin {z.hv_margin} not positive for {tag}", []
    trivial = zagreb(build_star_decomposition(CyclicGroupSpec.of(1)))
    if trivial.hv_margin != 0:
        return False, f"order-1 margin is {trivial.hv_margin}, expected 0", []
    return True, f"margin > 0 for all {len(tags)} catalog instances, = 0 at order 1", []


def _check_ele(max_order: int):
    tags = catalog_instances()
    for tag in tags:
        decomp = build_star_decomposition(CyclicGroupSpec.of(tag.order()))
        v, _ = graph_stats(decomp)
        holds, chain = e_le_check(energies(decomp), v)
        if not (holds and chain):
            return False, f"strict chain LE > |V| > E fails for {tag}", []
    for order in range(1, max_order + 1):
        decomp = build_star_decomposition(CyclicGroupSpec.of(order))
        v, _ = graph_stats(decomp)
        holds, _ = e_le_check(energies(decomp), v)
        if not holds:
            return False, f"E <= LE fails at order {order}", []
    return (
        True,
        f"LE > |V| > E for all {len(tags)} catalog instances; E <= LE for orders 1..{max_order}",
        [],
    )


def _check_flags():
    tags = catalog_instances()
    for tag in tags:
        er = energies(build_star_decomposition(CyclicGroupSpec.of(tag.order())))
        if not er.hypoenergetic:
            return False, f"{tag} not hypoenergetic", []
        if er.hyperenergetic or er.l_hyper or er.q_hyper or er.cn_hyper:
            return False, f"{tag} sets a hyper flag", []
    return True, f"hypoenergetic and no hyper flag for all {len(tags)} instances", []


def _check_traces(max_order: int):
    for order in range(1, max_order + 1):
        decomp = build_star_decomposition(CyclicGroupSpec.of(order))
        _, m = graph_stats(decomp)
        a = closed_form_spectrum(decomp, "A")
        if a.exact_trace() != 0:
            return False, f"adjacency trace nonzero at order {order}", []
        if a.exact_trace_of_squares() != 2 * m:
            return False, f"sum of squared adjacency eigenvalues != 2m at order {order}", []
        for kind in ("L", "Q"):
            if closed_form_spectrum(decomp, kind).exact_trace() != 2 * m:
                return False, f"{kind} trace != 2m at order {order}", []
        if closed_form_spectrum(decomp, "CN").exact_trace() != 0:
            return False, f"CN trace nonzero at order {order}", []
    return True, f"all four identities exact for orders 1..{max_order}", []


def cmd_verify(max_order: int = 30, tol: float = 1e-8) -> int:
    """Run every check group; one PASS/FAIL line each; exit 0 iff all pass."""
    if not 1 <= max_order <= BRUTE_FORCE_CAP:
        raise UsageError(f"--max-order must be in 1..{BRUTE_FORCE_CAP}")
    if not tol >= 0:
        raise UsageError(f"--tol must be non-negative, got {tol}")
    groups = (
        ("oracle equivalence", lambda: _check_oracle(max_order)),
        ("catalog agreement", _check_catalog),
        ("spectral cross-check", lambda: _check_spectral(max_order, tol)),
        ("HV margins", _check_hv),
        ("E-LE chain", lambda: _check_ele(max_order)),
        ("flag classifications", _check_flags),
        ("trace identities", lambda: _check_traces(max_order)),
    )
    all_ok = True
    for name, fn in groups:
        try:
            ok, detail, notes = fn()
        except Exception as exc:  # a failed precondition inside a group is a FAIL
            ok, detail, notes = False, f"{type(exc).__name__}: {exc}", []
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        for note in notes:
            print(f"NOTE {name}: {note}")
        all_ok = all_ok and ok
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def cmd_spectrum(order: int, kind: str, fmt: str = "plain", numeric: bool = False,
                 out: str | None = None) -> int:
    """Print the exact spectrum as (value)^multiplicity terms, descending."""
    if not 1 <= order <= MAX_GROUP_ORDER:
        raise UsageError(f"order must be in 1..{MAX_GROUP_ORDER}")
    try:
        decomp = build_star_decomposition(CyclicGroupSpec.of(order))
        spectrum = closed_form_spectrum(decomp, kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    pairs = spectrum.pairs
    if fmt == "plain":
        if numeric:
            lines = [f"({ev.render()})^{mult} {_fmt_float(ev.value)}" for ev, mult in pairs]
            text = "\n".join(lines) + "\n"
        else:
            text = " ".join(f"({ev.render()})^{mult}" for ev, mult in pairs) + "\n"
    elif fmt == "csv":
        header = "value,multiplicity,numeric" if numeric else "value,multiplicity"
        lines = [header]
        for evalue, mult in pairs:
            row = f"{evalue.render()},{mult}"
            if numeric:
                row += f",{_fmt_float(evalue.value)}"
            lines.append(row)
        text = "\n".join(lines) + "\n"
    else:
        payload = []
        for evalue, mult in pairs:
            obj = {"value": evalue.render(), "multiplicity": mult}
            if numeric:
                obj["numeric"] = float(_fmt_float(evalue.value))
            payload.append(obj)
        text = json.dumps(payload, indent=2) + "\n"
    _write_out(text, out)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgb",
        description=(
            "Subgroup generating bipartite graphs of finite cyclic groups: "
            "degree-based indices, exact spectra, energies, and verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="sweep a family and emit a table")
    rep.add_argument("--family", required=True, choices=("pn", "pq", "p2q", "p2q2", "all"))
    rep.add_argument("--p", help="comma-separated primes")
    rep.add_argument("--q", help="comma-separated primes")
    rep.add_argument("--n", help="comma-separated exponents (pn family)")
    rep.add_argument("--max-order", dest="max_order", type=int,
                     help="order bound (family 'all')")
    rep.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    rep.add_argument("--out", help="output path (default stdout)")

    ver = sub.add_parser("verify", help="run the verification suite")
    ver.add_argument("--max-order", dest="max_order", type=int, default=30)
    ver.add_argument("--tol", type=float, default=1e-8)

    spc = sub.add_parser("spectrum", help="print one exact spectrum")
    spc.add_argument("order", type=int)
    spc.add_argument("kind", help="A, L, Q or CN")
    spc.add_argument("--format", dest="fmt", choices=("plain", "csv", "json"),
                     default="plain")
    spc.add_argument("--numeric", action="store_true",
                     help="add a 9-significant-digit numeric column")
    spc.add_argument("--out", help="output path (default stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "report":
            return cmd_report(args.family, args.p, args.q, args.n, args.max_order,
                              args.fmt, args.out)
        if args.command == "verify":
            return cmd_verify(args.max_order, args.tol)
        return cmd_spectrum(args.order, args.kind, args.fmt, args.numeric, args.out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
