"""Command-line front end.

Exit codes carry the mathematical verdict so shell pipelines can branch on
them: 0 for success / positive verdict, 1 for a negative verdict (no
certificate, window countermodel, unconfirmed obstruction, replay mismatch),
2 for usage or input errors.

Every subcommand can emit a JSON report (``--json`` to stdout, ``--out`` to a
file) of the form {"kind", "inputs", "result"}; ``verify`` recomputes the
result from the inputs and demands bit-exact agreement.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ToolkitError
from .exactmat import (
    QMatrix,
    format_qmat,
    matrix_from_json,
    matrix_to_json,
    rat,
    rat_str,
    read_qmat,
)
from .duality import image_to_kernel, ipr_projector, kernel_projector
from .families import ApFamily, ap_integer_c, ap_matrix, ap_projector_pair, check_notg
from .oracle import (
    image_solutions,
    image_supports,
    kernel_solutions,
    kernel_supports,
    parse_semigroup,
    window_pr,
)
from .rado import ColumnsCertificate, MpcParams, columns_condition, mpc_matrix, mpc_row_count, verify_cc_certificate


def _compute(kind: str, inputs: dict) -> dict:
    """Recompute a report result from its inputs (shared with ``verify``)."""
    if kind == "cc":
        a = matrix_from_json(inputs["matrix"])
        cert = columns_condition(a, domain=inputs.get("domain", "N"))
        return {
            "found": cert is not None,
            "certificate": None if cert is None else cert.to_json(),
            "verified": cert is not None and verify_cc_certificate(a, cert),
        }
    if kind == "dualize-i2k":
        a = matrix_from_json(inputs["matrix"])
        return {"B": matrix_to_json(image_to_kernel(a))}
    if kind == "dualize-k2i":
        b = matrix_from_json(inputs["matrix"])
        proj = kernel_projector(b)
        return proj.to_json()
    if kind == "projector":
        a = matrix_from_json(inputs["matrix"])
        return {"C": matrix_to_json(ipr_projector(a))}
    if kind == "mpc":
        params = MpcParams(m=int(inputs["m"]), p=int(inputs["p"]), c=int(inputs["c"]))
        return {"matrix": matrix_to_json(mpc_matrix(params)), "row_count": mpc_row_count(params)}
    if kind == "window":
        a = matrix_from_json(inputs["matrix"])
        n = int(inputs["n"])
        mode = inputs["mode"]
        if mode == "kernel":
            supports = kernel_supports(a, n)
        else:
            supports = image_supports(a, n, int(inputs.get("denom_cap", 1)))
        witness = window_pr(n, supports, int(inputs["colors"]))
        return {
            "supports": sorted(sorted(s) for s in supports),
            **witness.to_json(),
        }
    if kind == "family-ap":
        d, rows = int(inputs["d"]), int(inputs["rows"])
        a = ap_matrix(ApFamily(d=d, truncation=rows))
        result = {"A": matrix_to_json(a)}
        if rows >= 3:
            b, c = ap_projector_pair(d, rows)
            result["B"] = matrix_to_json(b)
            result["C"] = matrix_to_json(c)
        if d >= 2:
            result["C_integer"] = matrix_to_json(ap_integer_c(d, rows))
        return result
    if kind == "notg":
        report = check_notg(parse_semigroup(inputs["spec"]))
        return report.to_json()
    raise ToolkitError(f"unknown report kind {kind!r}")


def _emit(args, kind: str, inputs: dict, result: dict, text: str) -> None:
    report = {"kind": kind, "inputs": inputs, "result": result}
    payload = json.dumps(report, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if getattr(args, "json", False):
        print(payload)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _matrix_block(label: str, a: QMatrix) -> str:
    return f"{label}:\n{format_qmat(a)}"


def _cmd_cc(args) -> int:
    a = read_qmat(args.matrix)
    inputs = {"matrix": matrix_to_json(a), "domain": args.domain}
    result = _compute("cc", inputs)
    if result["found"]:
        cert = ColumnsCertificate.from_json(result["certificate"])
        blocks = " ".join("{" + ",".join(str(i) for i in b) + "}" for b in cert.partition)
        lines = [f"columns condition over {args.domain}: satisfied", f"partition: {blocks}"]
        for t, w in enumerate(cert.witnesses, start=1):
            earlier = sorted(i for b in cert.partition[:t] for i in b)
            terms = " + ".join(f"({rat_str(cf)})*c{i}" for cf, i in zip(w, earlier))
            lines.append(f"block {t} sum = {terms}")
        lines.append(f"verified: {result['verified']}")
        _emit(args, "cc", inputs, result, "\n".join(lines))
        return 0
    _emit(args, "cc", inputs, result, f"columns condition over {args.domain}: not satisfied")
    return 1


def _cmd_dualize_i2k(args) -> int:
    a = read_qmat(args.matrix)
    inputs = {"matrix": matrix_to_json(a)}
    result = _compute("dualize-i2k", inputs)
    _emit(args, "dualize-i2k", inputs, result, _matrix_block("B", matrix_from_json(result["B"])))
    return 0


def _cmd_dualize_k2i(args) -> int:
    b = read_qmat(args.matrix)
    inputs = {"matrix": matrix_to_json(b)}
    result = _compute("dualize-k2i", inputs)
    shown = result["D"] if args.compress else result["C"]
    label = "D (compressed projector)" if args.compress else "C (kernel projector)"
    text = f"T: {result['T']}\n" + _matrix_block(label, matrix_from_json(shown))
    _emit(args, "dualize-k2i", inputs, result, text)
    return 0


def _cmd_projector(args) -> int:
    a = read_qmat(args.matrix)
    inputs = {"matrix": matrix_to_json(a)}
    result = _compute("projector", inputs)
    _emit(args, "projector", inputs, result, _matrix_block("C", matrix_from_json(result["C"])))
    return 0


def _cmd_mpc(args) -> int:
    inputs = {"m": args.m, "p": args.p, "c": args.c}
    result = _compute("mpc", inputs)
    text = f"rows: {result['row_count']}\n" + _matrix_block("matrix", matrix_from_json(result["matrix"]))
    _emit(args, "mpc", inputs, result, text)
    return 0


def _cmd_oracle(args) -> int:
    if args.oracle_command == "window":
        a = read_qmat(args.matrix)
        inputs = {
            "matrix": matrix_to_json(a),
            "n": args.n,
            "colors": args.colors,
            "mode": args.mode,
            "denom_cap": args.denom_cap,
        }
        result = _compute("window", inputs)
        if result["verdict"]:
            text = f"window 1..{args.n}, {args.colors} colors ({args.mode}): every coloring hits a solution"
            _emit(args, "window", inputs, result, text)
            return 0
        classes: dict[int, list[int]] = {}
        for value, color in enumerate(result["bad_coloring"], start=1):
            classes.setdefault(color, []).append(value)
        parts = " | ".join(",".join(map(str, classes[c])) for c in sorted(classes))
        text = (f"window 1..{args.n}, {args.colors} colors ({args.mode}): countermodel found\n"
                f"bad coloring: {{{parts}}}")
        _emit(args, "window", inputs, result, text)
        return 1
    if args.oracle_command == "member":
        spec = parse_semigroup(args.spec)
        value = rat(args.value)
        ok = spec.membership(value)
        print(f"{rat_str(value)} {'in' if ok else 'not in'} {spec}")
        return 0 if ok else 1
    if args.oracle_command == "solutions":
        a = read_qmat(args.matrix)
        if args.mode == "kernel":
            for x in kernel_solutions(a, args.n):
                print(str(x))
        else:
            for x, image in image_solutions(a, args.n, args.denom_cap):
                print(f"{x} -> {image}")
        return 0
    raise ToolkitError(f"unknown oracle action {args.oracle_command!r}")


def _cmd_family(args) -> int:
    if args.family == "ap":
        if args.d is None or args.rows is None:
            raise ToolkitError("--family ap needs --d and --rows")
        inputs = {"d": args.d, "rows": args.rows}
        result = _compute("family-ap", inputs)
        chunks = [_matrix_block("A", matrix_from_json(result["A"]))]
        if "B" in result:
            chunks.append(_matrix_block("B (dependencies)", matrix_from_json(result["B"])))
            chunks.append(_matrix_block("C (compressed projector)", matrix_from_json(result["C"])))
        if "C_integer" in result:
            chunks.append(_matrix_block("C (integer companion)", matrix_from_json(result["C_integer"])))
        _emit(args, "family-ap", inputs, result, "\n".join(chunks))
        return 0
    if args.family == "notg":
        if not args.spec:
            raise ToolkitError("--family notg needs --spec")
        inputs = {"spec": args.spec}
        result = _compute("notg", inputs)
        member_str = ", ".join(str(m) for m in result["witness_membership"])
        text = (f"branch: {result['branch']} (d={result['d']})\n"
                + _matrix_block("A", matrix_from_json(result["matrix"]))
                + f"scaled target: ({' '.join(result['scaled_target'])})\n"
                f"forced preimage: ({' '.join(result['witness'])})\n"
                f"preimage membership: {member_str}\n"
                f"obstruction confirmed: {result['confirmed']}")
        _emit(args, "notg", inputs, result, text)
        return 0 if result["confirmed"] else 1
    raise ToolkitError(f"unknown family {args.family!r}")


def _cmd_verify(args) -> int:
    with open(args.report, "r", encoding="utf-8") as fh:
        report = json.load(fh)
    try:
        kind, inputs, recorded = report["kind"], report["inputs"], report["result"]
    except (KeyError, TypeError):
        raise ToolkitError("report must contain 'kind', 'inputs', and 'result'") from None
    recomputed = _compute(kind, inputs)
    if recomputed == recorded:
        print(f"verify: {kind} report reproduced exactly")
        return 0
    print(f"verify: {kind} report MISMATCH")
    print(json.dumps({"recorded": recorded, "recomputed": recomputed}, indent=2, sort_keys=True))
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prdual",
        description="kernel/image partition regularity toolkit (exact rational arithmetic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_report_flags(p):
        p.add_argument("--json", action="store_true", help="print the JSON report instead of text")
        p.add_argument("--out", help="also write the JSON report to this path")

    p_cc = sub.add_parser("cc", help="decide the columns condition with a certificate")
    cc_sub = p_cc.add_subparsers(dest="cc_command", required=True)
    p_cc_check = cc_sub.add_parser("check", help="check a .qmat matrix")
    p_cc_check.add_argument("matrix", help="matrix file (.qmat)")
    p_cc_check.add_argument("--domain", choices=["N", "Z", "Q"], default="N")
    add_report_flags(p_cc_check)
    p_cc_check.set_defaults(func=_cmd_cc)

    p_i2k = sub.add_parser("dualize-i2k", help="image-side matrix to kernel-side dependency matrix")
    p_i2k.add_argument("matrix")
    add_report_flags(p_i2k)
    p_i2k.set_defaults(func=_cmd_dualize_i2k)

    p_k2i = sub.add_parser("dualize-k2i", help="kernel-side matrix to image-side projector")
    p_k2i.add_argument("matrix")
    p_k2i.add_argument("--compress", action="store_true", help="print the compressed projector")
    add_report_flags(p_k2i)
    p_k2i.set_defaults(func=_cmd_dualize_k2i)

    p_proj = sub.add_parser("projector", help="idempotent projector with the column space of the input")
    p_proj.add_argument("matrix")
    add_report_flags(p_proj)
    p_proj.set_defaults(func=_cmd_projector)

    p_mpc = sub.add_parser("mpc", help="generate the (m,p,c) row-family matrix")
    p_mpc.add_argument("--m", type=int, required=True)
    p_mpc.add_argument("--p", type=int, required=True)
    p_mpc.add_argument("--c", type=int, required=True)
    add_report_flags(p_mpc)
    p_mpc.set_defaults(func=_cmd_mpc)

    p_oracle = sub.add_parser("oracle", help="finite-window brute-force checks")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p_window = oracle_sub.add_parser("window", help="does every coloring of 1..N hit a solution?")
    p_window.add_argument("--matrix", required=True)
    p_window.add_argument("--n", type=int, required=True)
    p_window.add_argument("--colors", type=int, default=2)
    p_window.add_argument("--mode", choices=["kernel", "image"], default="kernel")
    p_window.add_argument("--denom-cap", dest="denom_cap", type=int, default=1)
    add_report_flags(p_window)
    p_window.set_defaults(func=_cmd_oracle)
    p_member = oracle_sub.add_parser("member", help="semigroup membership")
    p_member.add_argument("--spec", required=True, help="semigroup literal, e.g. Z, 2Z, 3N, gen(2,3)")
    p_member.add_argument("--value", required=True, help="rational, e.g. 7 or 2/3")
    p_member.set_defaults(func=_cmd_oracle)
    p_solutions = oracle_sub.add_parser("solutions", help="list window solutions")
    p_solutions.add_argument("--matrix", required=True)
    p_solutions.add_argument("--n", type=int, required=True)
    p_solutions.add_argument("--mode", choices=["kernel", "image"], default="kernel")
    p_solutions.add_argument("--denom-cap", dest="denom_cap", type=int, default=1)
    p_solutions.set_defaults(func=_cmd_oracle)

    p_family = sub.add_parser("family", help="built-in matrix families and their verifications")
    p_family.add_argument("--family", choices=["ap", "notg"], required=True)
    p_family.add_argument("--d", type=int, help="progression step (ap)")
    p_family.add_argument("--rows", type=int, help="truncation (ap)")
    p_family.add_argument("--spec", help="semigroup literal (notg)")
    add_report_flags(p_family)
    p_family.set_defaults(func=_cmd_family)

    p_verify = sub.add_parser("verify", help="replay a JSON report and compare bit-exactly")
    p_verify.add_argument("report")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
