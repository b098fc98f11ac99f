"""Command-line front end: ``singlet {basis,act,matrix,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import oracle as O
from .basis import SingletLabelSU2, SingletLabelSU3, enumerate_su2, enumerate_su3, irreps
from .opexpr import OpError, parse
from .sqrtrational import SqrtRational
from .su2 import act_su2, norm_sq_su2
from .su3 import act_su3, norm_sq_su3


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _coeff(c: SqrtRational, want_float: bool) -> dict:
    out = c.to_json()
    if want_float:
        out["float_lossy"] = f"{float(c):.15g}"
    return out


def _labels(group: str, w_max: int):
    return enumerate_su2(w_max) if group == "su2" else enumerate_su3(w_max)


def _parse_label(group: str, text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"label is not valid JSON: {exc}") from exc
    cls = SingletLabelSU2 if group == "su2" else SingletLabelSU3
    return cls.from_json(obj)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- transitions -----------------------------------------------------------------

def transitions(group: str, op_text: str, label, via_oracle: bool = False) -> list:
    """[(target, SqrtRational)] for op|label>, from the closed forms or the oracle."""
    op = parse(op_text, group)
    if group == "su2":
        if via_oracle:
            s_l = O.norm_sq(label)
            return [(t, SqrtRational.from_rational(c) * SqrtRational.sqrt(O.norm_sq(t) / s_l))
                    for t, c in sorted(O.oracle_unnormalized_su2(op.factors, label).items(),
                                       key=lambda kv: kv[0].sort_key())]
        return [(t.target, t.coeff) for t in act_su2(op, label)]
    if via_oracle:
        s_l = O.norm_sq(label)
        return [(t, SqrtRational.from_rational(c) * SqrtRational.sqrt(O.norm_sq(t) / s_l))
                for t, c in sorted(O.oracle_unnormalized_su3(op.factors, label).items(),
                                   key=lambda kv: kv[0].sort_key())]
    return [(t.target, t.coeff) for t in act_su3(op, label)]


# -- commands --------------------------------------------------------------------

def cmd_basis(group: str, w_max: int, fmt: str = "json") -> str:
    rows = []
    for l in _labels(group, w_max):
        if group == "su2":
            rows.append({"label": l.to_json(), "norm_sq": _frac(norm_sq_su2(l)), "n": list(l.ns)})
        else:
            rows.append({"label": l.to_json(), "norm_sq": _frac(norm_sq_su3(l)),
                         "irreps": [list(pq) for pq in irreps(l)]})
    if fmt == "csv":
        fields = list(rows[0]["label"]) if rows else []
        extra = "n" if group == "su2" else "irreps"
        return _csv(fields + ["norm_sq", extra],
                    [list(r["label"].values()) + [r["norm_sq"], json.dumps(r[extra])] for r in rows])
    return _dump({"group": group, "w_max": w_max, "labels": rows})


def cmd_act(group: str, op_text: str, label, fmt: str = "json", via_oracle: bool = False,
            want_float: bool = False) -> str:
    trs = transitions(group, op_text, label, via_oracle)
    if fmt == "csv":
        head = list(label._fields) + ["sign", "radicand"] + (["float_lossy"] if want_float else [])
        rows = []
        for t, c in trs:
            cj = _coeff(c, want_float)
            rows.append(list(t) + [cj["sign"], cj["radicand"]] + ([cj["float_lossy"]] if want_float else []))
        return _csv(head, rows)
    return _dump({
        "group": group, "op": str(parse(op_text, group)), "label": label.to_json(),
        "source": "oracle" if via_oracle else "closed_form",
        "transitions": [{"target": t.to_json(), "coeff": _coeff(c, want_float)} for t, c in trs],
    })


def matrix_entries(group: str, op_text: str, w_max: int, via_oracle: bool = False) -> list:
    """Sorted (row=target, col=source, coeff); targets outside the cutoff are dropped."""
    labels = _labels(group, w_max)
    keep = set(labels)
    entries = [(t, l, c) for l in labels for t, c in transitions(group, op_text, l, via_oracle) if t in keep]
    entries.sort(key=lambda e: (e[0].sort_key(), e[1].sort_key()))
    return entries


def cmd_matrix(group: str, op_text: str, w_max: int, fmt: str = "json", via_oracle: bool = False,
               want_float: bool = False) -> str:
    entries = matrix_entries(group, op_text, w_max, via_oracle)
    if fmt == "csv":
        fields = list((SingletLabelSU2 if group == "su2" else SingletLabelSU3)._fields)
        head = [f"row_{f}" for f in fields] + [f"col_{f}" for f in fields] + ["sign", "radicand"]
        head += ["float_lossy"] if want_float else []
        rows = []
        for r, c, x in entries:
            cj = _coeff(x, want_float)
            rows.append(list(r) + list(c) + [cj["sign"], cj["radicand"]]
                        + ([cj["float_lossy"]] if want_float else []))
        return _csv(head, rows)
    return _dump({
        "group": group, "w_max": w_max, "op": str(parse(op_text, group)),
        "truncation": "targets with weight above w_max are omitted",
        "entries": [{"row": r.to_json(), "col": c.to_json(), "coeff": _coeff(x, want_float)}
                    for r, c, x in entries],
    })


def cmd_verify(group: str, w_max: int, fmt: str = "text") -> tuple[str, int]:
    from .validate import run_verify

    checks, records = run_verify(group, w_max)
    passed = all(c.passed for c in checks)
    if fmt == "json":
        text = _dump({
            "group": group, "w_max": w_max, "passed": passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
            "discrepancies": [r.to_json() for r in records],
        })
    elif fmt == "csv":
        def part(c):
            return ["", ""] if c is None else [c.sign, _frac(c.radicand)]
        text = _csv(["formula", "label", "paper_sign", "paper_radicand", "oracle_sign", "oracle_radicand",
                     "paper_ref", "note"],
                    [[r.formula, json.dumps(r.label.to_json())] + part(r.paper) + part(r.oracle)
                     + [r.paper_ref, r.note] for r in records])
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in checks]
        lines.append(f"reference-formula discrepancies: {len(records)}")
        counts: dict = {}
        for r in records:
            counts[r.formula] = counts.get(r.formula, 0) + 1
        lines += [f"  {k}: {v}" for k, v in sorted(counts.items())]
        lines.append("verify: " + ("PASS" if passed else "FAIL"))
        text = "\n".join(lines) + "\n"
    return text, 0 if passed else 1


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="singlet", description="Exact SU(2)/SU(3) three-leg singlet bases.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, op=False, label=False, wmax=True):
        sp.add_argument("--group", choices=("su2", "su3"), default="su3")
        if wmax:
            sp.add_argument("--wmax", type=int, required=True,
                            help="weight cutoff (SU(2): cutoff on n1+n2+n3)")
        if op:
            sp.add_argument("--op", required=True, help='operator, e.g. "a+(1).b+(2)" or "eps(a+(3),b(2),a+(2))"')
        if label:
            sp.add_argument("--label", required=True, help='JSON label, e.g. \'{"l12": 1}\'')
        sp.add_argument("--out", help="write output to this path instead of stdout")

    sp = sub.add_parser("basis", help="list basis labels with norms and leg irreps")
    common(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    for name, helptext in (("act", "apply an operator to one basis state"),
                           ("matrix", "sparse operator matrix on the truncated basis")):
        sp = sub.add_parser(name, help=helptext)
        common(sp, op=True, label=name == "act", wmax=name == "matrix")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--via-oracle", action="store_true", help="compute with the brute-force Fock oracle")
        sp.add_argument("--float", action="store_true", help="add a lossy 15-digit decimal column")

    sp = sub.add_parser("verify", help="check the closed forms against the oracle")
    common(sp)
    sp.add_argument("--format", choices=("json", "csv"), default=None,
                    help="json report, or csv of discrepancy records (default: text summary)")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "wmax", None) is not None and args.wmax < 0:
        print("error: --wmax must be non-negative", file=sys.stderr)
        return 2
    code = 0
    try:
        if args.command == "basis":
            text = cmd_basis(args.group, args.wmax, args.format)
        elif args.command == "act":
            label = _parse_label(args.group, args.label)
            text = cmd_act(args.group, args.op, label, args.format, args.via_oracle, args.float)
        elif args.command == "matrix":
            text = cmd_matrix(args.group, args.op, args.wmax, args.format, args.via_oracle, args.float)
        else:
            text, code = cmd_verify(args.group, args.wmax, args.format or "text")
    except (OpError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
