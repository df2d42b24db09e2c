"""Command line front end: dualize, implicitize, inventory, classify, report, sketch, corpus run.

Input files hold one curve record, a list of records, or {"records": [...]}.
A record is

    {"name": ..., "role": "primal" | "dual",
     "parametrization": [[c0, c1, ...], [...], [...]],   # rational strings, low to high
     "declared_inventory": {...},                         # instead of, or next to, a parametrization
     "expected": {...}}                                   # fixture assertions

Exit codes: 0 success, 1 malformed input, 2 degenerate or improper curve,
3 fixture assertion failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .branches import artifacts, build_inventory
from .classifier import TARGET_C, TARGET_CL, DeclaredInventory, classify, render_certificate
from .exactforms import NFElem, Poly, as_rat, rat_str
from .exactforms.elim import isolate_roots
from .ratcurves import (
    DegenerateCurve,
    ImproperParametrization,
    InconsistentInventory,
    ParamCurve,
    dual_data,
    dualize,
    implicitize,
    validate_proper,
)

EXIT_OK, EXIT_MALFORMED, EXIT_DEGENERATE, EXIT_FIXTURE = 0, 1, 2, 3


class MalformedInput(ValueError):
    pass


# records -------------------------------------------------------------------

@dataclass
class CurveRecord:
    name: str
    role: str = "primal"
    param: ParamCurve | None = None
    declared: DeclaredInventory | None = None
    expected: dict = field(default_factory=dict)

    def primal(self) -> ParamCurve:
        """The curve C itself."""
        if self.param is None:
            raise MalformedInput(f"{self.name}: record has no parametrization")
        return self.param if self.role == "primal" else dualize(self.param)

    def checked(self) -> ParamCurve:
        if self.param is None:
            raise MalformedInput(f"{self.name}: record has no parametrization")
        k = validate_proper(self.param)
        if k != 1:
            raise ImproperParametrization(k)
        return self.param

    def classify(self) -> tuple:
        if self.param is not None:
            return classify(self.checked(), self.role)
        return classify(self.declared)


def _parse_row(row, name):
    if not isinstance(row, list):
        raise MalformedInput(f"{name}: each coordinate is a list of coefficients")
    out = []
    for c in row:
        if isinstance(c, bool) or not isinstance(c, (str, int)):
            raise MalformedInput(f"{name}: coefficient {c!r} is not an exact rational string")
        try:
            out.append(as_rat(c))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInput(f"{name}: cannot parse {c!r}") from exc
    return Poly(out)


def parse_record(obj) -> CurveRecord:
    if not isinstance(obj, dict):
        raise MalformedInput("a record must be a JSON object")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise MalformedInput("record needs a non-empty 'name'")
    role = obj.get("role", "primal")
    if role not in ("primal", "dual"):
        raise MalformedInput(f"{name}: role must be 'primal' or 'dual'")
    rec = CurveRecord(name, role, expected=obj.get("expected") or {})
    if "parametrization" in obj:
        rows = obj["parametrization"]
        if not isinstance(rows, list) or len(rows) != 3:
            raise MalformedInput(f"{name}: parametrization needs three coordinate lists")
        g = [_parse_row(r, name) for r in rows]
        try:
            rec.param = ParamCurve(*g)
        except DegenerateCurve:
            raise
        except ValueError as exc:
            raise MalformedInput(f"{name}: {exc}") from exc
    if "declared_inventory" in obj:
        try:
            rec.declared = DeclaredInventory.from_json(obj["declared_inventory"])
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InconsistentInventory):
                raise
            raise MalformedInput(f"{name}: bad declared_inventory: {exc}") from exc
    if rec.param is None and rec.declared is None:
        raise MalformedInput(f"{name}: needs a parametrization or a declared_inventory")
    return rec


def load_records(paths) -> list:
    out = []
    for path in paths:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise MalformedInput(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"{path}: invalid JSON: {exc}") from exc
        out.extend(_records_in(data))
    return out


def _records_in(data) -> list:
    if isinstance(data, dict) and "records" in data:
        data = data["records"]
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise MalformedInput("expected a record, a list of records or {'records': [...]}")
    return [parse_record(r) for r in data]


def packaged_corpus() -> list:
    text = resources.files("dualscope").joinpath("fixtures/corpus.json").read_text(encoding="utf-8")
    return _records_in(json.loads(text))


# commands ------------------------------------------------------------------

def _poly_json(p: Poly) -> list:
    return [rat_str(c) for c in p.c] if p.c else ["0"]


def cmd_dualize(rec: CurveRecord) -> dict:
    C = rec.checked()
    dd = dual_data(C)
    return {
        "name": rec.name,
        "role": "dual" if rec.role == "primal" else "primal",
        "parametrization": dd.curve.to_json(),
        "degree": dd.curve.n,
        "content": _poly_json(dd.content),
        "content_order_at_infinity": dd.infinity_order,
    }


def cmd_implicitize(rec: CurveRecord) -> dict:
    C = rec.checked()
    F = implicitize(C)
    names = ("x0", "x1", "x2") if rec.role == "primal" else ("y0", "y1", "y2")
    return {"name": rec.name, "degree": C.n, "equation": F.to_str(names), "terms": F.to_json()}


def cmd_inventory(rec: CurveRecord) -> dict:
    if rec.param is None:
        n = rec.declared.validate()
        return {"name": rec.name, "declared": rec.declared.to_json(), "d_star": n}
    rec.checked()
    C = rec.primal()
    inv = build_inventory(C)
    out = inv.to_json()
    out["name"] = rec.name
    out["artifacts"] = [ln.to_json() for ln in artifacts(C)]
    pa = (inv.d - 1) * (inv.d - 2) // 2
    out["genus_relation"] = {"arithmetic_genus": pa, "delta": inv.delta, "kappa": inv.kappa,
                             "remainder": pa - inv.delta - inv.kappa}
    return out


def cmd_classify(rec: CurveRecord) -> dict:
    js = rec.classify()
    return {"name": rec.name, "judgments": [j.to_json() for j in js], "_judgments": js}


def cmd_report(records) -> dict:
    rows = []
    for rec in records:
        row = {"name": rec.name, "role": rec.role}
        if rec.param is not None:
            rec.checked()
            inv = build_inventory(rec.primal())
            row.update(d=inv.d, d_star=inv.d_star, kappa=inv.kappa, delta=inv.delta)
        else:
            row.update(d=rec.declared.d, d_star=rec.declared.validate(), g=rec.declared.g)
        jc, jl = rec.classify()
        row["verdicts"] = {
            j.target: {"verdict": j.verdict.value, "kobayashi_upgrade": j.kobayashi_upgrade,
                       "notes": [v.value for v in j.notes]}
            for j in (jc, jl)
        }
        rows.append(row)
    return {"records": rows}


# fixture assertions --------------------------------------------------------

def check_expected(rec: CurveRecord) -> list:
    """Mismatches between the record's expectations and what the tool computes."""
    exp = rec.expected
    bad = []
    if TARGET_C in exp or TARGET_CL in exp:
        judged = {j.target: j for j in rec.classify()}
        for target in (TARGET_C, TARGET_CL):
            want = exp.get(target)
            if not want:
                continue
            j = judged[target]
            if "verdict" in want and j.verdict.value != want["verdict"]:
                bad.append(f"{target}: verdict {j.verdict.value}, expected {want['verdict']}")
            if "kobayashi_upgrade" in want and j.kobayashi_upgrade != want["kobayashi_upgrade"]:
                bad.append(f"{target}: kobayashi_upgrade {j.kobayashi_upgrade}, expected {want['kobayashi_upgrade']}")
            for g in want.get("gates", []):
                if g not in j.fired():
                    bad.append(f"{target}: gate {g} did not fire")
            for g in want.get("failed_gates", []):
                gate = j.gate(g)
                if gate is None or gate.satisfied:
                    bad.append(f"{target}: gate {g} should be recorded as failed")
            for v in want.get("notes", []):
                if v not in [x.value for x in j.notes]:
                    bad.append(f"{target}: note {v} missing")
            if want.get("witness") and not (j.detail and "witness" in j.detail):
                bad.append(f"{target}: no witness reported")
    if "inventory" in exp:
        inv = build_inventory(rec.primal()).to_json()
        for k, v in exp["inventory"].items():
            if inv.get(k) != v:
                bad.append(f"inventory {k} = {inv.get(k)}, expected {v}")
    if "dual_degree" in exp:
        got = dualize(rec.checked()).n
        if got != exp["dual_degree"]:
            bad.append(f"dual degree {got}, expected {exp['dual_degree']}")
    return bad


def cmd_corpus_run(records) -> tuple:
    rows, failed = [], 0
    for rec in records:
        bad = check_expected(rec)
        failed += bool(bad)
        rows.append({"name": rec.name, "status": "FAIL" if bad else "PASS", "mismatches": bad})
    return {"records": rows, "failed": failed, "total": len(records)}, failed


# sketch --------------------------------------------------------------------

SVG_SIZE = 400
VIEW_LIMIT = 10.0  # affine coordinates beyond this are dropped from the picture
SVG_BANNER = "non-authoritative sketch: floating-point samples of the real locus, not an exact result"


def _fval(p: Poly, t: float) -> float:
    acc = 0.0
    for c in reversed(p.c):
        acc = acc * t + float(c)
    return acc


def _real_lines(line) -> list:
    """Real members of an artifact line family as float triples."""
    coords = line.line
    if not any(isinstance(c, NFElem) for c in coords):
        return [tuple(float(c) for c in coords)]
    mp = line.place.poly
    out = []
    for (lo, im_lo), (hi, im_hi) in isolate_roots(mp, Fraction(1, 10**12)):
        if im_lo != 0 or im_hi != 0:
            continue
        r = float((lo + hi) / 2)
        out.append(tuple(_fval(c.p, r) if isinstance(c, NFElem) else float(c) for c in coords))
    return out


def _clip_line(a, b, c, box):
    """Segment of a X + b Y + c = 0 inside box = (x0, x1, y0, y1)."""
    x0, x1, y0, y1 = box
    pts = []
    if abs(b) > 1e-15:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if abs(a) > 1e-15:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    pts = sorted(set((round(x, 9), round(y, 9)) for x, y in pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def sketch_svg(C: ParamCurve, lines, chart: int = 2, window=(-3.0, 3.0), samples: int = 400) -> str:
    if chart not in (0, 1, 2):
        raise MalformedInput("chart must be 0, 1 or 2")
    if samples < 2:
        raise MalformedInput("need at least two samples")
    i, j = [k for k in range(3) if k != chart]
    a, b = window
    limit = VIEW_LIMIT
    strokes, cur = [], []
    for k in range(samples):
        t = a + (b - a) * k / (samples - 1)
        x = [_fval(p, t) for p in C.g]
        if abs(x[chart]) < 1e-12 or abs(x[i] / x[chart]) > limit or abs(x[j] / x[chart]) > limit:
            if len(cur) > 1:
                strokes.append(cur)
            cur = []
            continue
        cur.append((x[i] / x[chart], x[j] / x[chart]))
    if len(cur) > 1:
        strokes.append(cur)
    pts = [p for s in strokes for p in s]
    if pts:
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        box = [min(xs), max(xs), min(ys), max(ys)]
    else:
        box = [-1.0, 1.0, -1.0, 1.0]
    for lo, hi in ((0, 1), (2, 3)):
        if box[hi] - box[lo] < 1e-9:
            box[lo] -= 1.0
            box[hi] += 1.0
        pad = 0.1 * (box[hi] - box[lo])
        box[lo] -= pad
        box[hi] += pad
    x0, x1, y0, y1 = box
    m = 10.0
    scale = (SVG_SIZE - 2 * m) / max(x1 - x0, y1 - y0)

    def sx(x):
        return f"{m + (x - x0) * scale:.2f}"

    def sy(y):
        return f"{SVG_SIZE - m - (y - y0) * scale:.2f}"

    names = [f"x{i}/x{chart}", f"x{j}/x{chart}"]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- {SVG_BANNER} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<text x="12" y="24" font-size="11">chart x{chart} = 1, horizontal {names[0]}, vertical {names[1]}, '
        f't in [{a:g}, {b:g}]</text>',
    ]
    for s in strokes:
        d = "M" + " L".join(f"{sx(x)} {sy(y)}" for x, y in s)
        out.append(f'<path d="{d}" fill="none" stroke="black" stroke-width="1.5"/>')
    for ln in lines:
        for coords in _real_lines(ln):
            la, lb, lc = coords[i], coords[j], coords[chart]
            if abs(la) < 1e-15 and abs(lb) < 1e-15:
                # the line at infinity of this chart: drawn as a dashed frame
                out.append(
                    f'<rect x="3" y="3" width="{SVG_SIZE - 6}" height="{SVG_SIZE - 6}" fill="none" '
                    f'stroke="red" stroke-dasharray="6 4"/>'
                )
                out.append(f'<text x="12" y="{SVG_SIZE - 12}" font-size="11" fill="red">x{chart} = 0 '
                           f'(line at infinity)</text>')
                continue
            seg = _clip_line(la, lb, lc, box)
            if seg is None:
                continue
            (ax, ay), (bx, by) = seg
            out.append(f'<line x1="{sx(ax)}" y1="{sy(ay)}" x2="{sx(bx)}" y2="{sy(by)}" stroke="red" '
                       f'stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# text rendering ------------------------------------------------------------

def _text(command: str, result) -> str:
    if command == "classify":
        parts = []
        for item in result:
            parts.append(f"== {item['name']}\n")
            for j in item["_judgments"]:
                parts.append(render_certificate(j, "text"))
        return "".join(parts)
    if command == "report":
        lines = []
        for r in result["records"]:
            v = r["verdicts"]
            lines.append(f"{r['name']}: d={r['d']} d*={r['d_star']}  C: {v[TARGET_C]['verdict']}"
                         f"  C+L: {v[TARGET_CL]['verdict']}")
        return "\n".join(lines) + "\n"
    if command == "corpus":
        lines = [f"{r['status']} {r['name']}" + "".join(f"\n    {m}" for m in r["mismatches"])
                 for r in result["records"]]
        lines.append(f"{result['total'] - result['failed']}/{result['total']} passed")
        return "\n".join(lines) + "\n"
    if command == "implicitize":
        return "".join(f"{r['name']}: {r['equation']} = 0\n" for r in result)
    if command == "dualize":
        return "".join(
            f"{r['name']}: (" + " : ".join(Poly([as_rat(c) for c in p]).to_str() for p in r["parametrization"])
            + f"), degree {r['degree']}\n" for r in result)
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in result)


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="PATH")
    p = argparse.ArgumentParser(prog="dualscope", description="Exact analysis of rational plane curves and their duals.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("dualize", "dual parametrization"),
        ("implicitize", "implicit equation of the given parametrization"),
        ("inventory", "singularities, flexes, nodes and artifact lines of C"),
        ("classify", "verdicts for P^2 minus C and P^2 minus C and its artifact lines"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("files", nargs="+")
    s = sub.add_parser("report", parents=[common], help="aggregate a corpus (default: the bundled fixtures)")
    s.add_argument("files", nargs="*")
    s = sub.add_parser("sketch", parents=[common], help="SVG of the real locus of C and its artifact lines")
    s.add_argument("files", nargs=1)
    s.add_argument("--chart", type=int, default=2)
    s.add_argument("--range", nargs=2, type=float, default=(-3.0, 3.0), metavar=("A", "B"))
    s.add_argument("--samples", type=int, default=400)
    s = sub.add_parser("corpus", parents=[common], help="fixture assertions")
    s.add_argument("action", choices=("run",))
    s.add_argument("files", nargs="*")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # "corpus run --format text a.json": argparse leaves files after options unparsed
        if extra:
            if any(x.startswith("-") for x in extra) or args.command == "sketch":
                parser.error("unrecognized arguments: " + " ".join(extra))
            args.files = list(args.files) + extra
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; 2 is reserved for degenerate curves
        return EXIT_OK if exc.code in (0, None) else EXIT_MALFORMED
    try:
        return _dispatch(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except InconsistentInventory as exc:
        print(f"error: inconsistent inventory: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (DegenerateCurve, ImproperParametrization) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


def _dispatch(args) -> int:
    cmd = args.command
    if cmd in ("report", "corpus") and not args.files:
        records = packaged_corpus()
    else:
        records = load_records(args.files)
    if cmd == "sketch":
        if len(records) != 1:
            raise MalformedInput("sketch takes exactly one record")
        rec = records[0]
        rec.checked()
        C = rec.primal()
        lo, hi = args.range
        _emit(sketch_svg(C, artifacts(C), args.chart, (lo, hi), args.samples), args.out)
        return EXIT_OK
    if cmd == "report":
        result = cmd_report(records)
        _emit(dump_json(result) if args.format == "json" else _text("report", result), args.out)
        return EXIT_OK
    if cmd == "corpus":
        result, failed = cmd_corpus_run(records)
        _emit(dump_json(result) if args.format == "json" else _text("corpus", result), args.out)
        return EXIT_FIXTURE if failed else EXIT_OK
    fn = {"dualize": cmd_dualize, "implicitize": cmd_implicitize, "inventory": cmd_inventory,
          "classify": cmd_classify}[cmd]
    results = [fn(r) for r in records]
    if args.format == "text":
        _emit(_text(cmd, results), args.out)
    else:
        for r in results:
            r.pop("_judgments", None)
        _emit(dump_json(results[0] if len(results) == 1 else results), args.out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
