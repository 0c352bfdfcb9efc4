"""``nutamari`` command line: enumeration, Hasse diagrams, sweeps and checks.

Every sweep fans out over nu with a process pool (``--jobs`` or the
``NUTAMARI_JOBS`` environment variable) and sorts the collected results
before printing, so the output does not depend on the worker count.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import distance as dist
from .degrees import (
    _in_degree,
    _out_degree,
    area_algorithm,
    dyck_path_algorithm,
    in_subposet,
    max_in_set,
    max_out_set,
    out_subposet,
    staircase_algorithm,
    subposet,
)
from .greedy import greedy_poset, greedy_up
from .maps import (
    bar_phi_iterates,
    bijection_record,
    m_dyck_nu,
    phi_in,
    phi_out,
    pi_embed,
)
from .paths import (
    LatticePath,
    PathError,
    _count_left_areas,
    _iter_left_areas,
    _left_area,
    _word_from_left_area,
    count_nu_dyck,
    enumerate_nu_dyck,
    parse_path,
    reverse_path,
)
from .posetcore import SizeCapExceeded, is_isomorphic, verify_order_iso
from .tamari import tamari_poset

__all__ = [
    "RunConfig",
    "TableCell",
    "VerifyResult",
    "UnknownTheorem",
    "THEOREMS",
    "nu_words",
    "table_cell",
    "cmd_table",
    "cmd_conjecture",
    "cmd_enumerate",
    "cmd_hasse",
    "cmd_verify",
    "main",
]

DEFAULT_TABLE_STEPS = 11
ENUMERATE_CAP = 200000
DEFAULT_NM = ((3, 2), (3, 3), (4, 2), (4, 3), (5, 2))


class UnknownTheorem(ValueError):
    pass


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    max_steps: int = 10
    parallelism: int = 1
    output_format: str = "text"
    trace: bool = False
    deep: bool = False

    def __post_init__(self):
        if self.max_steps < 1:
            raise UsageError("--max-steps must be at least 1")
        if self.parallelism < 1:
            raise UsageError("--jobs must be at least 1")
        if self.output_format not in ("json", "csv", "dot", "text"):
            raise UsageError(f"unknown format {self.output_format!r}")


@dataclass(frozen=True)
class TableCell:
    a: int
    b: int
    count: int
    witnesses: tuple[str, ...] = ()


@dataclass
class VerifyResult:
    theorem: str
    ok: bool
    checked: int
    witness: Optional[object] = None
    details: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "ok": self.ok,
            "checked": self.checked,
            "witness": self.witness,
            "details": self.details,
        }


# -- work queue ---------------------------------------------------------------


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    """``map`` over ``items``; the result order always follows the input order."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def nu_words(max_steps: int, min_steps: int = 1) -> list[str]:
    """All step words of length ``min_steps..max_steps`` in shortlex order."""
    out = []
    for length in range(min_steps, max_steps + 1):
        out.extend("".join(t) for t in itertools.product("EN", repeat=length))
    return out


def _shape_words(a: int, b: int) -> list[str]:
    """All words with ``a`` east and ``b`` north steps, lexicographic."""
    out = []
    for north in itertools.combinations(range(a + b), b):
        s = set(north)
        out.append("".join("N" if k in s else "E" for k in range(a + b)))
    return sorted(out)


# -- per-nu workers (module level so they pickle) -------------------------------


def _degree_counts(word: str) -> tuple[int, int, int, int, int]:
    """``(paths, max_in, |D_in|, max_out, |D_out|)`` for one nu."""
    la = _left_area(word)
    bounds = la + (word.count("E"),)
    ins, outs = Counter(), Counter()
    total = 0
    for v in _iter_left_areas(la):
        w = _word_from_left_area(v, bounds[-1])
        ins[_in_degree(w, bounds)] += 1
        outs[_out_degree(w)] += 1
        total += 1
    mi, mo = max(ins), max(outs)
    return total, mi, ins[mi], mo, outs[mo]


def _flag_nu(word: str) -> Optional[str]:
    """Return ``word`` when no nu' weakly above it has exactly |D_in| paths."""
    c = _degree_counts(word)[2]
    la = _left_area(word)
    for v in _iter_left_areas(la):
        if _count_left_areas(v) == c:
            return None
    return word


def _conjecture_row(word: str) -> tuple[str, int, int, int, int]:
    total, mi, n_in, mo, n_out = _degree_counts(word)
    sigma = staircase_algorithm(LatticePath(word)).size
    return word, sigma, n_in, n_out, total


def _sweep_same_algo(word: str) -> Optional[str]:
    a, ta = area_algorithm(word, trace=False)
    b, tb = dyck_path_algorithm(word, trace=False)
    return None if (a.word == b.word and len(ta) == len(tb)) else word


def _sweep_maxdeg(word: str) -> Optional[str]:
    nu = LatticePath(word)
    sigma = staircase_algorithm(nu).size
    _, mi, _, mo, _ = _degree_counts(word)
    terminal, _ = area_algorithm(nu, trace=False)
    ok = mi == mo == sigma == _in_degree(terminal.word, nu.bounds)
    return None if ok else word


def _sweep_reversal(word: str) -> Optional[str]:
    p = tamari_poset(LatticePath(word), max_size=None)
    q = tamari_poset(reverse_path(LatticePath(word)), max_size=None)
    return None if is_isomorphic(p, q) is not None else word


def _sweep_reversal_dual(word: str) -> Optional[str]:
    p = tamari_poset(LatticePath(word), max_size=None)
    q = tamari_poset(reverse_path(LatticePath(word)), max_size=None)
    return None if is_isomorphic(p, q.dual()) is not None else word


# -- commands -----------------------------------------------------------------


def table_cell(a: int, b: int, jobs: int = 1) -> TableCell:
    flagged = [w for w in _pmap(_flag_nu, _shape_words(a, b), jobs) if w is not None]
    return TableCell(a, b, len(flagged), tuple(sorted(flagged)))


def cmd_table(a_max: int, b_max: int, config: RunConfig) -> dict[tuple[int, int], Optional[TableCell]]:
    """Cells ``(a, b)``; cells over the step cap map to ``None`` unless ``deep``."""
    cells = {}
    cap = None if config.deep else DEFAULT_TABLE_STEPS
    for a in range(1, a_max + 1):
        for b in range(1, b_max + 1):
            if cap is not None and a + b > cap:
                cells[(a, b)] = None
            else:
                cells[(a, b)] = table_cell(a, b, config.parallelism)
    return cells


def cmd_conjecture(config: RunConfig) -> dict:
    rows = _pmap(_conjecture_row, nu_words(config.max_steps), config.parallelism)
    counter = [r[0] for r in rows if r[2] != r[3]]
    tallies: dict[tuple[int, int], list[int]] = {}
    for word, _sigma, n_in, n_out, _ in rows:
        key = (word.count("E"), word.count("N"))
        t = tallies.setdefault(key, [0, 0])
        t[0] += 1
        t[1] += n_in == n_out
    return {
        "max_steps": config.max_steps,
        "checked": len(rows),
        "counterexamples": sorted(counter),
        "shapes": [
            {"a": a, "b": b, "nus": t[0], "equal": t[1]} for (a, b), t in sorted(tallies.items())
        ],
        "rows": rows,
    }


def cmd_enumerate(nu_word: str, config: RunConfig) -> dict:
    nu = parse_path(nu_word)
    total = count_nu_dyck(nu)
    if total > ENUMERATE_CAP and not config.deep:
        raise SizeCapExceeded(f"{total} paths; pass --deep to list them anyway")
    paths = list(enumerate_nu_dyck(nu))
    listing = []
    for d in paths:
        listing.append(
            {"word": d.word, "la": list(d.la), "in": _in_degree(d.word, nu.bounds), "out": _out_degree(d.word)}
        )
    out = {
        "nu": nu.word,
        "count": len(paths),
        "dp_count": count_nu_dyck(nu),
        "sigma": staircase_algorithm(nu).size,
        "in_histogram": dict(sorted(Counter(r["in"] for r in listing).items())),
        "out_histogram": dict(sorted(Counter(r["out"] for r in listing).items())),
        "paths": listing,
    }
    if config.trace:
        _, tr = area_algorithm(nu)
        out["area_trace"] = [{"i": s.i, "j": s.j, "h": s.h, "ra": list(s.ra)} for s in tr.steps]
    return out


def cmd_hasse(nu_word: str, which: str) -> str:
    nu = parse_path(nu_word)
    if which == "tamari":
        poset = tamari_poset(nu)
    elif which == "greedy":
        poset = greedy_poset(nu)
    elif which == "in-sub":
        poset = in_subposet(nu)
    elif which == "out-sub":
        poset = out_subposet(nu)
    else:
        raise UsageError(f"unknown diagram {which!r}")
    n_east = nu.n_east

    def label(la):
        return _word_from_left_area(la, n_east)

    return poset.to_dot(name=f"{which} {nu.word}", label=label)


# -- verification suites ---------------------------------------------------------


def _sweep_check(theorem: str, worker: Callable, config: RunConfig) -> VerifyResult:
    words = nu_words(config.max_steps)
    bad = [w for w in _pmap(worker, words, config.parallelism) if w is not None]
    return VerifyResult(theorem, not bad, len(words), bad[0] if bad else None, [{"failures": len(bad)}])


def _nm_pairs(params: dict) -> list[tuple[int, int]]:
    if params.get("n") is not None and params.get("m") is not None:
        return [(params["n"], params["m"])]
    return list(DEFAULT_NM)


def _heights(params: dict) -> list[int]:
    if params.get("height") is not None:
        return [params["height"]]
    return [3, 4, 5]


def verify_out_iso(params: dict, config: RunConfig) -> VerifyResult:
    res = VerifyResult("out-iso", True, 0)
    for n, m in _nm_pairs(params):
        nu, low = m_dyck_nu(n, m), m_dyck_nu(n, m - 1)
        dom = subposet(tamari_poset(nu), max_out_set(nu))
        cod = tamari_poset(low)
        f = {d.la: phi_out(d).la for d in max_out_set(nu)}
        ok, pair = verify_order_iso(dom, cod, f)
        res.checked += len(dom)
        wit = None if ok else [_word_from_left_area(p, nu.n_east) for p in pair]
        res.details.append(bijection_record(n, m, "out->tamari", ok, wit))
        if not ok and res.ok:
            res.ok, res.witness = False, wit
    return res


def verify_in_iso(params: dict, config: RunConfig) -> VerifyResult:
    res = VerifyResult("in-iso", True, 0)
    for n, m in _nm_pairs(params):
        nu, low = m_dyck_nu(n, m), m_dyck_nu(n, m - 1)
        dom = subposet(tamari_poset(nu), max_in_set(nu))
        f = {d.la: phi_in(d).la for d in max_in_set(nu)}
        ok, pair = verify_order_iso(dom, greedy_poset(low), f)
        res.checked += len(dom)
        wit = None if ok else [_word_from_left_area(p, nu.n_east) for p in pair]
        res.details.append(bijection_record(n, m, "in->greedy", ok, wit))
        if not ok and res.ok:
            res.ok, res.witness = False, wit
        # the same map is not order preserving into the Tamari order
        t_ok, t_pair = verify_order_iso(dom, tamari_poset(low), f)
        t_wit = None if t_ok else [_word_from_left_area(p, nu.n_east) for p in t_pair]
        res.details.append(bijection_record(n, m, "in->tamari", t_ok, t_wit))
    return res


def _distance_check(theorem: str, params: dict, greedy: bool) -> VerifyResult:
    res = VerifyResult(theorem, True, 0)
    for h in _heights(params):
        nu = LatticePath("NE" * h)
        poset = greedy_poset(nu) if greedy else tamari_poset(nu)
        paths = list(enumerate_nu_dyck(nu))
        crit = dist.greedy_leq_by_distance if greedy else dist.tamari_leq_by_distance
        for d in paths:
            for e in paths:
                res.checked += 1
                if crit(d, e) != poset.leq(d.la, e.la) and res.ok:
                    res.ok, res.witness = False, [d.word, e.word]
        res.details.append({"height": h, "paths": len(paths)})
    return res


def verify_cover_update(params: dict, config: RunConfig) -> VerifyResult:
    res = VerifyResult("cover-update", True, 0)
    heights = range(1, (params.get("height") or 5) + 1)
    for h in heights:
        nu = LatticePath("NE" * h)
        for d in enumerate_nu_dyck(nu):
            for i in range(1, h + 1):
                e = greedy_up(d, i)
                if e is None:
                    continue
                res.checked += 1
                actual = (dist.touch_distance_vector(e), dist.hit_distance_vector(e))
                if dist.gup_distance_update(d, i) != actual and res.ok:
                    res.ok, res.witness = False, [d.word, i]
    return res


def verify_phibar_update(params: dict, config: RunConfig) -> VerifyResult:
    res = VerifyResult("phibar-update", True, 0)
    pairs = _nm_pairs(params) if params.get("n") else [(3, 2)]
    for n, m in pairs:
        for d in sorted(max_in_set(m_dyck_nu(n, m)), key=lambda p: p.la):
            its = bar_phi_iterates(pi_embed(d), m, n, variant="ne")
            for i in range(n):
                res.checked += 1
                cur, nxt = dist.dyck_path(its[i]), dist.dyck_path(its[i + 1])
                if dist.phibar_distance_step(cur, i, m, n) != dist.phibar_stage_distances(nxt, i + 1):
                    if res.ok:
                        res.ok, res.witness = False, [its[i], i]
        res.details.append({"nm": [n, m]})
    return res


THEOREMS = (
    "same-algo",
    "maxdeg",
    "out-iso",
    "in-iso",
    "distance-tamari",
    "distance-greedy",
    "cover-update",
    "phibar-update",
    "reversal-iso",
    "reversal-dual-iso",
)


def cmd_verify(theorem_id: str, params: dict, config: RunConfig) -> VerifyResult:
    if theorem_id == "same-algo":
        return _sweep_check(theorem_id, _sweep_same_algo, config)
    if theorem_id == "maxdeg":
        return _sweep_check(theorem_id, _sweep_maxdeg, config)
    if theorem_id == "reversal-iso":
        return _sweep_check(theorem_id, _sweep_reversal, config)
    if theorem_id == "reversal-dual-iso":
        return _sweep_check(theorem_id, _sweep_reversal_dual, config)
    if theorem_id == "out-iso":
        return verify_out_iso(params, config)
    if theorem_id == "in-iso":
        return verify_in_iso(params, config)
    if theorem_id == "distance-tamari":
        return _distance_check(theorem_id, params, greedy=False)
    if theorem_id == "distance-greedy":
        return _distance_check(theorem_id, params, greedy=True)
    if theorem_id == "cover-update":
        return verify_cover_update(params, config)
    if theorem_id == "phibar-update":
        return verify_phibar_update(params, config)
    raise UnknownTheorem(f"unknown theorem id {theorem_id!r}; choose from {', '.join(THEOREMS)}")


# -- rendering ------------------------------------------------------------------


def _csv(header: list[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def render_table(cells: dict, fmt: str, witnesses: bool = False) -> str:
    done = [c for c in cells.values() if c is not None]
    if fmt == "csv":
        return _csv(["a", "b", "count"], [(c.a, c.b, c.count) for c in done])
    if fmt == "json":
        return _dump(
            [{"a": c.a, "b": c.b, "count": c.count, "witnesses": list(c.witnesses)} for c in done]
        )
    if fmt != "text":
        raise UsageError(f"format {fmt!r} not supported by table")
    a_max = max(a for a, _ in cells)
    b_max = max(b for _, b in cells)
    lines = ["a\\b " + " ".join(f"{b:>4}" for b in range(1, b_max + 1))]
    for a in range(1, a_max + 1):
        vals = []
        for b in range(1, b_max + 1):
            c = cells[(a, b)]
            vals.append(f"{'-' if c is None else c.count:>4}")
        lines.append(f"{a:>3} " + " ".join(vals))
    if witnesses:
        for c in done:
            if c.witnesses:
                lines.append(f"({c.a},{c.b}): " + " ".join(c.witnesses))
    return "\n".join(lines) + "\n"


def render_enumerate(data: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(data)
    if fmt == "csv":
        return _csv(
            ["word", "la", "in_degree", "out_degree"],
            [(p["word"], " ".join(map(str, p["la"])), p["in"], p["out"]) for p in data["paths"]],
        )
    if fmt != "text":
        raise UsageError(f"format {fmt!r} not supported by enumerate")
    lines = [f"{p['word']}  LA={tuple(p['la'])}  in={p['in']} out={p['out']}" for p in data["paths"]]
    lines.append(f"nu: {data['nu']}")
    lines.append(f"count: {data['count']}")
    lines.append(f"sigma: {data['sigma']}")
    lines.append("in-degree histogram: " + ", ".join(f"{k}:{v}" for k, v in data["in_histogram"].items()))
    lines.append("out-degree histogram: " + ", ".join(f"{k}:{v}" for k, v in data["out_histogram"].items()))
    for s in data.get("area_trace", []):
        lines.append(f"area step i={s['i']} j={s['j']} h={s['h']} RA={tuple(s['ra'])}")
    return "\n".join(lines) + "\n"


def render_conjecture(data: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump({k: v for k, v in data.items() if k != "rows"})
    if fmt == "csv":
        return _csv(["nu_word", "sigma", "n_in", "n_out", "n_paths"], data["rows"])
    if fmt != "text":
        raise UsageError(f"format {fmt!r} not supported by conjecture")
    lines = [f"checked {data['checked']} nu with at most {data['max_steps']} steps"]
    for s in data["shapes"]:
        lines.append(f"  ({s['a']},{s['b']}): {s['equal']}/{s['nus']} with |D_in| = |D_out|")
    if data["counterexamples"]:
        lines.append("counterexamples: " + " ".join(data["counterexamples"]))
    else:
        lines.append("no counterexamples")
    return "\n".join(lines) + "\n"


def render_verify(res: VerifyResult, fmt: str) -> str:
    if fmt == "json":
        return _dump(res.to_json())
    if fmt != "text":
        raise UsageError(f"format {fmt!r} not supported by verify")
    status = "PASS" if res.ok else "FAIL"
    line = f"{status} {res.theorem} ({res.checked} checks)"
    if res.witness is not None:
        line += f" witness: {res.witness}"
    lines = [line]
    for d in res.details:
        if "direction" in d:
            tag = "ok" if d["ok"] else f"not an isomorphism, witness {d['witness']}"
            lines.append(f"  {d['nm']} {d['direction']}: {tag}")
    return "\n".join(lines) + "\n"


# -- argument parsing -------------------------------------------------------------


def _env_jobs() -> int:
    raw = os.environ.get("NUTAMARI_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "dot", "text"], default=None)
    common.add_argument("--max-steps", type=int, default=None)
    common.add_argument("--jobs", type=int, default=None)
    common.add_argument("--trace", action="store_true")
    common.add_argument("--deep", action="store_true")

    parser = argparse.ArgumentParser(prog="nutamari", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list all nu-Dyck paths")
    p.add_argument("nu")

    p = sub.add_parser("table", parents=[common], help="count nu with no matching D_nu'")
    p.add_argument("--a-max", type=int, default=6)
    p.add_argument("--b-max", type=int, default=6)
    p.add_argument("--cell", type=int, nargs=2, metavar=("A", "B"), help="compute a single cell")
    p.add_argument("--witnesses", action="store_true")

    sub.add_parser("conjecture", parents=[common], help="compare |D_in| and |D_out|")

    p = sub.add_parser("verify", parents=[common], help="run a theorem check")
    p.add_argument("theorem")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--height", type=int)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram as Graphviz DOT")
    p.add_argument("nu")
    p.add_argument("--which", choices=["tamari", "greedy", "in-sub", "out-sub"], default="tamari")
    return parser


_DEFAULT_STEPS = {"conjecture": 10, "verify": 10, "enumerate": 10, "table": 12, "hasse": 10}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        max_steps = args.max_steps
        if max_steps is None:
            reversal = args.command == "verify" and args.theorem.startswith("reversal")
            max_steps = 8 if reversal else _DEFAULT_STEPS[args.command]
        fmt = args.format or ("dot" if args.command == "hasse" else "text")
        config = RunConfig(
            max_steps=max_steps,
            parallelism=args.jobs if args.jobs is not None else _env_jobs(),
            output_format=fmt,
            trace=args.trace,
            deep=args.deep,
        )
        code = 0
        if args.command == "enumerate":
            out = render_enumerate(cmd_enumerate(args.nu, config), fmt)
        elif args.command == "table":
            if args.cell:
                a, b = args.cell
                cells = {(a, b): table_cell(a, b, config.parallelism)}
                out = render_table(cells, fmt, args.witnesses or config.trace) if fmt != "text" else _render_one(cells[(a, b)], args.witnesses)
            else:
                cells = cmd_table(args.a_max, args.b_max, config)
                out = render_table(cells, fmt, args.witnesses or config.trace)
        elif args.command == "conjecture":
            data = cmd_conjecture(config)
            out = render_conjecture(data, fmt)
            code = 1 if data["counterexamples"] else 0
        elif args.command == "verify":
            params = {"n": args.n, "m": args.m, "height": args.height}
            res = cmd_verify(args.theorem, params, config)
            out = render_verify(res, fmt)
            code = 0 if res.ok else 1
        else:
            if fmt != "dot":
                raise UsageError("hasse only writes DOT")
            out = cmd_hasse(args.nu, args.which)
    except (UsageError, UnknownTheorem, PathError, SizeCapExceeded) as exc:
        print(f"nutamari: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


def _render_one(cell: TableCell, witnesses: bool) -> str:
    line = f"({cell.a},{cell.b}) = {cell.count}"
    if witnesses and cell.witnesses:
        line += ": " + " ".join(cell.witnesses)
    return line + "\n"


if __name__ == "__main__":
    sys.exit(main())
