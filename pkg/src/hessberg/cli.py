"""Command-line front end: ``hessberg <command> [options]``.

Every command prints one JSON document (``--format json``, the default) or
the same values flattened to ``key: value`` lines (``--format table``).
Exit status: 0 on success, 2 for bad input, 3 when a size bound is hit,
4 when an internal cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from . import apolarity, charts, cohomology, volume as volmod
from .errors import HessbergError, InputError, InternalError, UnsupportedError
from .hessenberg import (HessenbergSpace, enumerate_hessenberg_spaces, from_hessenberg_function,
                         to_hessenberg_function, validate_hessenberg)
from .rootsys import (DEFAULT_WEYL_BOUND, RootSystem, Weight, WeylElement, WeylGroup,
                      build_root_system, element_from_word, parse_fraction)

SCHEMA = 1
CACHE_FORMAT = 1
CACHE_ENV = "HESSBERG_CACHE"

COMMANDS = ("roots", "hess", "volume", "degree", "class", "chi", "hilbert", "bwb", "charts",
            "conjugate", "betti", "verify")


# --- Weyl group cache ------------------------------------------------------------------

def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "hessberg"


def _cache_path(label: str) -> Path:
    return cache_dir() / f"weyl-{label}-v{CACHE_FORMAT}.json"


def load_weyl_group(rs: RootSystem, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
    """Weyl group of ``rs`` from the on-disk cache, computing and storing it on a miss."""
    if "_weyl" in rs.__dict__:
        return rs.weyl_group(bound)
    path = _cache_path(rs.label)
    try:
        data = json.loads(path.read_text())
        if data.get("format") != CACHE_FORMAT or data.get("label") != rs.label:
            raise ValueError("stale cache entry")
        elements = tuple(WeylElement(tuple(tuple(r) for r in m), ln, tuple(wd))
                         for m, ln, wd in data["elements"])
        longest = max(elements, key=lambda w: w.length)
        group = WeylGroup(elements, longest, tuple(data["star"]))
        if longest.length != rs.num_positive_roots or len(elements) > bound:
            raise ValueError("inconsistent cache entry")
        rs.set_weyl_group(group)
        return group
    except (OSError, ValueError, KeyError, TypeError):
        pass
    group = rs.weyl_group(bound)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"format": CACHE_FORMAT, "label": rs.label, "star": list(group.star),
                   "elements": [[w.matrix, w.length, w.reduced_word] for w in group]}
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload))
        tmp.replace(path)
    except OSError:
        pass
    return group


# --- argument parsing --------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def parse_weight(rs: RootSystem, text: str | None) -> Weight:
    """``"rho"``, ``"0"`` or comma-separated fundamental-weight coordinates."""
    if text is None:
        raise InputError("this command needs --weight")
    text = text.strip()
    if text == "rho":
        return rs.rho_weight
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if parts == ["0"]:
        parts = ["0"] * rs.rank
    if len(parts) != rs.rank:
        raise InputError(f"weight needs {rs.rank} coordinates, got {len(parts)}")
    return Weight(tuple(parse_fraction(p) for p in parts))


def parse_j_set(rs: RootSystem, text: str | None) -> frozenset:
    vals = _int_list(text or "")
    if any(not 1 <= v <= rs.rank for v in vals):
        raise InputError(f"J must list simple indices between 1 and {rs.rank}")
    return frozenset(v - 1 for v in vals)


def parse_weyl(rs: RootSystem, text: str | None) -> WeylElement:
    if text is None or text.strip() == "w0":
        return rs.weyl_group().longest
    text = text.strip()
    if text in ("", "e", "id"):
        return element_from_word(rs, ())
    word = []
    for tok in text.replace(",", " ").split():
        tok = tok.lstrip("s")
        if not tok.isdigit():
            raise InputError(f"cannot read Weyl word {text!r}; use e.g. 's1 s2 s1'")
        word.append(int(tok) - 1)
    return element_from_word(rs, word)


def parse_space(rs: RootSystem, args, required: bool = True) -> HessenbergSpace | None:
    if args.hfun is not None and args.roots is not None:
        raise InputError("give exactly one of --hfun or --roots")
    if args.hfun is not None:
        if not rs.label.startswith("A") or "x" in rs.label:
            raise InputError("--hfun needs a type A root system; use --roots otherwise")
        return from_hessenberg_function(rs.rank + 1, _int_list(args.hfun), rs)
    if args.roots is not None:
        text = sys.stdin.read() if args.roots == "-" else args.roots
        try:
            roots = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"--roots must be a JSON list of root vectors: {exc}") from exc
        if not isinstance(roots, list) or not all(isinstance(r, list) for r in roots):
            raise InputError("--roots must be a JSON list of root vectors")
        return validate_hessenberg(rs, roots)
    if required:
        raise InputError("this command needs --hfun or --roots")
    return None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_label", help="root system label, e.g. A2, B3, G2")
    common.add_argument("--scale", default="1", help="multiply the invariant form by this rational")
    common.add_argument("--hfun", help="type A Hessenberg function, e.g. 2,3 or 2,3,3")
    common.add_argument("--roots", help="JSON list of positive roots (simple-root coordinates); '-' reads stdin")
    common.add_argument("--weight", help="fundamental-weight coordinates, 'rho' or '0'")
    common.add_argument("--J", dest="j_set", default="", help="1-based simple indices of the nilpotent part")
    common.add_argument("--weyl", help="reduced word like 's1 s2 s1', 'e' or 'w0' (default)")
    common.add_argument("--method", help="volume: deriv|local|both; chi: tangent|kclass")
    common.add_argument("--seed", type=int, help="PRNG seed (each command has a fixed default)")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--max-rank", type=int, default=2, help="verify: largest rank to check")
    common.add_argument("--weyl-bound", type=int, default=DEFAULT_WEYL_BOUND)
    common.add_argument("--eliminate", action="store_true", help="charts: run the elimination at w0")
    common.add_argument("-t", dest="t_value", default="2", help="conjugate: the nonzero parameter t")
    common.add_argument("--jobs", type=int, default=1, help="verify: worker processes")

    parser = argparse.ArgumentParser(prog="hessberg",
                                     description="Regular Hessenberg varieties: volumes, degrees, "
                                                 "Euler characteristics, charts and Betti numbers.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "roots": "root system data", "hess": "validate or enumerate Hessenberg spaces",
        "volume": "volume polynomial and its value", "degree": "projective degree",
        "class": "Schubert expansion of the fundamental class", "chi": "Euler characteristic of L_lambda",
        "hilbert": "Hilbert polynomial", "bwb": "Borel-Weil-Bott on G/B",
        "charts": "type A chart equations", "conjugate": "conjugate x(t) to t x_J",
        "betti": "Betti numbers of the regular nilpotent variety", "verify": "cross-check battery",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


# --- output -----------------------------------------------------------------------------

def jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def flatten(obj, prefix: str = "") -> list[tuple[str, object]]:
    if isinstance(obj, dict):
        out = []
        for k, v in obj.items():
            out.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        out = []
        for i, v in enumerate(obj):
            out.extend(flatten(v, f"{prefix}[{i}]"))
        return out
    if isinstance(obj, list):
        return [(prefix, ",".join(str(v) for v in obj))]
    return [(prefix, obj)]


def render(report: dict, fmt: str) -> str:
    report = jsonable(report)
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False)
    rows = flatten(report)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {'' if v is None else v}" for k, v in rows)


def _weight_json(w: Weight) -> list:
    return list(w.fw_coords)


def _space_json(h: HessenbergSpace) -> dict:
    out = {"roots": [list(r) for r in h.roots()], "names": [r.name() for r in h.roots()],
           "dimension": h.dimension, "codimension": h.codimension}
    if h.rs.label.startswith("A") and "x" not in h.rs.label:
        out["hfun"] = to_hessenberg_function(h)
    return out


# --- commands -----------------------------------------------------------------------------

def _rs(args) -> RootSystem:
    if not args.type_label:
        raise InputError("this command needs --type")
    rs = build_root_system(args.type_label, parse_fraction(args.scale))
    return rs


def cmd_roots(args, rs):
    report = {"type": rs.label, "rank": rs.rank, "scale": rs.scale,
              "cartan": [list(r) for r in rs.cartan],
              "positive_roots": [{"index": k + 1, "root": list(r), "name": r.name(), "height": r.height}
                                 for k, r in enumerate(rs.positive_roots)],
              "rho": list(rs.rho)}
    group = load_weyl_group(rs, args.weyl_bound)
    report["weyl_order"] = len(group)
    report["length_histogram"] = group.length_histogram()
    inj = rs.height_injection
    inj.check(rs)
    report["height_injection"] = [{"from": a.name(), "to": b.name()}
                                  for a, b in sorted(inj.mapping.items(), key=lambda t: rs.index[t[0]])]
    return report


def cmd_hess(args, rs):
    h = parse_space(rs, args, required=False)
    if h is not None:
        return {"type": rs.label, "space": _space_json(h)}
    spaces = enumerate_hessenberg_spaces(rs)
    return {"type": rs.label, "count": len(spaces), "spaces": [_space_json(s) for s in spaces]}


def cmd_volume(args, rs):
    h = parse_space(rs, args)
    lam = parse_weight(rs, args.weight)
    method = args.method or "both"
    seed = volmod.DEFAULT_SEED if args.seed is None else args.seed
    load_weyl_group(rs, args.weyl_bound)
    vp = volmod.volume_polynomial(rs, h)
    values = {}
    if method in ("deriv", "both"):
        values["deriv"] = volmod.volume(vp, lam)
    if method in ("local", "both"):
        values["local"] = volmod.volume_localization(rs, h, lam, seed=seed)
    if not values:
        raise InputError(f"unknown volume method {method!r}; use deriv, local or both")
    if len(set(values.values())) > 1:
        raise InternalError(f"volume formulas disagree: {values}")
    return {"type": rs.label, "weight": _weight_json(lam), "seed": seed, "method": method,
            "volume": values, "polynomial": vp.p_h.to_json(),
            "polynomial_text": vp.p_h.to_string([f"a{i + 1}" for i in range(rs.rank)])}


def cmd_degree(args, rs):
    h = parse_space(rs, args)
    lam = parse_weight(rs, args.weight)
    load_weyl_group(rs, args.weyl_bound)
    return {"type": rs.label, "weight": _weight_json(lam), "dimension": h.dimension,
            "degree": cohomology.integrate_degree(rs, h, lam)}


def cmd_class(args, rs):
    h = parse_space(rs, args)
    load_weyl_group(rs, args.weyl_bound)
    exp = cohomology.euler_class_expansion(rs, h)
    return {"type": rs.label, "codimension": exp.degree, "support": exp.to_json()}


def cmd_chi(args, rs):
    h = parse_space(rs, args)
    lam = parse_weight(rs, args.weight)
    seed = volmod.DEFAULT_SEED if args.seed is None else args.seed
    method = args.method or "tangent"
    load_weyl_group(rs, args.weyl_bound)
    return {"type": rs.label, "weight": _weight_json(lam), "seed": seed, "method": method,
            "chi": cohomology.chi_line_bundle(rs, h, lam, seed=seed, method=method)}


def cmd_hilbert(args, rs):
    h = parse_space(rs, args)
    lam = parse_weight(rs, args.weight)
    seed = volmod.DEFAULT_SEED if args.seed is None else args.seed
    load_weyl_group(rs, args.weyl_bound)
    poly = cohomology.hilbert_polynomial(rs, h, lam, seed=seed)
    return {"type": rs.label, "weight": _weight_json(lam), "seed": seed,
            "coefficients": list(poly.coefficients), "text": poly.to_string()}


def cmd_bwb(args, rs):
    lam = parse_weight(rs, args.weight)
    load_weyl_group(rs, args.weyl_bound)
    res = cohomology.bwb_classify(rs, lam)
    out = {"type": rs.label, "weight": _weight_json(lam), "case": res.case}
    if res.case == "regular":
        out.update({"w": [i + 1 for i in res.w.reduced_word], "dot_weight": _weight_json(res.dominant_weight),
                    "cohomological_degree": res.cohomological_degree, "dimension": res.dimension})
    out["euler_characteristic"] = res.euler_characteristic
    return out


def cmd_charts(args, rs):
    h = parse_space(rs, args)
    j_set = parse_j_set(rs, args.j_set)
    seed = charts.DEFAULT_CHART_SEED if args.seed is None else args.seed
    load_weyl_group(rs, args.weyl_bound)
    x = charts.make_regular_element(rs, j_set, seed)
    w = parse_weyl(rs, args.weyl)
    gens = charts.chart_polynomials(x, h, w)
    out = {"type": rs.label, "J": sorted(j + 1 for j in j_set), "seed": seed,
           "semisimple_values": list(x.semisimple_values), "x": x.matrix()}
    out.update(gens.to_json(rs))
    if args.eliminate:
        rep = charts.eliminate_w0(gens, x)
        out["elimination"] = {
            "success": rep.success, "message": rep.message,
            "pivots": [{"root": a.name(), "variable": f"t{v + 1}", "case": c} for a, v, c in rep.pivots],
            "free_variables": [f"t{v + 1}" for v in rep.free_variables]}
        if not rep.success:
            raise InternalError("elimination failed: " + rep.message)
    return out


def cmd_conjugate(args, rs):
    j_set = parse_j_set(rs, args.j_set)
    seed = charts.DEFAULT_CHART_SEED if args.seed is None else args.seed
    t = parse_fraction(args.t_value)
    x = charts.make_regular_element(rs, j_set, seed)
    g, ok = charts.conjugate_line(x, t)
    return {"type": rs.label, "J": sorted(j + 1 for j in j_set), "seed": seed, "t": t,
            "x_J": x.matrix(), "g": g, "verified": ok}


def cmd_betti(args, rs):
    h = parse_space(rs, args)
    out = {"type": rs.label}
    out.update(apolarity.betti_numbers(rs, h).to_json())
    return out


# --- verify battery ---------------------------------------------------------------------

VERIFY_SYSTEMS = {1: ["A1"], 2: ["A2", "B2", "G2"], 3: ["A3", "B3", "C3"],
                  4: ["A4", "B4", "C4", "D4", "F4"]}
HEAVY_RANK = 3  # volume, degree and chi checks stop here
CONJUGATION_T = (Fraction(1), Fraction(2), Fraction(-1), Fraction(7, 3))


def _check(name: str, label: str, seed: int) -> dict:
    """Run one named check on one root system; returns a result record."""
    start = time.perf_counter()
    rs = build_root_system(label)
    try:
        detail = _CHECKS[name](rs, seed)
        ok = True
    except HessbergError as exc:
        detail, ok = f"{type(exc).__name__}: {exc}", False
    return {"check": name, "type": label, "ok": ok, "detail": detail,
            "seconds": round(time.perf_counter() - start, 3)}


def _check_injection(rs, seed):
    inj = rs.height_injection
    inj.check(rs)
    return f"{len(inj.mapping)} roots mapped"


def _check_wall(rs, seed):
    nonsimple = [r for r in rs.positive_roots if r.height >= 2]
    count = 0
    for p in (1, 2):
        for gammas in combinations(nonsimple, p):
            cohomology.check_rho_wall(rs, gammas)
            count += 1
    return f"{count} root sets"


def _random_weight(rs, rng):
    return Weight(tuple(rng.randint(1, 4) for _ in range(rs.rank)))


def _check_volume(rs, seed):
    rng = random.Random(seed)
    spaces = enumerate_hessenberg_spaces(rs)
    for h in spaces:
        for lam in (rs.rho_weight, _random_weight(rs, rng)):
            volmod.volume_both(rs, h, lam, seed=seed)
            cohomology.integrate_degree(rs, h, lam)
    return f"{len(spaces)} spaces"


def _check_chi(rs, seed):
    spaces = enumerate_hessenberg_spaces(rs)
    for h in spaces:
        val = cohomology.chi_line_bundle(rs, h, (0,) * rs.rank, seed=seed)
        if val != 1:
            raise InternalError(f"chi(O) = {val} for {h.describe()}")
    return f"{len(spaces)} spaces"


def _check_elimination(rs, seed):
    w0 = rs.weyl_group().longest
    count = 0
    for k in range(rs.rank + 1):
        for j_set in combinations(range(rs.rank), k):
            x = charts.make_regular_element(rs, j_set, seed)
            for h in enumerate_hessenberg_spaces(rs):
                rep = charts.eliminate_w0(charts.chart_polynomials(x, h, w0), x)
                if not rep.success or len(rep.free_variables) != h.dimension:
                    raise InternalError(f"elimination failed for J={sorted(j_set)}, {h.describe()}: "
                                        f"{rep.message}")
                count += 1
    return f"{count} charts"


def _check_conjugation(rs, seed):
    count = 0
    for k in range(rs.rank + 1):
        for j_set in combinations(range(rs.rank), k):
            x = charts.make_regular_element(rs, j_set, seed)
            for t in CONJUGATION_T:
                charts.conjugate_line(x, t)
                count += 1
    return f"{count} conjugations"


_CHECKS = {"height_injection": _check_injection, "rho_wall": _check_wall,
           "volume_degree": _check_volume, "chi_O": _check_chi,
           "elimination": _check_elimination, "conjugation": _check_conjugation}


def verify_tasks(max_rank: int) -> list[tuple[str, str]]:
    tasks = []
    for rank in range(1, max_rank + 1):
        for label in VERIFY_SYSTEMS.get(rank, []):
            tasks.append(("height_injection", label))
            tasks.append(("rho_wall", label))
            if rank <= HEAVY_RANK:
                tasks.append(("volume_degree", label))
                tasks.append(("chi_O", label))
            if label.startswith("A"):
                tasks.append(("elimination", label))
                tasks.append(("conjugation", label))
    return tasks


def cmd_verify(args, rs=None):
    if args.max_rank < 1:
        raise InputError("--max-rank must be at least 1")
    if args.max_rank > max(VERIFY_SYSTEMS):
        raise InputError(f"--max-rank is limited to {max(VERIFY_SYSTEMS)}")
    seed = volmod.DEFAULT_SEED if args.seed is None else args.seed
    tasks = verify_tasks(args.max_rank)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_check, *zip(*tasks), [seed] * len(tasks)))
    else:
        results = [_check(name, label, seed) for name, label in tasks]
    results.sort(key=lambda r: (r["type"], r["check"]))
    for r in results:
        r.pop("seconds")
    failed = [r for r in results if not r["ok"]]
    return {"max_rank": args.max_rank, "seed": seed, "checks": results,
            "passed": len(results) - len(failed), "failed": len(failed)}


HANDLERS = {"roots": cmd_roots, "hess": cmd_hess, "volume": cmd_volume, "degree": cmd_degree,
            "class": cmd_class, "chi": cmd_chi, "hilbert": cmd_hilbert, "bwb": cmd_bwb,
            "charts": cmd_charts, "conjugate": cmd_conjugate, "betti": cmd_betti,
            "verify": cmd_verify}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rs = None if args.command == "verify" else _rs(args)
        report = HANDLERS[args.command](args, rs)
    except UnsupportedError as exc:
        print(f"hessberg: unsupported: {exc}", file=stderr)
        return exc.exit_code
    except HessbergError as exc:
        print(f"hessberg: {type(exc).__name__}: {exc}", file=stderr)
        return exc.exit_code
    except Exception:  # noqa: BLE001 - any other failure is a bug; keep the traceback
        traceback.print_exc(file=stderr)
        return InternalError.exit_code
    report = {"schema": SCHEMA, "command": args.command, **report}
    print(render(report, args.format), file=stdout)
    if args.command == "verify" and report["failed"]:
        return InternalError.exit_code
    return 0


def main(argv=None) -> int:
    sys.exit(run(argv))
