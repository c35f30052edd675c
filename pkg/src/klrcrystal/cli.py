"""Command-line front end: ``klrcrystal <group> <command> [flags]``.

Weights and root vectors are comma-separated coefficient lists in the
datum's label order.  Errors are written to stderr as ``ERROR <code> <detail>``;
exit status is 0 on success, 1 on validation or usage errors and 2 when a
resource cap is hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .cartan import CartanDatum, DominantWeight, RootVector, load_datum
from .charcalc import Character, char_simple_ci_j, char_stats, serre_apply, shuffle
from .errors import AxiomViolation, KlrCrystalError, UsageError

COMMANDS = {
    "datum": ("validate",),
    "char": ("simple", "shuffle", "stats", "serre"),
    "klr": ("multiply", "dim", "cyclotomic-dim", "nilpotency"),
    "crystal": ("graph", "mult", "verify"),
}
FORMATS = ("text", "json", "csv", "dot")
CAP_ENV = "KLR_CRYSTAL_CAP_MB"
PRODUCTS_PER_MB = 1000  # rough footprint of one reduced spanning product


@dataclass
class JobConfig:
    group: str
    command: str
    datum_path: str
    datum: CartanDatum
    nu: RootVector | None = None
    Lambda: DominantWeight | None = None
    i: str | None = None
    j: str | None = None
    c: int | None = None
    n: int | None = None
    r: int | None = None
    depth: int | None = None
    max_deg: int | None = None
    suites: tuple = ()
    inputs: list = field(default_factory=list)
    fmt: str = "text"
    output: str | None = None
    cap_mb: int | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="klrcrystal", description=__doc__.splitlines()[0])
    p.add_argument("group", choices=sorted(COMMANDS))
    p.add_argument("command")
    p.add_argument("inputs", nargs="*", help="JSON input files (characters or KLR elements)")
    p.add_argument("--datum", required=True, help="datum JSON file or bundled name (a2.json)")
    p.add_argument("--nu")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--i")
    p.add_argument("--j")
    p.add_argument("--c", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, help="strand index for nilpotency")
    p.add_argument("--depth", type=int)
    p.add_argument("--max-deg", type=int, dest="max_deg")
    p.add_argument("--suite", action="append", help="axiom suite (repeatable)")
    p.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
    p.add_argument("--output")
    return p


def resolve_datum_path(name: str) -> Path:
    path = Path(name)
    if path.exists():
        return path
    bundled = resources.files("klrcrystal") / "data" / path.name
    if bundled.is_file():
        return Path(str(bundled))
    raise UsageError(f"--datum: no such file {name!r}")


def _coeff_list(flag: str, text: str, d: CartanDatum) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None
    if len(vals) != d.rank:
        raise UsageError(f"{flag}: expected {d.rank} coefficients, got {len(vals)}")
    if any(v < 0 for v in vals):
        raise UsageError(f"{flag}: coefficients must be nonnegative, got {text!r}")
    return vals


def _require(cfg_args, *names):
    for name in names:
        if getattr(cfg_args, name) is None:
            flag = "--" + {"lam": "lambda", "max_deg": "max-deg"}.get(name, name)
            raise UsageError(f"{flag} is required for this command")


_NEEDS = {
    ("char", "simple"): ("i", "j", "c", "n"),
    ("char", "serre"): ("i", "j", "c"),
    ("klr", "dim"): ("nu", "max_deg"),
    ("klr", "cyclotomic-dim"): ("nu", "lam"),
    ("klr", "nilpotency"): ("nu", "lam"),
    ("crystal", "mult"): ("nu",),
}


def parse_config(argv: list[str]) -> JobConfig:
    """Parse and validate a command line against its datum."""
    a = _build_parser().parse_args(argv)
    if a.command not in COMMANDS[a.group]:
        raise UsageError(f"unknown command {a.group} {a.command!r}; "
                         f"choose from {', '.join(COMMANDS[a.group])}")
    _require(a, *_NEEDS.get((a.group, a.command), ()))
    path = resolve_datum_path(a.datum)
    d = load_datum(path)
    cfg = JobConfig(a.group, a.command, str(path), d, fmt=a.fmt, output=a.output,
                    inputs=list(a.inputs), c=a.c, n=a.n, r=a.r, depth=a.depth, max_deg=a.max_deg)
    if a.nu is not None:
        cfg.nu = d.root_vector(_coeff_list("--nu", a.nu, d))
    if a.lam is not None:
        cfg.Lambda = d.dominant_weight(_coeff_list("--lambda", a.lam, d))
    for flag in ("i", "j"):
        v = getattr(a, flag)
        if v is not None:
            if v not in d.labels:
                raise UsageError(f"--{flag}: unknown vertex {v!r}")
            setattr(cfg, flag, v)
    for flag in ("c", "n", "depth", "max_deg"):
        v = getattr(a, flag)
        if v is not None and v < 0:
            raise UsageError(f"--{flag.replace('_', '-')} must be nonnegative")
    if a.r is not None and a.r < 1:
        raise UsageError("--r must be at least 1")
    if a.suite:
        from .crystal.verify import SUITES
        bad = [s for s in a.suite if s.upper() not in SUITES]
        if bad:
            raise UsageError(f"--suite: unknown suite {bad[0]!r}")
        cfg.suites = tuple(s.upper() for s in a.suite)
    cap = os.environ.get(CAP_ENV)
    if cap is not None:
        try:
            cfg.cap_mb = int(cap)
        except ValueError:
            raise UsageError(f"{CAP_ENV} must be a positive integer") from None
        if cfg.cap_mb <= 0:
            raise UsageError(f"{CAP_ENV} must be a positive integer")
    needs_inputs = {("char", "shuffle"): 2, ("char", "stats"): 1, ("klr", "multiply"): 2}
    k = needs_inputs.get((cfg.group, cfg.command))
    if k is not None and len(cfg.inputs) != k:
        raise UsageError(f"{cfg.group} {cfg.command} takes {k} input file(s)")
    if k is None and cfg.inputs and (cfg.group, cfg.command) != ("char", "serre"):
        raise UsageError(f"unexpected positional arguments {cfg.inputs}")
    return cfg


# ---- emission helpers


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg}") from None


def _char_text(ch: Character) -> str:
    items = list(ch.items())
    if not items:
        return "0\n"
    return "".join(f"{_word_text(w)}\t{c}\n" for w, c in items)


def _word_text(w: tuple) -> str:
    if not w:
        return "()"
    return "".join(w) if all(len(x) == 1 for x in w) else ",".join(w)


def _emit_char(ch: Character, fmt: str) -> str:
    if fmt == "json":
        return _json(ch.to_json())
    if fmt == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["word", "coeff"])
        for w, c in ch.items():
            out.writerow([" ".join(w), json.dumps(c.to_json(), sort_keys=True)])
        return buf.getvalue()
    return _char_text(ch)


def _graded_text(graded: dict) -> str:
    return ";".join(f"{k}:{v}" for k, v in sorted(graded.items()))


def _caps(cfg: JobConfig):
    from .klr.cyclotomic import Caps

    kw = {}
    if cfg.cap_mb is not None:
        kw["max_products"] = cfg.cap_mb * PRODUCTS_PER_MB
    if cfg.max_deg is not None:
        kw["max_degree"] = cfg.max_deg
    return Caps(**kw)


def _coords_text(d: CartanDatum, x) -> str:
    return ",".join(str(v) for v in d.coords(x))


# ---- command implementations


def _datum_validate(cfg: JobConfig) -> str:
    d = cfg.datum
    if cfg.fmt == "json":
        out = d.to_json()
        out["cartan"] = [[d.cartan_entry(i, j) for j in d.labels] for i in d.labels]
        out["d"] = {i: d.d(i) for i in d.labels}
        return _json(out)
    return "ok\n"


def _char_simple(cfg: JobConfig) -> str:
    return _emit_char(char_simple_ci_j(cfg.datum, cfg.i, cfg.j, cfg.c, cfg.n), cfg.fmt)


def _load_char(path: str) -> Character:
    try:
        return Character.from_json(_read_json(path))
    except (KeyError, TypeError, AttributeError) as exc:
        raise UsageError(f"{path}: malformed character ({exc})") from None


def _char_shuffle(cfg: JobConfig) -> str:
    f, g = (_load_char(p) for p in cfg.inputs)
    return _emit_char(shuffle(cfg.datum, f, g), cfg.fmt)


def _char_stats(cfg: JobConfig) -> str:
    s = char_stats(cfg.datum, _load_char(cfg.inputs[0]), cfg.Lambda)
    rows = []
    for i in cfg.datum.labels:
        row = {"vertex": i, "eps": s.eps[i], "eps_vee": s.eps_vee[i], "wt": s.wt[i], "jump": s.jump[i]}
        if s.phi_lambda is not None:
            row["phi_lambda"] = s.phi_lambda[i]
        rows.append(row)
    if cfg.fmt == "json":
        return _json(rows)
    keys = list(rows[0])
    sep = "," if cfg.fmt == "csv" else "\t"
    return "\n".join([sep.join(keys)] + [sep.join(str(r[k]) for k in keys) for r in rows]) + "\n"


def _char_serre(cfg: JobConfig) -> str:
    if cfg.inputs:
        ch = _load_char(cfg.inputs[0])
    else:
        _require(cfg, "n")
        ch = char_simple_ci_j(cfg.datum, cfg.i, cfg.j, cfg.c, cfg.n)
    return _emit_char(serre_apply(cfg.datum, ch, cfg.i, cfg.j, cfg.c), cfg.fmt)


def _klr_multiply(cfg: JobConfig) -> str:
    from .klr.algebra import KlrAlgebra, KlrElement

    da, db = (_read_json(p) for p in cfg.inputs)
    try:
        nu = RootVector.from_json(da["nu"])
        alg = KlrAlgebra(cfg.datum, nu)
        x, y = KlrElement.from_json(alg, da), KlrElement.from_json(alg, db)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed KLR element ({exc})") from None
    prod = x * y
    if cfg.fmt == "json":
        return _json(prod.to_json())
    return f"{prod!r}\n"


def _dim_table(cfg: JobConfig, graded: dict, lam: str) -> str:
    total = sum(graded.values())
    nu = _coords_text(cfg.datum, cfg.nu)
    if cfg.fmt == "json":
        out = {"nu": cfg.nu.to_json(), "dim": total,
               "graded_dim": {str(k): v for k, v in sorted(graded.items())}}
        if cfg.Lambda is not None:
            out["lambda"] = cfg.Lambda.to_json()
        return _json(out)
    if cfg.fmt == "csv":
        return f"nu,lambda,dim,graded_dim\n\"{nu}\",\"{lam}\",{total},{_graded_text(graded)}\n"
    return f"{total}\n"


def _klr_dim(cfg: JobConfig) -> str:
    from .klr.dims import graded_dim_series
    from .klr.algebra import KlrAlgebra

    seqs = KlrAlgebra(cfg.datum, cfg.nu).sequences
    graded: dict[int, int] = {}
    for s in seqs:
        for t in seqs:
            for k, v in graded_dim_series(cfg.datum, cfg.nu, s, t, cfg.max_deg).items():
                graded[k] = graded.get(k, 0) + v
    return _dim_table(cfg, graded, "")


def _klr_cyclotomic(cfg: JobConfig) -> str:
    from .klr.cyclotomic import cyclotomic_build

    p = cyclotomic_build(cfg.datum, cfg.nu, cfg.Lambda, _caps(cfg))
    return _dim_table(cfg, p.graded_dim, _coords_text(cfg.datum, cfg.Lambda))


def _klr_nilpotency(cfg: JobConfig) -> str:
    from .klr.cyclotomic import cyclotomic_build, dot_nilpotency

    p = cyclotomic_build(cfg.datum, cfg.nu, cfg.Lambda, _caps(cfg))
    m = cfg.nu.size
    if cfg.r is not None and cfg.r > m:
        raise UsageError(f"--r: strand index {cfg.r} outside 1..{m}")
    strands = [cfg.r] if cfg.r is not None else list(range(1, m + 1))
    vals = {r: dot_nilpotency(p, r) for r in strands}
    if cfg.fmt == "json":
        return _json({str(r): v for r, v in vals.items()})
    if cfg.fmt == "csv":
        return "r,nilpotency\n" + "".join(f"{r},{v}\n" for r, v in vals.items())
    if cfg.r is not None:
        return f"{vals[cfg.r]}\n"
    return "".join(f"{r}\t{v}\n" for r, v in vals.items())


def _crystal_graph_for(cfg: JobConfig, default_depth: int):
    from .crystal import binf_generate, blambda_generate

    depth = cfg.depth if cfg.depth is not None else default_depth
    if cfg.Lambda is not None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            g = blambda_generate(cfg.datum, cfg.Lambda, depth)
        for w in caught:
            print(f"WARNING IncompleteCrystal {w.message}", file=sys.stderr)
        return g
    return binf_generate(cfg.datum, depth)


def _crystal_graph(cfg: JobConfig) -> str:
    from .crystal import graph_to_json_text, multiplicities_csv, to_dot

    g = _crystal_graph_for(cfg, 64 if cfg.Lambda is not None else 3)
    if cfg.fmt == "json":
        return graph_to_json_text(g)
    if cfg.fmt == "csv":
        return multiplicities_csv(g)
    if cfg.fmt == "dot":
        return to_dot(g)
    return f"nodes {len(g.nodes)}\nedges {len(g.edges)}\ncomplete {str(g.complete).lower()}\n"


def _crystal_mult(cfg: JobConfig) -> str:
    from .crystal import multiplicity

    size = cfg.nu.size
    g = _crystal_graph_for(cfg, size if cfg.Lambda is None else max(size, 64))
    count = multiplicity(g, cfg.nu)
    if cfg.fmt == "json":
        out = {"nu": cfg.nu.to_json(), "count": count}
        if cfg.Lambda is not None:
            out["lambda"] = cfg.Lambda.to_json()
        return _json(out)
    if cfg.fmt == "csv":
        return f"weight_coords,count\n{' '.join(str(x) for x in cfg.datum.coords(cfg.nu))},{count}\n"
    return f"{count}\n"


def _crystal_verify(cfg: JobConfig) -> str:
    from .crystal import verify_axioms

    g = _crystal_graph_for(cfg, 64 if cfg.Lambda is not None else 4)
    suites = cfg.suites or (("C", "KS", "PSI", "JUMP", "EPSJUMP") + (("PHI",) if cfg.Lambda else ()))
    reports = [verify_axioms(g, s) for s in suites]
    if cfg.fmt == "json":
        text = _json([{"suite": r.suite, "passed": r.passed, "checked": r.checked,
                       "violations": [{"check": v.check, "path": list(v.path), "detail": v.detail}
                                      for v in r.violations]} for r in reports])
    else:
        lines = []
        for r in reports:
            lines.append(r.summary())
            lines += [f"  {v}" for v in r.violations[:20]]
        text = "\n".join(lines) + "\n"
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        _write(cfg, text)
        raise AxiomViolation(f"suites failed: {','.join(failed)}")
    return text


_DISPATCH = {
    ("datum", "validate"): _datum_validate,
    ("char", "simple"): _char_simple,
    ("char", "shuffle"): _char_shuffle,
    ("char", "stats"): _char_stats,
    ("char", "serre"): _char_serre,
    ("klr", "multiply"): _klr_multiply,
    ("klr", "dim"): _klr_dim,
    ("klr", "cyclotomic-dim"): _klr_cyclotomic,
    ("klr", "nilpotency"): _klr_nilpotency,
    ("crystal", "graph"): _crystal_graph,
    ("crystal", "mult"): _crystal_mult,
    ("crystal", "verify"): _crystal_verify,
}


def _write(cfg: JobConfig, text: str) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def dispatch(cfg: JobConfig) -> int:
    _write(cfg, _DISPATCH[cfg.group, cfg.command](cfg))
    return 0


def _error_line(exc: BaseException) -> str:
    code = getattr(exc, "code", type(exc).__name__)
    detail = " ".join(str(exc).split()) or type(exc).__name__
    return f"ERROR {code} {detail}"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return dispatch(parse_config(argv))
    except KlrCrystalError as exc:
        print(_error_line(exc), file=sys.stderr)
        return exc.exit_code
    except (ValueError, KeyError) as exc:
        print(_error_line(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
