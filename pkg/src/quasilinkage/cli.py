"""Command-line front end.

Every command prints one JSON document on stdout.  Exit codes: 0 success,
1 domain violation, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chambers, complex as cxmod, gale, games, homology, realizability
from .errors import BudgetExceeded, Violation
from .subsets import from_elements


class UsageError(Exception):
    pass


def _read_game(path: str, strict: bool = False) -> games.Quasilinkage:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read game file {path}: {exc}") from exc
    return games.game_from_json(data, require_singletons=strict)


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return getattr(args, name)


def cmd_validate(args) -> dict:
    g = _read_game(_need(args, "game"), strict=True)
    out = {"valid": True, "n": g.n, "maximal_short": g.to_json()["maximal_short"]}
    out["symmetric"] = games.is_symmetric(g) if g.n <= games.MAX_SYMMETRY_N else None
    return out


def cmd_realize(args) -> dict:
    if args.lengths is not None:
        lengths = realizability.parse_lengths(args.lengths)
        out = {"lengths": [str(v) for v in lengths], "generic": realizability.is_generic(lengths)}
        if out["generic"]:
            out["game"] = realizability.short_sets(lengths).to_json()
        return out
    g = _read_game(_need(args, "game"))
    return realizability.realize(g).to_json()


def cmd_flip(args) -> dict:
    g = _read_game(_need(args, "game"))
    return games.flip(g, from_elements(_csv_ints(_need(args, "set")))).to_json()


def cmd_extend(args) -> dict:
    n = _need(args, "n")
    groups = [grp for grp in _need(args, "sets").split(";") if grp.strip()]
    fam = games.ConflictFreeFamily(n, tuple(from_elements(_csv_ints(grp)) for grp in groups))
    g = games.extend(fam)
    return {"game": g.to_json(), "real": realizability.realize(g).real}


def _complex(args, g):
    if args.variant == "stable":
        return cxmod.build_stable_complex(g)
    return cxmod.build_moduli_complex(g)


def cmd_complex(args) -> dict:
    g = _read_game(_need(args, "game"))
    return _complex(args, g).to_json(emit=args.emit)


def cmd_homology(args) -> dict:
    g = _read_game(_need(args, "game"))
    cx = _complex(args, g)
    h = homology.homology(cx, method=args.method)
    out = h.to_json()
    if args.fs_check:
        predicted = homology.fs_prediction(g)
        out["fs_prediction"] = predicted
        out["fs_match"] = None if predicted is None else list(h.betti) == predicted
    return out


def cmd_star(args) -> dict:
    g = _read_game(_need(args, "game"))
    order = _csv_ints(_need(args, "vertex"))
    lattice = gale.star_polytope_faces(g, order)
    diagram = gale.arc_diagram(g, order)
    report = gale.star_duality_report(g, order)
    return {
        "vertex": list(order),
        "arcs": [str(a) for a in diagram.arcs],
        "atoms": list(lattice.atoms),
        "faces": [sorted(f) for f in lattice.proper_faces()],
        "f_vector": lattice.f_vector(),
        "duality": report.ok,
    }


def cmd_atlas(args) -> dict:
    graph = chambers.enumerate_quasilinkages(
        _need(args, "n"), budget=args.budget, with_homology=args.with_homology
    )
    return graph.to_json()


def cmd_audit(args) -> dict:
    g = _read_game(_need(args, "game"))
    t = from_elements(_csv_ints(_need(args, "set")))
    return chambers.surgery_audit(g, t, max_cells=args.budget, check_links=not args.no_links).to_json()


COMMANDS = {
    "validate": cmd_validate,
    "realize": cmd_realize,
    "flip": cmd_flip,
    "extend": cmd_extend,
    "complex": cmd_complex,
    "homology": cmd_homology,
    "star": cmd_star,
    "atlas": cmd_atlas,
    "audit": cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quasilinkage", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--game", help="game file (JSON)")
    p.add_argument("--lengths", help="comma-separated rationals, e.g. 11/10,11/10,11/10,1,1,1")
    p.add_argument("--vertex", help="cyclic order of [n], comma-separated")
    p.add_argument("--set", help="subset of [n], comma-separated")
    p.add_argument("--sets", help="semicolon-separated subsets for extend, e.g. 1,2,3;3,5,6")
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=["moduli", "stable"], default="moduli")
    p.add_argument("--emit", choices=["f-vector", "full"], default="full")
    p.add_argument("--method", choices=["cellular", "order"], default="cellular")
    p.add_argument("--fs-check", action="store_true")
    p.add_argument("--with-homology", action="store_true")
    p.add_argument("--no-links", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--out", help="also write the JSON output to this file")
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
        code = 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except Violation as exc:
        result, code = exc.to_json(), 1
    except BudgetExceeded as exc:
        result, code = {"kind": "BudgetExceeded", "message": str(exc)}, 3
    text = json.dumps(result)
    print(text, file=stdout)
    if args.out:
        Path(args.out).write_text(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
