"""Command-line front end.

Subcommands:
  dims SPEC            build the window and print the dimension table
  verify SPEC [...]    run verification suites selected by flags
  zhang N M_MAX [...]  Hilbert function of the twisted free-algebra quotient

Exit codes: 0 all checks pass, 1 verification failure or internal error,
2 precondition refusal (forbidden type, non-periodicity, budget), 3 parse
error.  Reports are byte-identical across reruns of the same spec and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .algebra import DivisionAlgebra, ReducibleMinpoly, base_field_algebra, make_extension_field
from .bimodule import (
    Bimodule,
    extension_as_bimodule,
    tensor_square_bimodule,
    vector_space_bimodule,
)
from .fields import QQ, FieldError, GroundField
from .gorenstein import helix_shadow_report, hom_ext_cohproj_table, r2tau_dims, verify_gorenstein
from .report import Report, sha256_of_file
from .window import (
    ForbiddenType,
    NotTwoPeriodic,
    WindowTooSmall,
    build_ncsym,
    dim_table,
    verify_euler,
    verify_intersection_identity,
    verify_right_cancellation,
    verify_zero_divisor_property,
)
from .zhang import BudgetExceeded, SingularSigma, build_zhang, compare_p1n, zhang_hilbert

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_REFUSED = 2
EXIT_PARSE = 3


class SpecParseError(ValueError):
    pass


def parse_field(node) -> GroundField:
    kind = node.get("kind")
    if kind == "rationals":
        return QQ
    if kind == "prime-field":
        return GroundField(int(node["p"]))
    raise SpecParseError(f"unknown field kind {kind!r}")


def parse_algebras(field: GroundField, node) -> dict[str, DivisionAlgebra]:
    out = {}
    for name, spec in (node or {}).items():
        kind = spec.get("kind")
        if kind == "base":
            out[name] = base_field_algebra(field, name=name)
        elif kind == "extension":
            out[name] = make_extension_field(field, spec["minpoly"], name=name)
        elif kind == "structure-constants":
            out[name] = DivisionAlgebra(field, spec["structure"], spec["unit"], name=name)
        else:
            raise SpecParseError(f"unknown algebra kind {kind!r} for {name!r}")
    return out


def parse_bimodule(field: GroundField, algebras, node) -> Bimodule:
    kind = node.get("kind")
    if kind == "vector-space":
        return vector_space_bimodule(field, int(node["n"]))
    if kind == "extension-as-bimodule":
        return extension_as_bimodule(algebras[node["algebra"]], node["side"])
    if kind == "tensor-square":
        return tensor_square_bimodule(algebras[node["algebra"]])
    if kind == "matrices":
        return Bimodule(
            field,
            algebras[node["left"]],
            algebras[node["right"]],
            int(node["kdim"]),
            node["left_action"],
            node["right_action"],
        )
    raise SpecParseError(f"unknown bimodule kind {kind!r}")


class InputSpec:
    def __init__(self, path: str):
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SpecParseError(f"cannot read spec {path}: {exc}") from exc
        try:
            self.field = parse_field(raw["field"])
            self.algebras = parse_algebras(self.field, raw.get("algebras"))
            self.bimodule = parse_bimodule(self.field, self.algebras, raw["bimodule"])
            self.window = (int(raw["window"][0]), int(raw["window"][1]))
            self.max_width = raw.get("max_width")
            if self.max_width is not None:
                self.max_width = int(self.max_width)
            self.seed = int(raw.get("seed", 0))
            self.budget = int(raw.get("budget", 10**6))
            self.allow_forbidden = bool(raw.get("allow_forbidden_type", False))
        except (KeyError, TypeError, ValueError, FieldError, ReducibleMinpoly) as exc:
            raise SpecParseError(f"malformed spec {path}: {exc}") from exc
        self.sha256 = sha256_of_file(path)


def _euler_cells(Z):
    for i in range(Z.i_min, Z.i_max - 1):
        for j in range(i, Z.i_max - 1):
            if j + 2 - i <= Z.max_width and j + 2 <= Z.i_max:
                yield (i, j)


def run_suites(Z, suites, seed: int, jobs: int = 1) -> list:
    """Run the selected verification suites; order of verdicts is fixed."""
    tasks = []
    if "euler" in suites:
        for (i, j) in _euler_cells(Z):
            tasks.append(lambda i=i, j=j: verify_euler(Z, i, j))
            tasks.append(lambda i=i, j=j: verify_intersection_identity(Z, i, j))
    if "cancellation" in suites:
        for (i, j) in _euler_cells(Z):
            tasks.append(lambda i=i, j=j: verify_right_cancellation(Z, i, j))
    if "zero-divisors" in suites:
        for j in range(Z.i_min, Z.i_max - 1):
            tasks.append(lambda j=j: verify_zero_divisor_property(Z, j, seed=seed))
    results = []
    if jobs > 1:
        # caches are filled deterministically first; cells are pure after that
        for i in range(Z.i_min, Z.i_max + 1):
            for j in range(i, min(Z.i_max, i + Z.max_width) + 1):
                Z.component(i, j)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results.extend(pool.map(lambda t: t(), tasks))
    else:
        results.extend(t() for t in tasks)

    if "gorenstein" in suites:
        for l in range(max(Z.i_min + 2, 0), min(2, Z.i_max - 2) + 1):
            lo = max(l - 6, Z.i_min)
            hi = min(l + 2, Z.i_max - 2)
            if lo > hi:
                continue
            _, rep = verify_gorenstein(Z, l, range(lo, hi + 1))
            results.append(rep)
            jlo = max(Z.i_min, l - 2 - Z.max_width)
            jhi = min(Z.i_max, l + 2)
            _, rep = r2tau_dims(Z, l, range(jlo, jhi + 1))
            results.append(rep)
    if "helix" in suites:
        lo = max(-2, -(Z.i_max - 1))
        hi = min(2, -Z.i_min - 1)
        if lo <= hi:
            results.extend(helix_shadow_report(Z, range(lo, hi + 1)))
        tlo, thi = max(Z.i_min + 2, -2), min(Z.i_max - 2, 2)
        if tlo <= thi:
            _, rep = hom_ext_cohproj_table(Z, range(tlo, thi + 1))
            results.append(rep)
    return results


def _print_dim_table(Z, dt):
    print(f"dimension table on [{Z.i_min}, {Z.i_max}], width <= {Z.max_width}")
    for i in range(Z.i_min, Z.i_max + 1):
        js = sorted(j for (a, j) in dt.rows if a == i and j >= i)
        cells = " ".join(str(dt.rows[(i, j)]["kdim"]) for j in js)
        print(f"  i={i:>3}: {cells}")


def _write_report(report: Report, path: str | None):
    if path:
        with open(path, "wb") as fh:
            fh.write(report.to_json_bytes())


def cmd_dims(args) -> int:
    spec = InputSpec(args.spec)
    Z = build_ncsym(
        spec.bimodule,
        spec.window,
        max_width=spec.max_width,
        allow_forbidden=spec.allow_forbidden,
        eager=True,
    )
    dt = dim_table(Z)
    _print_dim_table(Z, dt)
    report = Report(
        "dims",
        spec_sha256=spec.sha256,
        seed=spec.seed,
        window=spec.window,
        max_width=Z.max_width,
        tables={"dims": dt.as_dict()},
    )
    _write_report(report, args.json)
    return EXIT_PASS


def cmd_verify(args) -> int:
    spec = InputSpec(args.spec)
    suites = []
    if args.all or args.euler:
        suites.append("euler")
    if args.all or args.cancellation:
        suites.append("cancellation")
    if args.all or args.zero_divisors:
        suites.append("zero-divisors")
    if args.all or args.gorenstein:
        suites.append("gorenstein")
    if args.all or args.helix:
        suites.append("helix")
    if not suites:
        print("no suites selected; use --all or suite flags", file=sys.stderr)
        return EXIT_PARSE
    seed = args.seed if args.seed is not None else spec.seed
    jobs = args.jobs or int(os.environ.get("NCSYM_JOBS", "1"))
    Z = build_ncsym(
        spec.bimodule,
        spec.window,
        max_width=spec.max_width,
        allow_forbidden=spec.allow_forbidden,
    )
    results = run_suites(Z, suites, seed, jobs=jobs)
    dt = dim_table(Z)
    report = Report(
        "verify",
        spec_sha256=spec.sha256,
        seed=seed,
        window=spec.window,
        max_width=Z.max_width,
        tables={"dims": dt.as_dict()},
        meta={"suites": suites},
    )
    report.extend(results)
    for v in report.verdicts:
        mark = "ok " if v["pass"] else "FAIL"
        print(f"  [{mark}] {v['check']} at {tuple(v['at'])}")
    n_fail = len(report.failures)
    print(f"{len(report.verdicts)} checks, {n_fail} failures")
    _write_report(report, args.json)
    return EXIT_PASS if n_fail == 0 else EXIT_FAIL


def cmd_zhang(args) -> int:
    field = QQ if args.field == "rationals" else GroundField(int(args.field))
    if args.sigma == "identity":
        sigma = field.eye(args.n)
    else:
        try:
            with open(args.sigma) as fh:
                sigma = field.asarray(json.load(fh))
        except (OSError, json.JSONDecodeError, FieldError) as exc:
            raise SpecParseError(f"cannot read sigma: {exc}") from exc
    report = Report("zhang", seed=args.seed)
    if args.compare:
        res = compare_p1n(args.n, args.m_max, field, sigma=sigma, budget=args.budget)
        print(" ".join(str(d) for d in res["zhang"]))
        print("equal to S^nc row:", res["equal"], "; recurrence:", res["recurrence_zhang"])
        report.tables["compare"] = res
        report.meta["n"] = args.n
        _write_report(report, args.json)
        return EXIT_PASS if res["pass"] else EXIT_FAIL
    Zh = build_zhang(args.n, sigma, field)
    dims = zhang_hilbert(Zh, args.m_max, budget=args.budget)
    print(" ".join(str(d) for d in dims))
    report.tables["hilbert"] = dims
    report.meta["n"] = args.n
    _write_report(report, args.json)
    return EXIT_PASS


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncsym", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dims", help="print the dimension table of the window")
    d.add_argument("spec")
    d.add_argument("--json", help="write the machine report here")
    d.set_defaults(func=cmd_dims)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("spec")
    v.add_argument("--euler", action="store_true")
    v.add_argument("--gorenstein", action="store_true")
    v.add_argument("--cancellation", action="store_true")
    v.add_argument("--zero-divisors", action="store_true")
    v.add_argument("--helix", action="store_true")
    v.add_argument("--all", action="store_true")
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--jobs", type=int, default=0, help="default: NCSYM_JOBS or 1")
    v.add_argument("--json", help="write the machine report here")
    v.set_defaults(func=cmd_verify)

    z = sub.add_parser("zhang", help="Hilbert function of k<x_i>/(b)")
    z.add_argument("n", type=int)
    z.add_argument("m_max", type=int)
    z.add_argument("--sigma", default="identity", help="'identity' or a JSON matrix file")
    z.add_argument("--field", default="rationals", help="'rationals' or a prime p")
    z.add_argument("--compare", action="store_true")
    z.add_argument("--budget", type=int, default=10**6)
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--json", help="write the machine report here")
    z.set_defaults(func=cmd_zhang)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ForbiddenType, NotTwoPeriodic, WindowTooSmall, BudgetExceeded, SingularSigma) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except Exception as exc:  # pragma: no cover - internal errors
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
