"""Command line front end.

Exit status: 0 on success, 1 on invalid input, 2 when a production result
disagrees with the brute-force oracle.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import catalog, hyperbola, monoid, oracles
from .catalog import DeterminantalDatum
from .errors import AffclassError
from .hyperbola import HyperbolaDatum
from .monoid import MonoidRing
from .ringfile import SCHEMA_VERSION, load_ring

EXIT_OK, EXIT_INVALID, EXIT_DISAGREE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _divisor(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _supports_json(sets) -> list[list[int]]:
    return sorted(sorted(s) for s in sets)


# --- report builders: each returns (json payload, text lines, exit code) ----

def _cl(ring, verbose: bool):
    if isinstance(ring, MonoidRing):
        g = monoid.class_group(ring)
        out = {"class_group": g.to_json(), "facet_normals": [list(n) for n in ring.cone.facet_normals]}
        lines = [f"Cl = {g}"]
        if verbose:
            lines += [f"facet {i}: normal {_vec(n)}" for i, n in enumerate(ring.cone.facet_normals)]
    elif isinstance(ring, HyperbolaDatum):
        g = hyperbola.class_group(ring)
        out = {"class_group": g.to_json(), "exponents": list(ring.exponents)}
        lines = [f"Cl = {g}"]
        if verbose:
            lines += [f"generator {i}: p_{i + 1} = (U_{i + 1}, X)" for i in range(ring.r)]
            lines.append(f"relation: {_vec(ring.exponents)}")
    else:
        g = catalog.determinantal_report(ring).class_group
        out = {"class_group": g.to_json()}
        lines = [f"Cl = {g}"]
    return out, lines, EXIT_OK


def _acl(ring):
    if isinstance(ring, MonoidRing):
        g = monoid.affine_class_group(ring)
    elif isinstance(ring, HyperbolaDatum):
        if not ring.base_is_local:
            v = hyperbola.acl_vanishes_nonlocal(ring)
            return {"acl_vanishes": v}, [f"ACl {'= 0' if v else '!= 0'}"], EXIT_OK
        g = hyperbola.affine_class_group_local(ring)
    else:
        g = catalog.determinantal_report(ring).affine_class_group
    return {"affine_class_group": g.to_json()}, [f"ACl = {g}"], EXIT_OK


def _coaffine(ring, n):
    if isinstance(ring, MonoidRing):
        obstruction = monoid.coaffine_obstruction(ring, n)
        order = monoid.torsion_order(ring, n)
        co, trivial = obstruction is None, order is not None
        strong = monoid.is_strongly_coaffine(ring, n)
        witnesses: dict[str, Any] = {}
        if obstruction is not None:
            e = [a + b for a, b in zip(n, ring.divisor_of(obstruction))]
            witnesses["non_affine_representative"] = {"gamma": list(obstruction), "divisor": e}
        if trivial:
            kn = [order * x for x in n]
            witnesses["principal_multiple"] = {
                "k": order, "gamma": list(monoid.principal_witness(ring, kn))}
    elif isinstance(ring, HyperbolaDatum):
        co = hyperbola.is_coaffine(ring, n)
        strong = hyperbola.is_strongly_coaffine(ring, n)
        order = hyperbola.torsion_order(ring, n)
        trivial = order is not None
        witnesses = {}
        k = hyperbola.principal_multiple(ring, n)
        if k is not None:
            witnesses["principal"] = {"k": k}
        else:
            k = hyperbola.coaffine_shift(ring, n)
            if k is not None:
                witnesses["reduced_representative"] = {
                    "k": k, "divisor": [x - k * y for x, y in zip(n, ring.exponents)]}
        if trivial:
            witnesses["principal_multiple"] = {"k": order}
    else:
        raise AffclassError("coaffine needs a monoid or hyperbola ring")
    out = {"divisor": list(n), "coaffine": co, "strongly_coaffine": strong,
           "affine_trivial": trivial, "witnesses": witnesses}
    lines = [f"coaffine: {_bool(co)}, strongly coaffine: {_bool(strong)}, "
             f"affine trivial: {_bool(trivial)}"]
    for key in sorted(witnesses):
        w = witnesses[key]
        lines.append(f"  {key}: " + ", ".join(
            f"{k}={_vec(v) if isinstance(v, list) else v}" for k, v in sorted(w.items())))
    return out, lines, EXIT_OK


def _simplicial(ring):
    if not isinstance(ring, MonoidRing):
        raise AffclassError("simplicial needs a monoid ring")
    s, v = monoid.is_simplicial(ring), monoid.acl_vanishes(ring)
    out = {"simplicial": s, "acl_vanishes": v,
           "facets": ring.num_facets, "lattice_rank": ring.rank}
    lines = [f"simplicial: {_bool(s)} ({ring.num_facets} facets, rank {ring.rank})",
             f"ACl vanishes: {_bool(v)}"]
    return out, lines, EXIT_OK if s == v else EXIT_DISAGREE


def _detring(m, n, k):
    rep = catalog.determinantal_report(DeterminantalDatum(m, n, k))
    lines = [f"dim {rep.dimension}, height {rep.ideal_height}, "
             f"Cl = ACl = {rep.class_group}",
             f"witness height {rep.witness_height}"]
    return rep.to_json(), lines, EXIT_OK


def _oracle(ring, bound, n):
    checks: dict[str, bool] = {}
    if isinstance(ring, MonoidRing):
        b = bound or oracles.default_bound(ring.rank)
        prod = {s for s in ring.all_supports() if monoid.is_realizable_support(ring, s)}
        checks["realizable_supports"] = prod == oracles.oracle_realizable_supports(ring, b)
        checks["acl_vanishes_iff_simplicial"] = monoid.acl_vanishes(ring) == monoid.is_simplicial(ring)
        if n is not None:
            checks["effective_supports"] = (monoid.effective_supports(ring, n)
                                            == oracles.oracle_effective_supports(ring, n, b))
            checks["is_coaffine"] = monoid.is_coaffine(ring, n) == oracles.oracle_is_coaffine(ring, n, b)
            checks["is_strongly_coaffine"] = (monoid.is_strongly_coaffine(ring, n)
                                              == oracles.oracle_monoid_strong(ring, n, 5))
    elif isinstance(ring, HyperbolaDatum):
        b = bound or oracles.default_bound(ring.r + 1)
        rep = oracles.oracle_cross_model(ring, b)
        checks["cross_model"] = rep.ok
        if n is not None:
            checks["is_strongly_coaffine"] = (hyperbola.is_strongly_coaffine(ring, n)
                                              == oracles.oracle_hyperbola_strong(ring, n, 6))
    else:
        raise AffclassError("oracle needs a monoid or hyperbola ring")
    agree = all(checks.values())
    out = {"bound": b, "checks": checks, "agree": agree}
    lines = [f"{name}: {'agree' if ok else 'DISAGREE'}" for name, ok in sorted(checks.items())]
    lines.append(f"oracle agreement: {_bool(agree)} (bound {b})")
    return out, lines, EXIT_OK if agree else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="affclass", description="Class groups and affine class groups of "
                "toric, hyperbola and determinantal rings.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("cl", help="divisor class group")
    c.add_argument("ring")
    c.add_argument("--verbose", action="store_true", help="list the facet / generator order")
    sub.add_parser("acl", help="affine class group").add_argument("ring")
    c = sub.add_parser("coaffine", help="coaffine / strongly coaffine / affine trivial verdicts")
    c.add_argument("ring")
    c.add_argument("--divisor", type=_divisor, required=True, help="n1,...,nr")
    sub.add_parser("simplicial", help="simpliciality of a monoid ring").add_argument("ring")
    c = sub.add_parser("catalog", help="closed-form catalog entries")
    csub = c.add_subparsers(dest="entry", required=True, parser_class=_Parser)
    d = csub.add_parser("detring", help="determinantal ring K[X_ij]/I_k")
    for name in ("m", "n", "k"):
        d.add_argument(f"--{name}", type=int, required=True)
    c = sub.add_parser("oracle", help="compare production results with brute-force oracles")
    c.add_argument("ring")
    c.add_argument("--bound", type=int, default=None)
    c.add_argument("--divisor", type=_divisor, default=None)
    # allow --json after the subcommand as well
    for sp in list(sub.choices.values()) + [d]:
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return p


def render(payload: dict, lines: list[str], as_json: bool) -> str:
    if as_json:
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return "\n".join(lines) + "\n"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and return ``(exit status, output text)``."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            out, lines, code = _detring(args.m, args.n, args.k)
        else:
            ring = load_ring(args.ring)
            n = getattr(args, "divisor", None)
            if n is not None:
                size = ring.num_facets if isinstance(ring, MonoidRing) else getattr(ring, "r", None)
                if size is not None and len(n) != size:
                    raise AffclassError(f"--divisor has {len(n)} entries, the ring needs {size}")
            if args.command == "cl":
                out, lines, code = _cl(ring, args.verbose)
            elif args.command == "acl":
                out, lines, code = _acl(ring)
            elif args.command == "coaffine":
                out, lines, code = _coaffine(ring, n)
            elif args.command == "simplicial":
                out, lines, code = _simplicial(ring)
            else:
                if args.bound is not None and args.bound < 1:
                    raise AffclassError("--bound must be at least 1")
                out, lines, code = _oracle(ring, args.bound, n)
    except AffclassError as exc:
        return EXIT_INVALID, f"error: {exc}\n"
    payload = {"schema": SCHEMA_VERSION, "command": args.command, **out}
    return code, render(payload, lines, args.json)


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    (sys.stdout if code != EXIT_INVALID else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
