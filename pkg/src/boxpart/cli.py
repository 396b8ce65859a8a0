"""Command line interface.

Subcommands: dist, moments, converge, ferrers, sample.  Output is a JSON
document or a CSV table on stdout (or --out PATH), byte-identical across
runs for identical inputs.  Counts and totals are serialized as decimal
strings because they routinely exceed any fixed-width integer; volume
indices and size parameters stay plain numbers.

Exit codes: 0 success, 2 invalid arguments or malformed input, 3 resource
cap exceeded.  The BOXPART_DEGREE_CAP environment variable overrides the
polynomial degree cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from bisect import bisect_right
from dataclasses import dataclass
from itertools import accumulate

from .ensembles import (EnsembleSpec, Kind, VolumeDistribution, cspp,
                        distribution, ferrers_hw, ferrers_perimeter, pp, spp)
from .ferrers import joint_diagnostics, perimeter_joint
from .limits import (Normalization, convergence_table, standard_gaussian,
                     uniform_convolution)
from .moments import (empirical_central_moment, empirical_moment, mean_closed,
                      variance_closed)
from .qpoly import CapExceededError

FORMAT_VERSION = "1"

_KIND_CHOICES = ("pp", "spp", "cspp", "ferrers-hw", "ferrers-perimeter")
_KIND_PARAMS = {
    "pp": ("r", "s", "t"),
    "spp": ("r", "t"),
    "cspp": ("r",),
    "ferrers-hw": ("h", "w"),
    "ferrers-perimeter": ("m",),
}
_KIND_FACTORY = {
    "pp": pp,
    "spp": spp,
    "cspp": cspp,
    "ferrers-hw": ferrers_hw,
    "ferrers-perimeter": ferrers_perimeter,
}


@dataclass(frozen=True)
class OutputDocument:
    """A rendered result: its text is written verbatim to the output."""

    text: str


def _json_document(payload: dict) -> OutputDocument:
    payload = dict(payload)
    payload["format_version"] = FORMAT_VERSION
    return OutputDocument(json.dumps(payload, sort_keys=True,
                                     separators=(",", ":")) + "\n")


def _csv_document(header: str, rows: list[str],
                  trailer: str | None = None) -> OutputDocument:
    lines = [header] + rows
    if trailer is not None:
        lines.append(trailer)
    return OutputDocument("\n".join(lines) + "\n")


def _spec_from_args(args: argparse.Namespace) -> EnsembleSpec:
    names = _KIND_PARAMS[args.ensemble]
    values = []
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise ValueError("%s requires --%s" % (args.ensemble, name))
        values.append(value)
    for name in ("r", "s", "t", "h", "w", "m"):
        if name not in names and getattr(args, name, None) is not None:
            raise ValueError("%s does not take --%s" % (args.ensemble, name))
    return _KIND_FACTORY[args.ensemble](*values)


def cmd_dist(args: argparse.Namespace) -> OutputDocument:
    """Exact volume counts of one ensemble."""
    spec = _spec_from_args(args)
    dist = distribution(spec)
    counts = [dist.counts[k] for k in range(dist.bounding_volume + 1)]
    if args.format == "csv":
        rows = ["%d,%d" % (k, c) for k, c in enumerate(counts)]
        return _csv_document("volume,count", rows)
    return _json_document({
        "spec": spec.as_dict(),
        "bounding_volume": dist.bounding_volume,
        "total": str(dist.total),
        "counts": [str(c) for c in counts],
    })


def cmd_moments(args: argparse.Namespace) -> OutputDocument:
    """Closed-form versus empirical mean and variance."""
    spec = _spec_from_args(args)
    dist = distribution(spec)
    mean_c = mean_closed(spec)
    var_c = variance_closed(spec)
    mean_e = empirical_moment(dist, 1)
    var_e = empirical_central_moment(dist, 2)
    return _json_document({
        "spec": spec.as_dict(),
        "mean_closed": str(mean_c),
        "mean_empirical": str(mean_e),
        "variance_closed": str(var_c),
        "variance_empirical": str(var_e),
        "equal": mean_c == mean_e and var_c == var_e,
    })


_FAMILIES = ("pp-cube", "cspp", "pp-fixed-rs", "spp-fixed-r")


def _converge_specs(args: argparse.Namespace):
    sizes = args.sizes
    if args.family == "pp-cube":
        return [pp(n, n, n) for n in sizes], Normalization.STANDARDIZE, "gaussian", None
    if args.family == "cspp":
        return [cspp(n) for n in sizes], Normalization.STANDARDIZE, "gaussian", None
    if args.family == "pp-fixed-rs":
        if args.r is None or args.s is None:
            raise ValueError("pp-fixed-rs requires --r and --s")
        law = uniform_convolution(args.r * args.s)
        return ([pp(args.r, args.s, t) for t in sizes],
                Normalization.SCALE_BY_T, "uniform-conv", law)
    if args.r is None:
        raise ValueError("spp-fixed-r requires --r")
    law = uniform_convolution(args.r, args.r * (args.r - 1) // 2)
    return ([spp(args.r, t) for t in sizes],
            Normalization.SCALE_BY_T, "uniform-conv", law)


def cmd_converge(args: argparse.Namespace) -> OutputDocument:
    """KS distance table for a family of growing ensembles."""
    if not args.sizes:
        raise ValueError("need at least one size")
    specs, norm, wanted_law, law = _converge_specs(args)
    if args.law != wanted_law:
        raise ValueError("family %s converges against %s" % (args.family, wanted_law))
    if law is None:
        law = standard_gaussian()
    report = convergence_table(specs, norm, law)
    rows = ["%d,%r" % (size, row.ks)
            for size, row in zip(args.sizes, report.rows)]
    trailer = "# nonincreasing: %s" % ("true" if report.nonincreasing else "false")
    return _csv_document("size,ks_distance", rows, trailer)


def cmd_ferrers(args: argparse.Namespace) -> OutputDocument:
    """Joint height/area table, or its standardized diagnostics."""
    if args.what == "diagnostics" and args.format == "csv":
        raise ValueError("diagnostics output is json only")
    joint = perimeter_joint(args.m)
    if args.what == "joint":
        triplets = []
        for h in joint.heights():
            row = joint.rows[h - 1]
            for j, c in enumerate(row):
                if c:
                    triplets.append((h, joint.area_offset + j, c))
        if args.format == "csv":
            rows = ["%d,%d,%d" % triple for triple in triplets]
            return _csv_document("height,area,count", rows)
        return _json_document({
            "m": args.m,
            "total": str(joint.total),
            "triplets": [[h, a, str(c)] for h, a, c in triplets],
        })
    diag = joint_diagnostics(joint)
    return _json_document({
        "m": diag.m,
        "standardized_area_mean": diag.standardized_area_mean,
        "standardized_area_variance": str(diag.standardized_area_variance),
        "standardized_height_mean": diag.standardized_height_mean,
        "standardized_height_variance": str(diag.standardized_height_variance),
        "correlation": diag.correlation,
        "conditional_gaussian_ks": [[h, k] for h, k in diag.conditional_gaussian_ks],
    })


def sample_volumes(dist: VolumeDistribution, n: int, seed: int) -> list[int]:
    """Inverse-CDF draws against the exact cumulative counts.

    Each draw takes 128 random bits u and picks the smallest volume whose
    cumulative count exceeds (u * total) >> 128; the per-draw bias is below
    2^-128 and the stream is reproducible from the seed.
    """
    prefix = list(accumulate(dist.counts[k]
                             for k in range(dist.bounding_volume + 1)))
    rng = random.Random(seed)
    total = dist.total
    out = []
    for _ in range(n):
        u = rng.getrandbits(128)
        out.append(bisect_right(prefix, (u * total) >> 128))
    return out


def cmd_sample(args: argparse.Namespace) -> OutputDocument:
    """Reproducible volume draws from the exact distribution."""
    if args.n < 1:
        raise ValueError("need --n >= 1")
    spec = _spec_from_args(args)
    volumes = sample_volumes(distribution(spec), args.n, args.seed)
    if args.format == "csv":
        rows = ["%d,%d" % (i, v) for i, v in enumerate(volumes)]
        return _csv_document("index,volume", rows)
    return _json_document({
        "spec": spec.as_dict(),
        "n": args.n,
        "seed": args.seed,
        "volumes": volumes,
    })


def _parse_sizes(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part]


def _add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("ensemble", choices=_KIND_CHOICES)
    for name in ("r", "s", "t", "h", "w", "m"):
        parser.add_argument("--" + name, type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxpart",
        description="Exact volume statistics of box-bounded plane partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="exact volume counts")
    _add_spec_arguments(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_dist)

    p = sub.add_parser("moments", help="closed-form vs empirical moments")
    _add_spec_arguments(p)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_moments)

    p = sub.add_parser("converge", help="KS distances along a family")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("--sizes", type=_parse_sizes, required=True,
                   help="comma list like 2,4,8 or inclusive range like 2..12")
    p.add_argument("--law", choices=("gaussian", "uniform-conv"), required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_converge)

    p = sub.add_parser("ferrers", help="fixed half-perimeter joint law")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--what", choices=("joint", "diagnostics"), default="joint")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_ferrers)

    p = sub.add_parser("sample", help="reproducible draws from the exact law")
    _add_spec_arguments(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        document = args.handler(args)
    except CapExceededError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(document.text)
    else:
        sys.stdout.write(document.text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
