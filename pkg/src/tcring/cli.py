"""Command line front end.

Exit status: 0 on success, 1 when a requested finding does not exist (or a
catalog check fails), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .bounds import (
    DEFAULT_MAX_K,
    NilpotencyCapExceeded,
    Witness,
    cuplength_nilpotency,
    tc_lower_bound,
    zero_divisor_nilpotency,
)
from .catalog import catalog_check, catalog_entries, find_entry
from .classify import ClassificationError, UndecidedBranch, check_poincare_duality, classify_theorem2
from .graded import GradedRing, RingValidationError, base_change, format_terms
from .kunneth import square_ring
from .ringfile import RingFileError, is_manifold_text, parse_manifold, parse_ring, serialize_manifold
from .scalars import QQ, CoefficientRing

EXIT_OK, EXIT_FINDING, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class MissingFinding(Exception):
    pass


def _emit(pairs: list[tuple[str, object]], fmt: str, out) -> None:
    sep = "\t" if fmt == "tsv" else " "
    for key, value in pairs:
        text = str(value).replace("\t", " ").replace("\n", " ")
        out.write(f"{key}{sep}{text}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_ring(path: str) -> GradedRing:
    return parse_ring(_read(path))


def _witness_pairs(w: Witness | None) -> list[tuple[str, object]]:
    if w is None:
        return [("witness_factors", "none"), ("witness_product", "0")]
    product = format_terms((lab, c.value) for lab, c in w.product.terms())
    return [("witness_factors", ",".join(w.factors)), ("witness_product", product)]


def cmd_validate(args) -> list[tuple[str, object]]:
    text = _read(args.file)
    if is_manifold_text(text):
        from .classify import validate_manifold

        data = parse_manifold(text, Path(args.file).parent)
        validate_manifold(data)
        return [
            ("manifold", data.name),
            ("dim", data.dimension),
            ("rings", ",".join(str(c) for c in (R.coeff for R in data.ordered_rings()))),
            ("valid", "yes"),
        ]
    R = parse_ring(text)
    return [("ring", R.name), ("coeff", R.coeff), ("basis_size", len(R)), ("valid", "yes")]


def cmd_info(args) -> list[tuple[str, object]]:
    R = _load_ring(args.file)
    pairs: list[tuple[str, object]] = [
        ("ring", R.name),
        ("coeff", R.coeff),
        ("dim", R.formal_dim if R.formal_dim is not None else "none"),
        ("basis", " ".join(f"{lab}:{d}" for lab, d in R.basis)),
        ("ranks", " ".join(f"{d}:{n}" for d, n in R.dims().items())),
        ("products", len(R.table)),
    ]
    if R.formal_dim is not None:
        F = R if R.coeff.is_field else base_change(R, QQ)
        report = check_poincare_duality(F)
        pairs.append(("poincare_duality", "yes" if report else "no: " + "; ".join(report.failures())))
    return pairs


def _max_k(args) -> int:
    return args.max_k if getattr(args, "max_k", None) is not None else DEFAULT_MAX_K


def cmd_zcl(args) -> list[tuple[str, object]]:
    R = _load_ring(args.file)
    zcl, w = zero_divisor_nilpotency(square_ring(R), _max_k(args))
    pairs: list[tuple[str, object]] = [("ring", R.name), ("coeff", R.coeff), ("zcl", zcl)]
    if args.witness:
        if w is None:
            _emit(pairs, args.format, sys.stdout)
            raise MissingFinding(f"{R.name}: the zero-divisor ideal is zero, so there is no witness")
        pairs += _witness_pairs(w)
    return pairs


def cmd_cuplength(args) -> list[tuple[str, object]]:
    R = _load_ring(args.file)
    nil, w = cuplength_nilpotency(R)
    return [
        ("ring", R.name),
        ("coeff", R.coeff),
        ("cuplength_nil", nil),
        ("cat_lower_bound", nil),
        ("cup_witness", " * ".join(w.factors) if w else "none"),
    ]


def cmd_tc_bound(args) -> list[tuple[str, object]]:
    R = _load_ring(args.file)
    if args.coeff:
        target = CoefficientRing.parse(args.coeff)
        if target != R.coeff:
            try:
                R = base_change(R, target)
            except ValueError as exc:
                raise InputError(str(exc)) from None
    rep = tc_lower_bound(R, _max_k(args))
    pairs: list[tuple[str, object]] = [
        ("ring", rep.ring_name),
        ("coeff", rep.coeff),
        ("zcl", rep.zcl),
        ("tc_lower_bound", rep.tc_lower_bound),
        ("cuplength_nil", rep.cuplength_nil),
        ("cat_lower_bound", rep.cat_lower_bound),
    ]
    return pairs + _witness_pairs(rep.witness)


def cmd_classify(args) -> list[tuple[str, object]]:
    data = parse_manifold(_read(args.file), Path(args.file).parent)
    v = classify_theorem2(data)
    pairs: list[tuple[str, object]] = [
        ("manifold", data.name),
        ("verdict", v.label),
        ("tc_floor", v.tc_floor),
        ("reason", v.reason),
    ]
    if v.witness is not None:
        pairs.append(("witness_coeff", v.witness_coeff))
        pairs += _witness_pairs(v.witness)
    return pairs


def cmd_catalog(args) -> list[tuple[str, object]]:
    entries = catalog_entries()
    if args.action == "list":
        pairs = []
        for e in entries:
            known = []
            if e.known_tc is not None:
                known.append(f"TC={e.known_tc}")
            if e.known_cat is not None:
                known.append(f"cat={e.known_cat}")
            pairs.append((e.name, f"dim={e.data.dimension} " + " ".join(known)))
        return pairs
    if args.action == "show":
        if not args.name:
            raise InputError("catalog show needs an entry name")
        try:
            e = find_entry(args.name, entries)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        sys.stdout.write(serialize_manifold(e.data))
        return []
    results = catalog_check(entries)
    failed = False
    pairs = []
    for r in results:
        pairs.append((r.name, "PASS" if r.passed else "FAIL"))
        for msg in r.failures:
            print(msg, file=sys.stderr)
        failed |= not r.passed
    if failed:
        _emit(pairs, args.format, sys.stdout)
        raise MissingFinding("catalog check failed")
    return pairs


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "tsv"], default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="tcring", description=__doc__.split("\n")[0], parents=[fmt])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[fmt], help="validate a ring or manifold file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("info", parents=[fmt], help="summarize a ring file")
    s.add_argument("file")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("zcl", parents=[fmt], help="zero-divisor cup length")
    s.add_argument("file")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--max-k", type=int, dest="max_k")
    s.set_defaults(func=cmd_zcl)

    s = sub.add_parser("cuplength", parents=[fmt], help="cup-length lower bound for cat")
    s.add_argument("file")
    s.set_defaults(func=cmd_cuplength)

    s = sub.add_parser("tc-bound", parents=[fmt], help="lower bounds for TC and cat")
    s.add_argument("file")
    s.add_argument("--coeff", help="base-change a Z ring to Q or F_p first")
    s.add_argument("--max-k", type=int, dest="max_k")
    s.set_defaults(func=cmd_tc_bound)

    s = sub.add_parser("classify", parents=[fmt], help="admissibility test for TC <= 3")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("catalog", parents=[fmt], help="built-in manifolds")
    s.add_argument("action", choices=["list", "show", "check"])
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    try:
        pairs = args.func(args)
    except (InputError, RingFileError, RingValidationError, ClassificationError) as exc:
        if isinstance(exc, UndecidedBranch):
            print(f"undecided: {exc}", file=sys.stderr)
            return EXIT_FINDING
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MissingFinding, NilpotencyCapExceeded) as exc:
        print(f"{exc}", file=sys.stderr)
        return EXIT_FINDING
    _emit(pairs, args.format, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
