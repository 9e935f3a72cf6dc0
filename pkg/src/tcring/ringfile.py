"""Line-oriented text format for rings and manifolds.

Ring file::

    # comment
    ring S2
    coeff Z                 # Z | Q | F_<p>
    dim 2                   # optional formal dimension
    basis v:2               # unit 1:0 implicit; several basis lines allowed
    mul v*v = 0             # or: mul a*b = 2*c + -d + e

Manifold file: a header followed by one ring section per coefficient ring
(``ring`` starts a section; ``ringfile <path>`` pulls one in from disk)::

    manifold Wu
    pi1rank 0
    homology 0:1
    homology 2:0,2^1        # rank 0 plus a Z/2 summand
    homology 5:1
    ring Wu
    coeff F_2
    ...

Structure constants are integers for every coefficient ring (reduced on
load); ``p/q`` is also accepted so that Q rings round-trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .classify import HomologyProfile, ManifoldData, _prime_of
from .graded import GradedRing, make_ring
from .scalars import CoefficientRing

__all__ = [
    "RingFileError",
    "RingFile",
    "parse_ring_file",
    "parse_ring",
    "serialize_ring",
    "parse_manifold",
    "serialize_manifold",
    "is_manifold_text",
]

LABEL = r"[A-Za-z0-9_.'⊗]+"
_LABEL_RE = re.compile(LABEL)
_TERM_RE = re.compile(rf"\s*(?:(-?\d+(?:/\d+)?)\s*\*\s*)?(-?)({LABEL})\s*")


class RingFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class RingFile:
    """Parsed form of one ring section, before validation."""

    name: str
    coeff: CoefficientRing
    dim: int | None = None
    basis: list[tuple[str, int]] = field(default_factory=list)
    products: dict[tuple[str, str], list[tuple[str, Fraction]]] = field(default_factory=dict)

    def build(self) -> GradedRing:
        table = {
            pair: [(lab, _to_number(c)) for lab, c in terms] for pair, terms in self.products.items()
        }
        return make_ring(self.coeff, self.basis, table, self.dim, self.name)


def _to_number(c: Fraction):
    return c.numerator if c.denominator == 1 else c


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _int(text: str, what: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise RingFileError(f"{what} must be an integer, got {text!r}", lineno) from None


def _check_label(label: str, lineno: int) -> str:
    if not _LABEL_RE.fullmatch(label):
        raise RingFileError(f"bad label {label!r}", lineno)
    if label.isdigit() and label != "1":
        raise RingFileError(f"label {label!r} is a number", lineno)
    return label


def _parse_terms(rhs: str, lineno: int) -> list[tuple[str, Fraction]]:
    rhs = rhs.strip()
    if rhs == "0":
        return []
    terms = []
    for chunk in rhs.split("+"):
        m = _TERM_RE.fullmatch(chunk)
        if not chunk.strip() or not m:
            raise RingFileError(f"cannot parse term {chunk.strip()!r}", lineno)
        coeff_text, minus, label = m.groups()
        if coeff_text is not None and minus:
            raise RingFileError(f"cannot parse term {chunk.strip()!r}", lineno)
        c = Fraction(coeff_text) if coeff_text is not None else Fraction(1)
        if minus:
            c = -c
        if label.isdigit() and label != "1":
            raise RingFileError(f"term {chunk.strip()!r} has no label", lineno)
        terms.append((label, c))
    return terms


def _parse_ring_lines(lines: list[tuple[int, str]]) -> RingFile:
    rf: RingFile | None = None
    seen_coeff = False
    known: set[str] = {"1"}
    for lineno, line in lines:
        directive, _, rest = line.partition(" ")
        rest = rest.strip()
        if directive == "ring":
            if rf is not None:
                raise RingFileError("only one ring per section", lineno)
            if not rest or " " in rest:
                raise RingFileError("ring needs a single identifier", lineno)
            rf = RingFile(rest, CoefficientRing.parse("Z"))
            continue
        if rf is None:
            raise RingFileError(f"expected 'ring <name>' before {directive!r}", lineno)
        if directive == "coeff":
            if seen_coeff:
                raise RingFileError("coeff given twice", lineno)
            try:
                rf.coeff = CoefficientRing.parse(rest)
            except ValueError as exc:
                raise RingFileError(str(exc), lineno) from None
            seen_coeff = True
        elif directive == "dim":
            if rf.dim is not None:
                raise RingFileError("dim given twice", lineno)
            rf.dim = _int(rest, "dim", lineno)
        elif directive == "basis":
            if not rest:
                raise RingFileError("empty basis line", lineno)
            for tok in rest.split():
                lab, colon, deg = tok.partition(":")
                if not colon:
                    raise RingFileError(f"basis entry {tok!r} must be label:degree", lineno)
                _check_label(lab, lineno)
                d = _int(deg, "degree", lineno)
                if lab == "1" and not rf.basis and d == 0:
                    rf.basis.append((lab, d))
                    continue
                if lab in known:
                    raise RingFileError(f"duplicate basis label {lab!r}", lineno)
                known.add(lab)
                rf.basis.append((lab, d))
        elif directive == "mul":
            lhs, eq, rhs = rest.partition("=")
            if not eq:
                raise RingFileError("mul needs '='", lineno)
            a, star, b = lhs.strip().partition("*")
            a, b = a.strip(), b.strip()
            if not star or not a or not b:
                raise RingFileError("left side must be <a>*<b>", lineno)
            for lab in (a, b):
                _check_label(lab, lineno)
                if lab not in known:
                    raise RingFileError(f"unknown label {lab!r}", lineno)
            if (a, b) in rf.products:
                raise RingFileError(f"product {a}*{b} given twice", lineno)
            terms = _parse_terms(rhs, lineno)
            for lab, _ in terms:
                if lab not in known:
                    raise RingFileError(f"unknown label {lab!r}", lineno)
            rf.products[(a, b)] = terms
        else:
            raise RingFileError(f"unknown directive {directive!r}", lineno)
    if rf is None:
        raise RingFileError("no 'ring' directive found")
    if not seen_coeff:
        raise RingFileError(f"ring {rf.name}: missing 'coeff'")
    return rf


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if line:
            out.append((n, " ".join(line.split())))
    return out


def parse_ring_file(text: str) -> RingFile:
    return _parse_ring_lines(_lines(text))


def parse_ring(text: str) -> GradedRing:
    """Parse and validate a ring file."""
    return parse_ring_file(text).build()


def _format_coeff(v) -> str:
    return str(v)


def serialize_ring(R: GradedRing) -> str:
    lines = [f"ring {R.name}", f"coeff {R.coeff}"]
    if R.formal_dim is not None:
        lines.append(f"dim {R.formal_dim}")
    basis = [f"{lab}:{d}" for lab, d in R.basis[1:]]
    if R.labels[0] != "1":
        basis.insert(0, f"{R.labels[0]}:0")
    if basis:
        lines.append("basis " + " ".join(basis))
    for (i, j), e in R.table.items():
        terms = []
        for lab, c in e.terms():
            v = c.value
            terms.append(lab if v == 1 else f"-{lab}" if v == -1 else f"{_format_coeff(v)}*{lab}")
        lines.append(f"mul {R.labels[i]}*{R.labels[j]} = " + " + ".join(terms))
    return "\n".join(lines) + "\n"


# manifolds ----------------------------------------------------------------------


def is_manifold_text(text: str) -> bool:
    lines = _lines(text)
    return bool(lines) and lines[0][1].split(" ", 1)[0] == "manifold"


def _parse_homology(rest: str, lineno: int) -> tuple[int, int, list[int]]:
    deg, colon, groups = rest.partition(":")
    if not colon:
        raise RingFileError("homology line must be <i>:<rank>[,p^e...]", lineno)
    i = _int(deg.strip(), "homology degree", lineno)
    parts = [p.strip() for p in groups.split(",")]
    rank = _int(parts[0], "rank", lineno)
    torsion = []
    for tok in parts[1:]:
        p, caret, e = tok.partition("^")
        order = _int(p, "torsion prime", lineno) ** (_int(e, "exponent", lineno) if caret else 1)
        try:
            _prime_of(order)
        except ValueError as exc:
            raise RingFileError(str(exc), lineno) from None
        if _prime_of(order) != _int(p, "torsion prime", lineno):
            raise RingFileError(f"{tok!r}: {p} is not prime", lineno)
        torsion.append(order)
    return i, rank, torsion


def parse_manifold(text: str, base_dir: Path | str | None = None) -> ManifoldData:
    lines = _lines(text)
    name = None
    dim = None
    pi1 = 0
    orientable = True
    groups: dict[int, tuple[int, list[int]]] = {}
    sections: list[list[tuple[int, str]]] = []
    for lineno, line in lines:
        directive, _, rest = line.partition(" ")
        rest = rest.strip()
        if sections and directive not in ("ring", "ringfile"):
            sections[-1].append((lineno, line))
            continue
        if directive == "manifold":
            if name is not None:
                raise RingFileError("manifold given twice", lineno)
            name = rest
        elif name is None:
            raise RingFileError("expected 'manifold <name>' first", lineno)
        elif directive == "pi1rank":
            pi1 = _int(rest, "pi1rank", lineno)
        elif directive == "dim":
            dim = _int(rest, "dim", lineno)
        elif directive == "orientable":
            if rest not in ("yes", "no"):
                raise RingFileError("orientable must be yes or no", lineno)
            orientable = rest == "yes"
        elif directive == "homology":
            i, rank, torsion = _parse_homology(rest, lineno)
            if i in groups:
                raise RingFileError(f"homology in degree {i} given twice", lineno)
            groups[i] = (rank, torsion)
        elif directive == "ring":
            sections.append([(lineno, line)])
        elif directive == "ringfile":
            path = Path(rest)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            try:
                sub = path.read_text()
            except OSError as exc:
                raise RingFileError(f"cannot read {path}: {exc.strerror}", lineno) from None
            sections.append(_lines(sub))
        else:
            raise RingFileError(f"unknown directive {directive!r}", lineno)
    if name is None:
        raise RingFileError("no 'manifold' directive found")
    if dim is None:
        if not groups:
            raise RingFileError("manifold needs homology lines or a dim")
        dim = max(groups)
    profile = HomologyProfile.from_degrees(dim, groups)
    rings: dict[CoefficientRing, GradedRing] = {}
    for sec in sections:
        R = _parse_ring_lines(sec).build()
        if R.coeff in rings:
            raise RingFileError(f"two ring sections over {R.coeff}", sec[0][0])
        rings[R.coeff] = R
    return ManifoldData(name, profile, rings, pi1_free_rank=pi1, orientable=orientable)


def serialize_manifold(data: ManifoldData) -> str:
    prof = data.profile
    lines = [f"manifold {data.name}"]
    if not data.orientable:
        lines.append("orientable no")
    lines.append(f"dim {prof.dimension}")
    lines.append(f"pi1rank {data.pi1_free_rank}")
    for i in range(prof.dimension + 1):
        if prof.ranks[i] or prof.torsion[i]:
            tors = "".join(f",{_prime_of(t)}^{_exponent(t)}" for t in prof.torsion[i])
            lines.append(f"homology {i}:{prof.ranks[i]}{tors}")
    out = "\n".join(lines) + "\n"
    for R in data.ordered_rings():
        out += serialize_ring(R)
    return out


def _exponent(order: int) -> int:
    p = _prime_of(order)
    e = 0
    while order > 1:
        order //= p
        e += 1
    return e
