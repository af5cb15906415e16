"""Command-line front end: build, validate, check, measure, export.

Documents travel through files or standard input/output ("-" means stdin),
so subcommands compose into shell pipelines.  Exit codes: 0 success or pass,
1 recognized failure (validation or check), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructions, horns
from .complexes import (
    OrientedComplex,
    RealizedComplex,
    euler_characteristic_complex,
    realize,
    validate_complex,
    validate_oriented,
)
from .core import enumerate_simplicial_maps, validate
from .documents import ObjectDocument, parse_document, serialize_document
from .errors import DocumentError, SSetError
from .fincat import nerve, validate_category
from .homology import euler_characteristic, homology_groups, pi0
from .constructions import sub_sset

CHECKS = {
    "kan": horns.is_kan_up_to,
    "qcat": horns.is_quasicategory_up_to,
    "nerve": horns.is_nerve_up_to,
    "groupoid-nerve": horns.is_groupoid_nerve_up_to,
}


def _use_color(stream) -> bool:
    return stream.isatty() and not os.environ.get("NO_COLOR")


def _verdict(passed: bool, stream) -> str:
    word = "PASS" if passed else "FAIL"
    if _use_color(stream):
        code = "32" if passed else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str | None, data: bytes):
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _load(path: str, *kinds) -> ObjectDocument:
    doc = parse_document(_read(path))
    if kinds and doc.kind not in kinds:
        raise DocumentError(f"expected a {'/'.join(kinds)} document, got {doc.kind}", path)
    return doc


def _oriented_of(doc: ObjectDocument):
    if doc.kind == "oriented_complex":
        return doc.obj
    raise DocumentError("expected an oriented_complex document")


# -- OFF export -------------------------------------------------------------------


def off_text(rc: RealizedComplex) -> str:
    """OFF mesh text: counts, projected vertex coordinates, maximal faces.

    Only the first three coordinates of the basis embedding are written; for
    more than three vertices this is a projection, not a geometric embedding.
    """
    lines = ["OFF", f"{len(rc.labels)} {len(rc.maximal)} 0"]
    for i in range(len(rc.labels)):
        row = list(rc.coordinates[i][:3]) + [0.0, 0.0]
        lines.append(" ".join(f"{c:.6f}" for c in row[:3]))
    for cell in rc.maximal:
        lines.append(" ".join([str(len(cell))] + [str(i) for i in cell]))
    return "\n".join(lines) + "\n"


def parse_off(text: str):
    """Parse an OFF file back into (coordinates, faces); raises on bad shape."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != "OFF":
        raise DocumentError("missing OFF header")
    counts = lines[1].split()
    if len(counts) != 3:
        raise DocumentError("counts line should hold three integers")
    nv, nf, _ = (int(c) for c in counts)
    if len(lines) != 2 + nv + nf:
        raise DocumentError(f"expected {2 + nv + nf} lines, found {len(lines)}")
    coords = [tuple(float(v) for v in lines[2 + i].split()) for i in range(nv)]
    faces = []
    for i in range(nf):
        parts = [int(v) for v in lines[2 + nv + i].split()]
        if parts[0] != len(parts) - 1:
            raise DocumentError(f"face line {i} declares {parts[0]} vertices")
        if any(not 0 <= v < nv for v in parts[1:]):
            raise DocumentError(f"face line {i} references a missing vertex")
        faces.append(tuple(parts[1:]))
    return coords, faces


# -- build ------------------------------------------------------------------------


def _build(args) -> int:
    op = args.op
    rest = args.args
    trunc = args.truncation

    def need(n):
        if len(rest) != n:
            raise DocumentError(f"build {op} takes {n} argument(s), got {len(rest)}")

    if op == "simplex":
        need(1)
        n = int(rest[0])
        obj = constructions.standard_simplex(n, trunc if trunc is not None else n)
    elif op == "boundary":
        need(1)
        n = int(rest[0])
        obj = constructions.boundary(n, trunc if trunc is not None else max(n, 0))
    elif op == "horn":
        need(2)
        n, k = int(rest[0]), int(rest[1])
        obj = constructions.horn(n, k, trunc if trunc is not None else n)
    elif op == "nerve":
        need(1)
        doc = _load(rest[0], "category")
        report = validate_category(doc.obj)
        if not report.ok:
            print(report, file=sys.stderr)
            return 1
        obj = nerve(doc.obj, trunc if trunc is not None else 3)
    elif op == "product":
        need(2)
        a = _load(rest[0], "sset")
        b = _load(rest[1], "sset")
        obj = constructions.product(a.obj, b.obj)
    elif op == "coproduct":
        need(2)
        a = _load(rest[0], "sset")
        b = _load(rest[1], "sset")
        obj = constructions.coproduct(a.obj, b.obj)
    elif op == "collapse":
        need(2)
        a = _load(rest[0], "sset")
        members_doc = _load(rest[1], "subset")
        try:
            keys = [a.obj.key(d, i) for d, i in members_doc.obj]
        except IndexError:
            raise DocumentError("subset references simplices missing from the parent")
        try:
            sub = sub_sset(a.obj, keys)
        except SSetError as exc:
            print(exc, file=sys.stderr)
            return 1
        obj, _ = constructions.collapse(a.obj, sub)
    elif op == "skeleton":
        need(2)
        a = _load(rest[0], "sset")
        obj = constructions.skeleton(a.obj, int(rest[1]))
    elif op == "from-oriented":
        need(1)
        oc = _oriented_of(_load(rest[0], "oriented_complex"))
        report = validate_oriented(oc)
        if not report.ok:
            print(report, file=sys.stderr)
            return 1
        obj = constructions.oriented_to_sset(oc, trunc)
    else:
        raise DocumentError(f"unknown build operation {op!r}")
    name = args.name or f"{op}-" + "-".join(str(x) for x in rest if "/" not in str(x))
    _write(args.out, serialize_document(ObjectDocument("sset", name, obj, obj.truncation)))
    return 0


# -- other subcommands ---------------------------------------------------------------


def _validate(args) -> int:
    doc = _load(args.file)
    if doc.kind == "sset":
        report = validate(doc.obj)
    elif doc.kind == "complex":
        report = validate_complex(doc.obj.vertices, doc.obj.simplices)
    elif doc.kind == "oriented_complex":
        plain = validate_complex(doc.obj.complex.vertices, doc.obj.complex.simplices)
        report = plain if not plain.ok else validate_oriented(doc.obj)
    elif doc.kind == "category":
        report = validate_category(doc.obj)
    else:
        raise DocumentError("subset documents validate against their parent; nothing to check")
    print(report)
    return 0 if report.ok else 1


def _check(args) -> int:
    doc = _load(args.file, "sset")
    report = CHECKS[args.predicate](doc.obj, args.bound)
    print(f"{_verdict(report.passed, sys.stdout)} {report}")
    return 0 if report.passed else 1


def _homology(args) -> int:
    doc = _load(args.file, "sset")
    K = doc.obj
    top = args.max if args.max is not None else max(K.truncation - 1, 0)
    if top > K.truncation:
        raise DocumentError(f"--max {top} exceeds truncation {K.truncation}")
    groups = homology_groups(K, top)
    if args.json:
        records = [
            {"n": n, "betti": g.betti, "torsion": list(g.torsion), "caveat": g.truncation_caveat}
            for n, g in enumerate(groups)
        ]
        print(json.dumps(records, sort_keys=True))
    else:
        for n, g in enumerate(groups):
            print(f"H_{n} = {g}")
    return 0


def _euler(args) -> int:
    doc = _load(args.file)
    if doc.kind == "sset":
        print(euler_characteristic(doc.obj))
    elif doc.kind == "complex":
        print(euler_characteristic_complex(doc.obj))
    elif doc.kind == "oriented_complex":
        print(euler_characteristic_complex(doc.obj.complex))
    else:
        raise DocumentError("euler expects an sset or complex document")
    return 0


def _pi0(args) -> int:
    doc = _load(args.file, "sset")
    count, labels = pi0(doc.obj)
    print(count)
    for key, comp in labels.items():
        print(f"  {key.label or key.index}: component {comp}")
    return 0


def _hom_count(args) -> int:
    src = _load(args.src, "sset")
    dst = _load(args.dst, "sset")
    print(len(enumerate_simplicial_maps(src.obj, dst.obj)))
    return 0


def _map_space(args) -> int:
    K = _load(args.K, "sset")
    L = _load(args.L, "sset")
    maps = constructions.mapping_space_level(K.obj, L.obj, args.level)
    print(len(maps))
    return 0


def _realize(args) -> int:
    doc = _load(args.file, "complex", "oriented_complex")
    plain = doc.obj if doc.kind == "complex" else doc.obj.complex
    report = validate_complex(plain.vertices, plain.simplices)
    if not report.ok:
        print(report, file=sys.stderr)
        return 1
    rc = realize(report.complex)
    _write(args.out, off_text(rc).encode("utf-8"))
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ssetkit",
        description="construct, combine, validate and recognize finitely presented "
        "simplicial sets, complexes and nerves",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct an sset document")
    b.add_argument(
        "op",
        choices=[
            "simplex", "boundary", "horn", "nerve", "product",
            "coproduct", "collapse", "skeleton", "from-oriented",
        ],
    )
    b.add_argument("args", nargs="*")
    b.add_argument("--truncation", type=int, default=None)
    b.add_argument("--name", default=None)
    b.add_argument("--out", default=None)
    b.set_defaults(run=_build)

    v = sub.add_parser("validate", help="validate any document kind")
    v.add_argument("file")
    v.set_defaults(run=_validate)

    c = sub.add_parser("check", help="bounded horn-filling recognition")
    c.add_argument("predicate", choices=sorted(CHECKS))
    c.add_argument("file")
    c.add_argument("--bound", type=int, required=True)
    c.set_defaults(run=_check)

    h = sub.add_parser("homology", help="integral homology of an sset document")
    h.add_argument("file", nargs="?", default="-")
    h.add_argument("--max", type=int, default=None)
    h.add_argument("--json", action="store_true")
    h.set_defaults(run=_homology)

    e = sub.add_parser("euler", help="Euler characteristic")
    e.add_argument("file", nargs="?", default="-")
    e.set_defaults(run=_euler)

    z = sub.add_parser("pi0", help="path components")
    z.add_argument("file", nargs="?", default="-")
    z.set_defaults(run=_pi0)

    hc = sub.add_parser("hom-count", help="count simplicial maps between documents")
    hc.add_argument("src")
    hc.add_argument("dst")
    hc.set_defaults(run=_hom_count)

    ms = sub.add_parser("map-space", help="size of one level of the mapping object")
    ms.add_argument("K")
    ms.add_argument("L")
    ms.add_argument("--level", type=int, required=True)
    ms.set_defaults(run=_map_space)

    r = sub.add_parser("realize", help="export a complex as an OFF mesh")
    r.add_argument("file")
    r.add_argument("--out", default=None)
    r.set_defaults(run=_realize)

    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.run(args)
    except (DocumentError, SSetError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
