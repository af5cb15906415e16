"""JSON object documents: parsing with positioned errors, canonical output.

One document holds one tagged object.  Bodies mirror the presentations:
simplicial sets list dimensions as arrays of simplex records whose faces are
``[[word...], keyIndex]`` pairs; categories list objects, morphisms and
composition triples; complexes list vertices and simplices as label arrays.

Serialization is canonical (sorted keys, two-space indent, trailing newline),
so serialize-of-parse is a fixed point byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complexes import AbstractComplex, OrientedComplex, oriented_complex
from .core import FiniteSSet, SimplexRef
from .errors import DocumentError, SSetError
from .fincat import FinCategory, make_category

KINDS = ("sset", "complex", "oriented_complex", "category", "subset")


@dataclass
class ObjectDocument:
    kind: str
    name: str
    obj: object
    truncation: int | None = None


def _expect(cond: bool, message: str, path: str):
    if not cond:
        raise DocumentError(message, path)


def _get(mapping, key, kind, path, optional=False):
    if key not in mapping:
        if optional:
            return None
        raise DocumentError(f"missing field '{key}'", path)
    value = mapping[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(
            f"field '{key}' should be {getattr(kind, '__name__', kind)}", path
        )
    return value


# -- parsing ------------------------------------------------------------------


def _parse_sset(body, truncation, path) -> FiniteSSet:
    dims = _get(body, "dimensions", list, path)
    _expect(truncation is not None, "sset documents need a truncation", path)
    _expect(
        len(dims) <= truncation + 1,
        f"{len(dims)} dimension blocks exceed truncation {truncation}",
        path + ".dimensions",
    )
    K = FiniteSSet(truncation)
    counts = [len(block) if isinstance(block, list) else 0 for block in dims]
    for dim, block in enumerate(dims):
        bpath = f"{path}.dimensions[{dim}]"
        _expect(isinstance(block, list), "dimension block should be a list", bpath)
        for idx, record in enumerate(block):
            rpath = f"{bpath}[{idx}]"
            _expect(isinstance(record, dict), "simplex record should be an object", rpath)
            label = record.get("label")
            _expect(
                label is None or isinstance(label, str), "label should be a string", rpath
            )
            raw_faces = _get(record, "faces", list, rpath)
            expected = dim + 1 if dim >= 1 else 0
            _expect(
                len(raw_faces) == expected,
                f"a {dim}-simplex needs {expected} faces, found {len(raw_faces)}",
                rpath + ".faces",
            )
            faces = []
            for i, entry in enumerate(raw_faces):
                fpath = f"{rpath}.faces[{i}]"
                ok = (
                    isinstance(entry, list)
                    and len(entry) == 2
                    and isinstance(entry[0], list)
                    and all(isinstance(a, int) for a in entry[0])
                    and isinstance(entry[1], int)
                )
                _expect(ok, "face entry should be [[word...], keyIndex]", fpath)
                word, key_index = tuple(entry[0]), entry[1]
                target_dim = dim - 1 - len(word)
                _expect(
                    0 <= target_dim < len(dims),
                    f"word of length {len(word)} leaves no room for a target",
                    fpath,
                )
                _expect(
                    0 <= key_index < counts[target_dim],
                    f"dangling reference: no simplex {key_index} in dimension {target_dim}",
                    fpath,
                )
                try:
                    faces.append(SimplexRef(word, K.key(target_dim, key_index)))
                except ValueError as exc:
                    raise DocumentError(str(exc), fpath)
            K.add_simplex(dim, faces, label=label)
    return K.freeze()


def _parse_label_list(raw, path):
    _expect(isinstance(raw, list), "expected a list of labels", path)
    out = []
    for i, v in enumerate(raw):
        _expect(isinstance(v, str), "labels should be strings", f"{path}[{i}]")
        out.append(v)
    return out


def _parse_complex_body(body, path):
    vertices = _parse_label_list(_get(body, "vertices", list, path), path + ".vertices")
    raw = _get(body, "simplices", list, path)
    simplices = []
    for i, s in enumerate(raw):
        simplices.append(frozenset(_parse_label_list(s, f"{path}.simplices[{i}]")))
    return vertices, simplices


def _parse_complex(body, path) -> AbstractComplex:
    # schema check only; downward closure is the validator's business
    vertices, simplices = _parse_complex_body(body, path)
    return AbstractComplex(tuple(vertices), frozenset(simplices))


def _parse_oriented(body, path) -> OrientedComplex:
    plain = _parse_complex(body, path)
    raw = _get(body, "order", list, path)
    pairs = []
    for i, pair in enumerate(raw):
        ppath = f"{path}.order[{i}]"
        ok = isinstance(pair, list) and len(pair) == 2 and all(isinstance(v, str) for v in pair)
        _expect(ok, "order entries should be [a, b] label pairs", ppath)
        _expect(
            pair[0] in plain.vertices and pair[1] in plain.vertices,
            f"order pair {pair} uses unknown vertices",
            ppath,
        )
        pairs.append(tuple(pair))
    try:
        return oriented_complex(plain, pairs)
    except SSetError as exc:
        raise DocumentError(str(exc), path + ".order")


def _parse_category(body, path) -> FinCategory:
    objects = _parse_label_list(_get(body, "objects", list, path), path + ".objects")
    raw_morphisms = _get(body, "morphisms", list, path)
    morphisms = {}
    for i, record in enumerate(raw_morphisms):
        mpath = f"{path}.morphisms[{i}]"
        _expect(isinstance(record, dict), "morphism should be an object", mpath)
        name = _get(record, "name", str, mpath)
        src = _get(record, "src", str, mpath)
        dst = _get(record, "dst", str, mpath)
        _expect(name not in morphisms, f"duplicate morphism name {name}", mpath)
        _expect(src in objects, f"unknown source object {src}", mpath)
        _expect(dst in objects, f"unknown target object {dst}", mpath)
        morphisms[name] = (src, dst)
    raw_identities = _get(body, "identities", dict, path)
    identity = {}
    for obj, name in raw_identities.items():
        ipath = f"{path}.identities.{obj}"
        _expect(obj in objects, f"unknown object {obj}", ipath)
        _expect(isinstance(name, str) and name in morphisms, f"unknown morphism {name}", ipath)
        identity[obj] = name
    _expect(
        set(identity) == set(objects), "every object needs an identity", path + ".identities"
    )
    table = {}
    # identity composites default by the unit law; explicit triples may override
    for name, (src, dst) in morphisms.items():
        table[(identity[src], name)] = name
        table[(name, identity[dst])] = name
    raw_comp = _get(body, "composition", list, path)
    for i, triple in enumerate(raw_comp):
        tpath = f"{path}.composition[{i}]"
        ok = isinstance(triple, list) and len(triple) == 3 and all(
            isinstance(v, str) for v in triple
        )
        _expect(ok, "composition entries should be [f, g, gf] triples", tpath)
        f, g, gf = triple
        for name in triple:
            _expect(name in morphisms, f"unknown morphism {name}", tpath)
        _expect(
            morphisms[f][1] == morphisms[g][0],
            f"({f}, {g}) is not a composable pair",
            tpath,
        )
        table[(f, g)] = gf
    return make_category(objects, morphisms, identity, table)


def _parse_subset(body, path):
    raw = _get(body, "members", list, path)
    members = []
    for i, entry in enumerate(raw):
        mpath = f"{path}.members[{i}]"
        ok = isinstance(entry, list) and len(entry) == 2 and all(isinstance(v, int) for v in entry)
        _expect(ok, "members should be [dim, index] pairs", mpath)
        members.append((entry[0], entry[1]))
    return members


def parse_document(data) -> ObjectDocument:
    """Parse bytes or text into a document, with path-annotated errors."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"not UTF-8: {exc}")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}", f"line {exc.lineno} column {exc.colno}")
    _expect(isinstance(raw, dict), "document should be a JSON object", "$")
    kind = _get(raw, "kind", str, "$")
    _expect(kind in KINDS, f"unknown kind {kind!r}; expected one of {KINDS}", "$.kind")
    name = _get(raw, "name", str, "$")
    body = _get(raw, "body", dict, "$")
    truncation = _get(raw, "truncation", int, "$", optional=True)
    if kind == "sset":
        obj = _parse_sset(body, truncation, "$.body")
    elif kind == "complex":
        obj = _parse_complex(body, "$.body")
    elif kind == "oriented_complex":
        obj = _parse_oriented(body, "$.body")
    elif kind == "category":
        obj = _parse_category(body, "$.body")
    else:
        obj = _parse_subset(body, "$.body")
    return ObjectDocument(kind, name, obj, truncation if kind == "sset" else None)


# -- serialization ---------------------------------------------------------------


def _sset_payload(K: FiniteSSet) -> dict:
    dims = []
    for dim in range(K.top_dim() + 1):
        block = []
        for x in K.simplices(dim):
            faces = [[list(ref.word), ref.key.index] for ref in K.faces(x)]
            block.append({"label": x.label, "faces": faces})
        dims.append(block)
    return {"dimensions": dims}


def _sorted_simplices(C: AbstractComplex):
    return sorted(
        (sorted(s, key=str) for s in C.simplices), key=lambda s: (len(s), s)
    )


def _complex_payload(C: AbstractComplex) -> dict:
    return {
        "vertices": list(C.vertices),
        "simplices": [list(s) for s in _sorted_simplices(C)],
    }


def _oriented_payload(oc: OrientedComplex) -> dict:
    payload = _complex_payload(oc.complex)
    payload["order"] = sorted([a, b] for a, b in oc.order if a != b)
    return payload


def _category_payload(C: FinCategory) -> dict:
    return {
        "objects": list(C.objects),
        "morphisms": [
            {"name": m, "src": C.src[m], "dst": C.dst[m]} for m in C.morphisms
        ],
        "identities": dict(C.identity),
        "composition": sorted([f, g, h] for (f, g), h in C.table.items()),
    }


def serialize_document(doc: ObjectDocument) -> bytes:
    """Canonical bytes: fixed field set, sorted keys, two-space indent."""
    if doc.kind == "sset":
        body = _sset_payload(doc.obj)
    elif doc.kind == "complex":
        body = _complex_payload(doc.obj)
    elif doc.kind == "oriented_complex":
        body = _oriented_payload(doc.obj)
    elif doc.kind == "category":
        body = _category_payload(doc.obj)
    elif doc.kind == "subset":
        body = {"members": [[d, i] for d, i in doc.obj]}
    else:
        raise DocumentError(f"unknown kind {doc.kind!r}")
    out = {"kind": doc.kind, "name": doc.name, "body": body}
    if doc.kind == "sset":
        out["truncation"] = doc.obj.truncation
    text = json.dumps(out, sort_keys=True, indent=2, separators=(",", ": "))
    return (text + "\n").encode("utf-8")
