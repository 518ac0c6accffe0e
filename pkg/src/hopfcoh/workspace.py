"""Structure-constant workspace files.

One JSON document holds a field, named Hopf algebras, comodules, comodule
algebras, relative Hopf modules and B-modules. Every scalar is a string
("1", "-2", "3/2") so rationals survive JSON exactly; matrices are flat
row-major arrays in the global tensor ordering; structure cubes are nested
[i][j][k] arrays. Loading validates every object and fails atomically with
the object name and a witness.
"""

from __future__ import annotations

import json

from hopfcoh.comodule import Comodule, validate_comodule
from hopfcoh.errors import StructureError
from hopfcoh.hopf import Algebra, HopfAlgebra, NoAntipodeError, make_hopf, validate_hopf
from hopfcoh.linalg import GF, QQ, Field, Matrix
from hopfcoh.relative import (
    AlgebraModule,
    CoinvariantAlgebra,
    ComoduleAlgebra,
    RelHopfModule,
    coinvariant_subalgebra,
    validate_comodule_algebra,
    validate_module,
    validate_rel_hopf_module,
)


class ParseError(ValueError):
    """Malformed file or schema (CLI exit 3)."""


class Workspace:
    def __init__(self, field: Field):
        self.field = field
        self.hopf: dict[str, HopfAlgebra] = {}
        self.comodules: dict[str, Comodule] = {}
        self.comodule_algebras: dict[str, ComoduleAlgebra] = {}
        self.coinvariant_algebras: dict[str, CoinvariantAlgebra] = {}
        self.rel_hopf_modules: dict[str, RelHopfModule] = {}
        self.b_modules: dict[str, AlgebraModule] = {}
        # name resolution for serialization
        self.comodule_hopf: dict[str, str] = {}
        self.algebra_hopf: dict[str, str] = {}
        self.rel_algebra: dict[str, str] = {}
        self.b_algebra: dict[str, str] = {}


def _require(cond, message):
    if not cond:
        raise ParseError(message)


def _parse_field(doc) -> Field:
    _require(isinstance(doc, dict) and "kind" in doc, "field must be {kind: Q|GF, p?}")
    kind = doc["kind"]
    if kind == "Q":
        return QQ
    if kind == "GF":
        _require("p" in doc, "GF field needs p")
        try:
            return GF(int(doc["p"]))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError("unknown field kind %r" % (kind,))


def _scalars(field, values, what):
    try:
        return [field.coerce(v) for v in values]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError("%s: bad scalar (%s)" % (what, exc)) from None


def _matrix(field, rows, cols, flat, what) -> Matrix:
    _require(isinstance(flat, list), "%s must be a flat row-major array" % what)
    if len(flat) != rows * cols:
        raise ParseError("%s: expected %d entries, got %d" % (what, rows * cols, len(flat)))
    return Matrix.from_flat(field, rows, cols, _scalars(field, flat, what))


def _cube(field, dim, nested, what):
    _require(
        isinstance(nested, list) and len(nested) == dim,
        "%s must be a %d^3 nested array" % (what, dim),
    )
    out = []
    for plane in nested:
        _require(isinstance(plane, list) and len(plane) == dim, "%s: bad cube plane" % what)
        out.append([_scalars(field, row, what) for row in plane])
        for row in plane:
            _require(isinstance(row, list) and len(row) == dim, "%s: bad cube row" % what)
    return out


def _check(report, name):
    if not report.ok:
        axiom, witness = report.failures()[0]
        raise StructureError(
            "%s: axiom %r fails at witness %s" % (name, axiom, tuple(witness) if witness else ())
        )


def parse_workspace(text_or_doc) -> Workspace:
    """Parse and validate; ParseError for malformed input, StructureError for
    axiom violations (with object name and witness)."""
    if isinstance(text_or_doc, str):
        try:
            doc = json.loads(text_or_doc)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc) from None
    else:
        doc = text_or_doc
    _require(isinstance(doc, dict), "top level must be an object")
    field = _parse_field(doc.get("field", {}))
    ws = Workspace(field)

    for name, entry in sorted((doc.get("hopf") or {}).items()):
        _require(isinstance(entry, dict), "hopf %r must be an object" % name)
        dim = int(entry.get("dim", 0))
        _require(dim >= 0, "hopf %r: bad dim" % name)
        mult = _cube(field, dim, entry.get("mult"), "hopf %r mult" % name)
        comult = _cube(field, dim, entry.get("comult"), "hopf %r comult" % name)
        unit = _scalars(field, entry.get("unit", []), "hopf %r unit" % name)
        counit = _scalars(field, entry.get("counit", []), "hopf %r counit" % name)
        _require(len(unit) == dim and len(counit) == dim, "hopf %r: unit/counit length" % name)
        antipode = entry.get("antipode")
        if antipode is not None:
            antipode = _matrix(field, dim, dim, antipode, "hopf %r antipode" % name)
        try:
            h = make_hopf(field, dim, mult, unit, comult, counit, antipode)
        except NoAntipodeError as exc:
            raise StructureError("hopf %r: %s" % (name, exc)) from None
        _check(validate_hopf(h, name), "hopf %r" % name)
        ws.hopf[name] = h

    def _resolve_hopf(hname, what):
        if hname not in ws.hopf:
            raise ParseError("%s references unknown hopf %r" % (what, hname))
        return ws.hopf[hname]

    for name, entry in sorted((doc.get("comodules") or {}).items()):
        h = _resolve_hopf(entry.get("hopf"), "comodule %r" % name)
        dim = int(entry.get("dim", 0))
        coaction = _matrix(field, dim * h.dim, dim, entry.get("coaction"), "comodule %r coaction" % name)
        c = Comodule(h, dim, coaction)
        _check(validate_comodule(c, name), "comodule %r" % name)
        ws.comodules[name] = c
        ws.comodule_hopf[name] = entry["hopf"]

    for name, entry in sorted((doc.get("comodule_algebras") or {}).items()):
        h = _resolve_hopf(entry.get("hopf"), "comodule_algebra %r" % name)
        dim = int(entry.get("dim", 0))
        mult = _cube(field, dim, entry.get("mult"), "comodule_algebra %r mult" % name)
        unit = _scalars(field, entry.get("unit", []), "comodule_algebra %r unit" % name)
        coaction = _matrix(
            field, dim * h.dim, dim, entry.get("coaction"), "comodule_algebra %r coaction" % name
        )
        a = ComoduleAlgebra(Algebra(field, dim, mult, unit), Comodule(h, dim, coaction))
        _check(validate_comodule_algebra(a, name), "comodule_algebra %r" % name)
        ws.comodule_algebras[name] = a
        ws.algebra_hopf[name] = entry["hopf"]
        ws.coinvariant_algebras[name] = coinvariant_subalgebra(a)

    def _resolve_algebra(aname, what):
        if aname not in ws.comodule_algebras:
            raise ParseError("%s references unknown comodule_algebra %r" % (what, aname))
        return ws.comodule_algebras[aname]

    for name, entry in sorted((doc.get("rel_hopf_modules") or {}).items()):
        a = _resolve_algebra(entry.get("algebra"), "rel_hopf_module %r" % name)
        dim = int(entry.get("dim", 0))
        coaction = _matrix(
            field, dim * a.hopf.dim, dim, entry.get("coaction"), "rel_hopf_module %r coaction" % name
        )
        action = _matrix(field, dim, a.dim * dim, entry.get("action"), "rel_hopf_module %r action" % name)
        m = RelHopfModule(a, Comodule(a.hopf, dim, coaction), action)
        _check(validate_rel_hopf_module(m, name), "rel_hopf_module %r" % name)
        ws.rel_hopf_modules[name] = m
        ws.rel_algebra[name] = entry["algebra"]

    for name, entry in sorted((doc.get("b_modules") or {}).items()):
        aname = entry.get("algebra")
        _resolve_algebra(aname, "b_module %r" % name)
        b = ws.coinvariant_algebras[aname]
        dim = int(entry.get("dim", 0))
        action = _matrix(field, dim, b.dim * dim, entry.get("action"), "b_module %r action" % name)
        m = AlgebraModule(b.algebra, dim, action)
        _check(validate_module(m, name), "b_module %r" % name)
        ws.b_modules[name] = m
        ws.b_algebra[name] = aname

    return ws


def load_workspace(path: str) -> Workspace:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_workspace(fh.read())


# -- serialization ------------------------------------------------------------


def _fmt_flat(field, matrix: Matrix):
    return [field.fmt(x) for x in matrix.to_flat()]


def _fmt_vec(field, vec):
    return [field.fmt(x) for x in vec]


def _fmt_cube(field, cube):
    return [[[field.fmt(x) for x in row] for row in plane] for plane in cube]


def serialize_workspace(ws: Workspace) -> dict:
    field = ws.field
    doc = {"field": {"kind": "Q"} if field.characteristic == 0 else {"kind": "GF", "p": field.characteristic}}
    if ws.hopf:
        doc["hopf"] = {
            name: {
                "dim": h.dim,
                "mult": _fmt_cube(field, h.algebra.mult),
                "unit": _fmt_vec(field, h.algebra.unit),
                "comult": _fmt_cube(field, h.comult),
                "counit": _fmt_vec(field, h.counit),
                "antipode": _fmt_flat(field, h.antipode),
            }
            for name, h in ws.hopf.items()
        }
    if ws.comodules:
        doc["comodules"] = {
            name: {
                "hopf": ws.comodule_hopf[name],
                "dim": c.dim,
                "coaction": _fmt_flat(field, c.coaction),
            }
            for name, c in ws.comodules.items()
        }
    if ws.comodule_algebras:
        doc["comodule_algebras"] = {
            name: {
                "hopf": ws.algebra_hopf[name],
                "dim": a.dim,
                "mult": _fmt_cube(field, a.algebra.mult),
                "unit": _fmt_vec(field, a.algebra.unit),
                "coaction": _fmt_flat(field, a.comodule.coaction),
            }
            for name, a in ws.comodule_algebras.items()
        }
    if ws.rel_hopf_modules:
        doc["rel_hopf_modules"] = {
            name: {
                "algebra": ws.rel_algebra[name],
                "dim": m.dim,
                "coaction": _fmt_flat(field, m.comodule.coaction),
                "action": _fmt_flat(field, m.action),
            }
            for name, m in ws.rel_hopf_modules.items()
        }
    if ws.b_modules:
        doc["b_modules"] = {
            name: {
                "algebra": ws.b_algebra[name],
                "dim": m.dim,
                "action": _fmt_flat(field, m.action),
            }
            for name, m in ws.b_modules.items()
        }
    return doc


def workspace_json(ws: Workspace) -> str:
    return json.dumps(serialize_workspace(ws), sort_keys=True, indent=2) + "\n"
