"""Command-line interface and JSON workspace format.

A workspace file names the algebras a command refers to::

    {
      "field": "gf:5",
      "degree": 8,
      "algebras": {
        "B": {"type": "presented", "generators": ["x"], "relations": ["x^2"]},
        "A": {"type": "structure", "basis": ["e1", "e2"],
              "table": [[[1, 0], [0, 0]], [[0, 0], [0, 1]]], "unit": [1, 1]},
        "H": {"type": "hopf", "base": "A", "comult": [...], "counit": [...]},
        "G": {"type": "group", "table": [[0, 1], [1, 0]], "as": "algebra"}
      },
      "maps": {"alpha": [[1, 0]]},
      "bialgebras": {"Bh": {"algebra": "B", "delta": ["L.x*R.x"], "counit": [1],
                            "antipode": ["x"]}}
    }

Names not found in the workspace may use built-ins: ``kpower:N``,
``cyclic:N`` (group algebra of Z/N), ``functions:N`` (functions on Z/N),
``field`` and ``kdagger``.

Exit status: 0 success, 1 mathematical failure, 2 input error, 3 budget or
degree limit.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from . import charsearch, hopfstr, mapuniv
from .errors import BudgetExceeded, DegreeOutOfRange, FamalgError, ParseError
from .field import QQ, parse_field
from .fpalg import (
    RESERVED_PREFIXES,
    AlgMorphism,
    FpAlgebra,
    Presentation,
    base_algebra,
    derive_algebra,
    tensor_algebra,
)
from .fralg import (
    FrAlgebra,
    FrHopf,
    ModuleMap,
    algebraic_dual,
    cyclic_group,
    fr_to_presentation,
    function_algebra,
    group_algebra,
    k_power,
    tensor_fr,
)
from .ncgb import DEFAULT_DEGREE

EXIT_OK, EXIT_MATH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(FamalgError):
    """Malformed workspace, spec file, or command arguments."""


# -- workspace ----------------------------------------------------------------------------------

def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise InputError(f"duplicate key {k!r}")
        out[k] = v
    return out


@dataclass
class WorkspaceSpec:
    field: str = "qq"
    degree: int = DEFAULT_DEGREE
    algebras: dict = dc_field(default_factory=dict)
    maps: dict = dc_field(default_factory=dict)
    bialgebras: dict = dc_field(default_factory=dict)

    def to_json(self):
        return {
            "field": self.field,
            "degree": self.degree,
            "algebras": self.algebras,
            "maps": self.maps,
            "bialgebras": self.bialgebras,
        }


def parse_workspace(text):
    try:
        raw = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise InputError(f"JSON error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise InputError("workspace must be a JSON object")
    unknown = set(raw) - {"field", "degree", "algebras", "maps", "bialgebras"}
    if unknown:
        raise InputError(f"unknown workspace keys: {sorted(unknown)}")
    ws = WorkspaceSpec(
        field=parse_field(str(raw.get("field", "qq"))).descriptor(),
        degree=int(raw.get("degree", DEFAULT_DEGREE)),
        algebras=dict(raw.get("algebras", {})),
        maps=dict(raw.get("maps", {})),
        bialgebras=dict(raw.get("bialgebras", {})),
    )
    Workspace(ws).validate()
    return ws


def load_spec(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_workspace(text)


def dumps(value):
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_result(value, path=None):
    if hasattr(value, "to_json"):
        value = value.to_json()
    text = dumps(value)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


class Workspace:
    """Resolves names in a WorkspaceSpec to algebra objects (memoized)."""

    def __init__(self, spec, field=None, degree=None):
        self.spec = spec
        self.field = field or parse_field(spec.field)
        self.degree = degree or spec.degree
        self._cache = {}

    def validate(self):
        for name in self.spec.algebras:
            try:
                self.get(name)
            except FamalgError as exc:
                raise InputError(f"algebra {name!r}: {exc}") from exc
        for name in self.spec.bialgebras:
            try:
                self.bialgebra(name)
            except FamalgError as exc:
                raise InputError(f"bialgebra {name!r}: {exc}") from exc

    def get(self, name):
        if name in self._cache:
            return self._cache[name]
        if name in self.spec.algebras:
            obj = self._build(name, self.spec.algebras[name])
        else:
            obj = self._builtin(name)
        self._cache[name] = obj
        return obj

    def _builtin(self, name):
        F = self.field
        kind, _, arg = name.partition(":")
        try:
            if kind == "kpower":
                return k_power(int(arg), F)
            if kind == "cyclic":
                return group_algebra(cyclic_group(int(arg)), F)
            if kind == "functions":
                return function_algebra(cyclic_group(int(arg)), F)
        except ValueError as exc:
            raise InputError(f"bad built-in {name!r}") from exc
        if name == "field":
            return base_algebra(F, self.degree)
        if name == "kdagger":
            return mapuniv.k_dagger(F, self.degree)[0]
        raise InputError(f"unknown algebra {name!r}")

    def _build(self, name, d):
        F = self.field
        t = d.get("type")
        if t == "presented":
            gens = list(d.get("generators", []))
            for g in gens:
                if g.startswith(RESERVED_PREFIXES):
                    raise InputError(f"generator {g!r} in {name!r} uses a reserved prefix")
            try:
                pres = Presentation(gens, list(d.get("relations", [])), bool(d.get("commutative", False)), F)
            except FamalgError as exc:
                raise InputError(f"algebra {name!r}: {exc}") from exc
            return FpAlgebra(pres, self.degree)
        if t == "structure":
            return FrAlgebra(d["basis"], d["table"], d["unit"], F)
        if t == "hopf":
            base = d["base"]
            base = self.fr(base) if isinstance(base, str) else self._build(name, base)
            return FrHopf(base, d["comult"], d["counit"], d.get("antipode"))
        if t == "group":
            table = d["table"]
            return function_algebra(table, F) if d.get("as") == "functions" else group_algebra(table, F)
        raise InputError(f"algebra {name!r} has unknown type {t!r}")

    def fr(self, name):
        obj = self.get(name)
        if isinstance(obj, FrHopf):
            return obj.base
        if isinstance(obj, FrAlgebra):
            return obj
        raise InputError(f"{name!r} is not a finite-rank algebra")

    def fp(self, name):
        obj = self.get(name)
        if isinstance(obj, FpAlgebra):
            return obj
        return fr_to_presentation(self.fr(name), self.degree)

    def hopf(self, name):
        obj = self.get(name)
        if not isinstance(obj, FrHopf):
            raise InputError(f"{name!r} is not a finite-rank Hopf algebra")
        return obj

    def module_map(self, name):
        if name not in self.spec.maps:
            raise InputError(f"unknown module map {name!r}")
        return ModuleMap.from_rows(self.spec.maps[name])

    def bialgebra(self, name):
        """(algebra, dict of delta/counit/antipode images) for a named bialgebra."""
        if name not in self.spec.bialgebras:
            raise InputError(f"unknown bialgebra {name!r}")
        d = self.spec.bialgebras[name]
        C = self.fp(d["algebra"])
        return C, {"delta": list(d["delta"]), "counit": list(d["counit"]), "antipode": d.get("antipode")}


# -- constraint and subalgebra files ---------------------------------------------------------------

def load_json_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.loads(fh.read(), object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: JSON error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def parse_constraint(d):
    kind = d.get("kind")
    if kind == "fixed_points":
        return mapuniv.FixedPoints(tuple(d["beta"]), ModuleMap.from_rows(d["alpha"]))
    if kind == "cofixed":
        return mapuniv.Cofixed(ModuleMap.from_rows(d["beta"]), ModuleMap.from_rows(d["alpha"]))
    if kind == "multiplicative":
        return mapuniv.Multiplicative(tuple(d["delta"]), tuple(d["gamma"]))
    if kind == "equivariant":
        return mapuniv.Equivariant(int(d["rank"]), tuple(d["lambda"]), tuple(d["theta"]))
    raise InputError(f"unknown constraint kind {kind!r}")


def parse_sub(d):
    vecs = d.get("vectors") if isinstance(d, dict) else d
    if not isinstance(vecs, list):
        raise InputError("subalgebra file must list coordinate vectors")
    return vecs


# -- commands ---------------------------------------------------------------------------------------

def _family_report(U):
    out = U.to_json()
    out["check"] = U.check().to_json()
    return out


def cmd_construct_map(ws, a):
    U = mapuniv.construct_map_algebra(ws.fp(a.B), ws.fr(a.A), a.commutative, ws.degree)
    return _family_report(U), EXIT_OK


def cmd_construct_iso(ws, a):
    U = mapuniv.construct_iso_algebra(ws.fr(a.B), ws.fr(a.A), a.commutative, ws.degree)
    return _family_report(U), EXIT_OK


def cmd_constrain(ws, a):
    if not a.spec:
        raise InputError("constrain needs --spec FILE")
    spec = parse_constraint(load_json_file(a.spec))
    B = ws.get(a.B)
    B = B if isinstance(B, (FpAlgebra, FrAlgebra)) else ws.fr(a.B)
    U = mapuniv.construct_constrained(B, ws.fr(a.A), spec, a.commutative, a.spanning_bound, ws.degree)
    return _family_report(U), EXIT_OK


def cmd_pontryagin(ws, a):
    U = mapuniv.pontryagin_dual(ws.hopf(a.H), a.commutative, a.spanning_bound, ws.degree)
    return _family_report(U), EXIT_OK


def cmd_galois(ws, a):
    if not a.sub:
        raise InputError("galois needs --sub FILE")
    U = mapuniv.galois_algebra(ws.fr(a.A), parse_sub(load_json_file(a.sub)), ws.degree)
    return _family_report(U), EXIT_OK


def _bialgebra_result(data):
    v = hopfstr.verify_axioms(data)
    total, failing = hopfstr.summarize(v)
    out = data.to_json() if hasattr(data, "to_json") else {}
    out["verdicts"] = hopfstr.verdicts_to_json(v)
    out["ok"] = total.zero
    if failing:
        out["failing"] = {"axiom": failing[0], "generator": failing[1], "residue": failing[2]}
    return out, EXIT_OK if total.zero else EXIT_MATH


def cmd_induce_hopf(ws, a):
    C, d = ws.bialgebra(a.BH)
    U = mapuniv.construct_map_algebra(C, ws.fr(a.A), a.commutative, ws.degree)
    data = hopfstr.induce_bialgebra(U, d["delta"], d["counit"], d["antipode"])
    return _bialgebra_result(data)


def cmd_verify(ws, a):
    C, d = ws.bialgebra(a.BH)
    data = hopfstr.make_bialgebra(C, d["delta"], d["counit"], d["antipode"])
    return _bialgebra_result(data)


def cmd_composition(ws, a):
    A = ws.fr(a.A)
    U = mapuniv.construct_map_algebra(A, A, a.commutative, ws.degree)
    return _bialgebra_result(hopfstr.composition_bialgebra(U))


def cmd_iso_hopf(ws, a):
    A = ws.fr(a.A)
    U = mapuniv.construct_iso_algebra(A, A, True, ws.degree)
    return _bialgebra_result(hopfstr.iso_hopf(U))


def cmd_gauge(ws, a):
    C, d = ws.bialgebra(a.BH)
    V = ws.fp(a.V)
    U = mapuniv.construct_map_algebra(C, ws.fr(a.A), a.commutative, ws.degree)
    cd = hopfstr.gauge_coaction(U, d, V, list(a.rho))
    v = hopfstr.verify_axioms(cd)
    total, failing = hopfstr.summarize(v)
    out = {
        "coaction": {n: str(cd.coaction.target.normal_form(im)) for n, im in zip(cd.comodule.names, cd.coaction.images)},
        "verdicts": hopfstr.verdicts_to_json(v),
        "ok": total.zero,
    }
    if failing:
        out["failing"] = {"axiom": failing[0], "generator": failing[1], "residue": failing[2]}
    return out, EXIT_OK if total.zero else EXIT_MATH


def cmd_characters(ws, a):
    C = ws.fp(a.C)
    chars = charsearch.enumerate_characters(C, a.budget)
    return [{n: int(v) for n, v in c.items()} for c in chars], EXIT_OK


def cmd_morphisms(ws, a):
    B = ws.fp(a.B)
    A = ws.fr(a.A)
    ms = charsearch.enumerate_morphisms(B, A, a.budget)
    return [{s: [int(x) for x in v] for s, v in zip(B.names, m)} for m in ms], EXIT_OK


def cmd_correspond(ws, a):
    kind = a.kind
    args = a.names
    if kind in ("map", "iso"):
        if len(args) != 2:
            raise InputError(f"correspond {kind} needs B and A")
        B = ws.fp(args[0]) if kind == "map" else ws.fr(args[0])
        rep = charsearch.correspondence_report(kind, B, ws.fr(args[1]), budget=a.budget)
    elif kind == "galois":
        if len(args) != 1 or not a.sub:
            raise InputError("correspond galois needs A and --sub FILE")
        rep = charsearch.correspondence_report(kind, ws.fr(args[0]), parse_sub(load_json_file(a.sub)),
                                               budget=a.budget)
    elif kind == "pontryagin":
        if len(args) != 1:
            raise InputError("correspond pontryagin needs H")
        rep = charsearch.correspondence_report(kind, ws.hopf(args[0]), budget=a.budget)
    else:
        raise InputError(f"unknown correspondence kind {kind!r}")
    return rep.to_json(), EXIT_OK if rep.matched else EXIT_MATH


def _iso_result(f, g, v):
    out = {
        "forward": f.to_json(),
        "backward": g.to_json(),
        "verdict": v.to_json(),
    }
    return out, EXIT_OK if v.zero else EXIT_MATH


def cmd_explaw(ws, a):
    return _iso_result(*mapuniv.exp_law_iso(ws.fp(a.B), ws.fr(a.A1), ws.fr(a.A2), ws.degree))


def cmd_tensor_preserve(ws, a):
    return _iso_result(*mapuniv.tensor_preserve_iso(ws.fp(a.B1), ws.fp(a.B2), ws.fr(a.A), ws.degree))


def cmd_opposite(ws, a):
    return _iso_result(*mapuniv.opposite_iso(ws.fp(a.B), ws.fr(a.A), ws.degree))


def cmd_mediate(ws, a):
    B = ws.fp(a.B)
    A = ws.fr(a.A)
    morphs = load_json_file(a.morphisms)
    if not isinstance(morphs, list) or not morphs:
        raise InputError("morphism file must be a nonempty list of generator -> vector maps")
    psi = mapuniv.trivial_family(B, A, morphs, ws.degree)
    U = mapuniv.construct_map_algebra(B, A, a.commutative, ws.degree)
    m = mapuniv.mediate(U, psi)
    ident = mapuniv.mediation_identity(U, psi, m)
    out = {"morphism": m.to_json(), "identity": ident.to_json()}
    return out, EXIT_OK if m.check().zero and ident.zero else EXIT_MATH


def cmd_derive(ws, a):
    C = ws.fp(a.C)
    if a.kind == "tensor":
        if not a.other:
            raise InputError("tensor needs --other")
        D = tensor_algebra(C, ws.fp(a.other))
    elif a.kind == "free_product":
        if not a.other:
            raise InputError("free_product needs --other")
        D = derive_algebra(C, "free_product", ws.fp(a.other))
    else:
        D = derive_algebra(C, a.kind)
    return D.presentation.to_json(), EXIT_OK


def cmd_dual(ws, a):
    return algebraic_dual(ws.hopf(a.H)).to_json(), EXIT_OK


def cmd_tensor_fr(ws, a):
    return tensor_fr(ws.fr(a.A1), ws.fr(a.A2)).to_json(), EXIT_OK


def cmd_present(ws, a):
    obj = ws.get(a.A)
    if isinstance(obj, FpAlgebra):
        return obj.presentation.to_json(), EXIT_OK
    return fr_to_presentation(ws.fr(a.A), ws.degree).presentation.to_json(), EXIT_OK


def cmd_normal_form(ws, a):
    C = ws.fp(a.C)
    try:
        f = C.parse(a.poly)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    v = C.verdict(f)
    return {"normal_form": str(C.normal_form(f)), "verdict": v.to_json()}, EXIT_OK


def cmd_check_morphism(ws, a):
    S = ws.fp(a.source)
    T = ws.fp(a.target)
    if len(a.images) != len(S.names):
        raise InputError(f"{len(S.names)} images required")
    m = AlgMorphism(S, T, list(a.images))
    v = m.check()
    return m.to_json(), EXIT_OK if v.zero else EXIT_MATH


# -- registry ---------------------------------------------------------------------------------------

# library operation -> callable; each must be served by at least one subcommand
OPERATIONS = {
    "makeAlgebra": Presentation,
    "normalFormInAlgebra": FpAlgebra.normal_form,
    "tensorAlgebra": tensor_algebra,
    "deriveAlgebra": derive_algebra,
    "checkMorphism": AlgMorphism.check,
    "makeFr": FrAlgebra,
    "frBuilders": k_power,
    "tensorFr": tensor_fr,
    "algebraicDual": algebraic_dual,
    "frToPresentation": fr_to_presentation,
    "constructMapAlgebra": mapuniv.construct_map_algebra,
    "mediate": mapuniv.mediate,
    "constructIsoAlgebra": mapuniv.construct_iso_algebra,
    "constructConstrained": mapuniv.construct_constrained,
    "pontryaginDual": mapuniv.pontryagin_dual,
    "galoisAlgebra": mapuniv.galois_algebra,
    "expLawIso": mapuniv.exp_law_iso,
    "tensorPreserveIso": mapuniv.tensor_preserve_iso,
    "oppositeIso": mapuniv.opposite_iso,
    "induceBialgebra": hopfstr.induce_bialgebra,
    "compositionBialgebra": hopfstr.composition_bialgebra,
    "isoHopf": hopfstr.iso_hopf,
    "gaugeCoaction": hopfstr.gauge_coaction,
    "verifyAxioms": hopfstr.verify_axioms,
    "enumerateCharacters": charsearch.enumerate_characters,
    "enumerateMorphisms": charsearch.enumerate_morphisms,
    "correspondenceReport": charsearch.correspondence_report,
}

# subcommand -> (handler, operations it exposes)
COMMANDS = {
    "construct-map": (cmd_construct_map, ["constructMapAlgebra"]),
    "construct-iso": (cmd_construct_iso, ["constructIsoAlgebra", "frToPresentation"]),
    "constrain": (cmd_constrain, ["constructConstrained"]),
    "pontryagin": (cmd_pontryagin, ["pontryaginDual"]),
    "galois": (cmd_galois, ["galoisAlgebra"]),
    "induce-hopf": (cmd_induce_hopf, ["induceBialgebra", "verifyAxioms"]),
    "verify": (cmd_verify, ["verifyAxioms"]),
    "composition": (cmd_composition, ["compositionBialgebra"]),
    "iso-hopf": (cmd_iso_hopf, ["isoHopf"]),
    "gauge": (cmd_gauge, ["gaugeCoaction"]),
    "characters": (cmd_characters, ["enumerateCharacters"]),
    "morphisms": (cmd_morphisms, ["enumerateMorphisms"]),
    "correspond": (cmd_correspond, ["correspondenceReport"]),
    "explaw": (cmd_explaw, ["expLawIso"]),
    "tensor-preserve": (cmd_tensor_preserve, ["tensorPreserveIso"]),
    "opposite": (cmd_opposite, ["oppositeIso"]),
    "mediate": (cmd_mediate, ["mediate"]),
    "derive": (cmd_derive, ["tensorAlgebra", "deriveAlgebra"]),
    "dual": (cmd_dual, ["algebraicDual", "frBuilders"]),
    "tensor-fr": (cmd_tensor_fr, ["tensorFr", "makeFr"]),
    "present": (cmd_present, ["frToPresentation", "makeAlgebra"]),
    "normal-form": (cmd_normal_form, ["normalFormInAlgebra"]),
    "check-morphism": (cmd_check_morphism, ["checkMorphism"]),
}


def build_parser():
    p = argparse.ArgumentParser(prog="famalg", description="Universal algebras of maps and their Hopf structures.")
    p.add_argument("--workspace", "-w", help="workspace JSON file defining named algebras")
    p.add_argument("--field", help="field descriptor (qq or gf:P); overrides the workspace")
    p.add_argument("--degree", type=int, help="Groebner truncation degree")
    p.add_argument("--output", "-o", help="write JSON here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text, *positional, commutative=False):
        sp = sub.add_parser(name, help=help_text)
        for arg in positional:
            sp.add_argument(arg)
        if commutative:
            sp.add_argument("--commutative", action="store_true", help="commutative parameter algebra")
        return sp

    add("construct-map", "universal algebra of maps M(B,A)", "B", "A", commutative=True)
    add("construct-iso", "universal algebra of isomorphisms I(B,A)", "B", "A", commutative=True)
    sp = add("constrain", "constrained universal algebra", "B", "A", commutative=True)
    sp.add_argument("--spec", help="constraint JSON file")
    sp.add_argument("--spanning-bound", type=int, default=mapuniv.DEFAULT_SPANNING_BOUND)
    sp = sub.add_parser("pontryagin", help="Pontryagin dual of a commutative Hopf algebra")
    sp.add_argument("H")
    sp.add_argument("--commutative", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--spanning-bound", type=int, default=mapuniv.DEFAULT_SPANNING_BOUND)
    sp = add("galois", "Galois algebra of A over a subalgebra", "A")
    sp.add_argument("--sub", help="JSON file with subalgebra coordinate vectors")
    add("induce-hopf", "bialgebra induced on M(B,A)", "BH", "A", commutative=True)
    add("verify", "verify bialgebra/Hopf axioms of workspace data", "BH")
    add("composition", "composition bialgebra on M(A,A)", "A", commutative=True)
    add("iso-hopf", "Hopf algebra on I^c(A,A)", "A")
    sp = add("gauge", "gauge coaction on M(V,A)", "BH", "V", "A", commutative=True)
    sp.add_argument("--rho", nargs="+", required=True, help="coaction images over B (x) V")
    for name, args in (("characters", ["C"]), ("morphisms", ["B", "A"])):
        sp = add(name, f"enumerate {name} over GF(p)", *args)
        sp.add_argument("--budget", type=int, default=charsearch.DEFAULT_BUDGET)
    sp = sub.add_parser("correspond", help="character/morphism correspondence report")
    sp.add_argument("kind", choices=["map", "iso", "galois", "pontryagin"])
    sp.add_argument("names", nargs="+")
    sp.add_argument("--sub")
    sp.add_argument("--budget", type=int, default=charsearch.DEFAULT_BUDGET)
    add("explaw", "M(B, A1 (x) A2) vs M(M(B,A1),A2)", "B", "A1", "A2")
    add("tensor-preserve", "M^c(B1 (x) B2, A) vs tensor of the factors", "B1", "B2", "A")
    add("opposite", "M(B^op, A) vs M(B,A)^op", "B", "A")
    sp = add("mediate", "mediating morphism of a trivial family", "B", "A", commutative=True)
    sp.add_argument("--morphisms", required=True, help="JSON list of generator -> vector maps")
    sp = add("derive", "derived algebra", "C")
    sp.add_argument("kind", choices=["opposite", "abelianized", "tensor", "free_product"])
    sp.add_argument("--other")
    add("dual", "algebraic dual of a finite-rank Hopf algebra", "H")
    add("tensor-fr", "tensor product of finite-rank algebras", "A1", "A2")
    add("present", "presentation of an algebra", "A")
    add("normal-form", "normal form of a polynomial", "C", "poly")
    sp = add("check-morphism", "check a morphism given by generator images", "source", "target")
    sp.add_argument("images", nargs="+")
    return p


def run_command(argv=None, out=None):
    """Parse ``argv``, run, print JSON; return the exit status."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        field = parse_field(args.field) if args.field else None
        if args.workspace:
            spec = load_spec(args.workspace)
        else:
            spec = WorkspaceSpec(field=(field or QQ).descriptor())
        ws = Workspace(spec, field, args.degree)
        handler = COMMANDS[args.command][0]
        result, status = handler(ws, args)
    except (BudgetExceeded, DegreeOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FamalgError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    if status == EXIT_MATH and isinstance(result, dict) and "failing" in result:
        print(f"failed: {result['failing']['axiom']} on {result['failing']['generator']}", file=sys.stderr)
    return status


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
