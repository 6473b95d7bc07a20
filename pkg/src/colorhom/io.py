"""Document format and report assembly.

Bundles travel as versioned JSON documents: scalars are exact strings
("p" or "p/q", lists of those for cyclotomic fields), operations are
sparse tables of basis-index tuples, maps are dense matrices whose column
j is the image of basis vector j.  Parsing validates everything (field,
group, bicharacter, evenness) and reports the failing path; a parsed
bundle is fully trustworthy in memory.

Reports are JSON too, embedding the tool version and the sha256 digest of
the canonical re-serialization of the input, so a report is stable under
whitespace-only changes to its input and under any checker job count.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dataclass_field

from . import __version__
from .bundles import (
    AkivisBundle,
    DialgebraBundle,
    LeibnizBundle,
    ModuleBundle,
    NHLPBundle,
    NonAssocBundle,
    is_multiplicative,
    is_sign_commutative,
)
from .checkers import (
    check_akivis_identity,
    check_color_leibniz,
    check_dialgebra,
    check_endomorphism,
    check_evenness,
    check_flexible_alternative,
    check_flexible_akivis_relation,
    check_hom_associativity,
    check_hom_lie,
    check_leibniz_consequences,
    check_module,
    check_nhlp,
    check_skew_symmetry,
)
from .errors import InputError
from .grading import Bicharacter, GradingGroup, validate_bicharacter
from .linalg import EvenMap, GradedSpace, MultilinearMap, Vector
from .report import CheckReport, Violation, sorted_violations
from .scalars import Scalar, cyclotomic_field, scalar_from_text, scalar_to_text

BUNDLE_SCHEMA = "colorhom-bundle/1"
REPORT_SCHEMA = "colorhom-report/1"

_OPS_BY_KIND = {
    "nonassociative": (("product", 2),),
    "akivis": (("bracket", 2), ("ternary", 3)),
    "leibniz": (("bracket", 2),),
    "nhlp": (("product", 2), ("bracket", 2)),
    "dialgebra": (("left", 2), ("right", 2)),
}

KINDS = tuple(_OPS_BY_KIND) + ("module",)


@dataclass
class ParsedDocument:
    """A parsed bundle plus any extra named maps riding along (candidate
    twisting maps such as 'beta')."""

    bundle: object
    extra_maps: dict = dataclass_field(default_factory=dict)


def _fail(path, message):
    raise InputError(f"{path}: {message}")


def _get(doc, key, path, types, required=True, default=None):
    if key not in doc:
        if required:
            _fail(path, f"missing key {key!r}")
        return default
    value = doc[key]
    if not isinstance(value, types):
        _fail(f"{path}.{key}", f"expected {types}, got {type(value).__name__}")
    return value


def _parse_scalar(field, data, path):
    try:
        return scalar_from_text(field, data)
    except InputError as e:
        _fail(path, str(e))


def _parse_space(doc, path):
    fdoc = _get(doc, "field", path, dict)
    order = _get(fdoc, "cyclotomic_order", f"{path}.field", int)
    if order < 1:
        _fail(f"{path}.field.cyclotomic_order", "must be >= 1")
    field = cyclotomic_field(order)

    gdoc = _get(doc, "grading", path, dict)
    free_rank = _get(gdoc, "free_rank", f"{path}.grading", int)
    torsion = _get(gdoc, "torsion", f"{path}.grading", list)
    try:
        group = GradingGroup(free_rank, tuple(torsion))
    except InputError as e:
        _fail(f"{path}.grading", str(e))

    bmat = _get(doc, "bicharacter", path, list)
    if len(bmat) != group.rank or any(
        not isinstance(r, list) or len(r) != group.rank for r in bmat
    ):
        _fail(f"{path}.bicharacter", f"must be a {group.rank}x{group.rank} matrix")
    matrix = tuple(
        tuple(
            _parse_scalar(field, e, f"{path}.bicharacter[{i}][{j}]")
            for j, e in enumerate(row)
        )
        for i, row in enumerate(bmat)
    )
    rep = validate_bicharacter(matrix, group, field)
    if not rep.passed:
        _fail(f"{path}.bicharacter", rep.violations[0].describe())
    bichar = Bicharacter(group, field, matrix)

    basis_doc = _get(doc, "basis", path, list)
    names_degrees = []
    for k, item in enumerate(basis_doc):
        if not isinstance(item, dict):
            _fail(f"{path}.basis[{k}]", "expected an object")
        name = _get(item, "name", f"{path}.basis[{k}]", str)
        deg = _get(item, "degree", f"{path}.basis[{k}]", list)
        if len(deg) != group.rank or not all(isinstance(c, int) for c in deg):
            _fail(f"{path}.basis[{k}].degree",
                  f"expected {group.rank} integer coordinates")
        names_degrees.append((name, tuple(deg)))
    try:
        space = GradedSpace.build(field, group, names_degrees)
    except InputError as e:
        _fail(f"{path}.basis", str(e))
    return space, bichar


def _parse_vector(space, data, path):
    if not isinstance(data, dict):
        _fail(path, "expected an index -> scalar object")
    coeffs = {}
    for key, text in data.items():
        try:
            i = int(key)
        except ValueError:
            _fail(path, f"non-integer basis index {key!r}")
        if not (0 <= i < space.dim):
            _fail(path, f"basis index {i} out of range 0..{space.dim - 1}")
        coeffs[i] = _parse_scalar(space.field, text, f"{path}.{key}")
    return Vector(space, coeffs)


def _parse_table(spaces, codomain, entries, path):
    if not isinstance(entries, list):
        _fail(path, "expected a list of entries")
    table = {}
    for k, entry in enumerate(entries):
        here = f"{path}[{k}]"
        if not isinstance(entry, dict):
            _fail(here, "expected an object with args/out")
        args = _get(entry, "args", here, list)
        if len(args) != len(spaces) or not all(isinstance(a, int) for a in args):
            _fail(f"{here}.args", f"expected {len(spaces)} integer indices")
        for a, sp in zip(args, spaces):
            if not (0 <= a < sp.dim):
                _fail(f"{here}.args", f"index {a} out of range 0..{sp.dim - 1}")
        key = tuple(args)
        if key in table:
            _fail(f"{here}.args", f"duplicate entry for {key}")
        out = _get(entry, "out", here, dict)
        table[key] = _parse_vector(codomain, out, f"{here}.out")
    return MultilinearMap(spaces, codomain, table)


def _parse_matrix(space, rows, path):
    if (
        not isinstance(rows, list)
        or len(rows) != space.dim
        or any(not isinstance(r, list) or len(r) != space.dim for r in rows)
    ):
        _fail(path, f"expected a {space.dim}x{space.dim} matrix")
    parsed = tuple(
        tuple(
            _parse_scalar(space.field, e, f"{path}[{i}][{j}]")
            for j, e in enumerate(row)
        )
        for i, row in enumerate(rows)
    )
    m = EvenMap(space, parsed)
    rep = check_evenness(m)
    if not rep.passed:
        _fail(path, rep.violations[0].describe())
    return m


def parse_document(doc) -> ParsedDocument:
    """Validate a bundle document and build the in-memory bundle.  Raises
    InputError naming the offending path on the first problem found."""
    if not isinstance(doc, dict):
        raise InputError("document: expected a JSON object")
    schema = _get(doc, "schema", "document", str)
    if schema != BUNDLE_SCHEMA:
        _fail("document.schema", f"expected {BUNDLE_SCHEMA!r}, got {schema!r}")
    kind = _get(doc, "kind", "document", str)
    if kind not in KINDS:
        _fail("document.kind", f"unknown kind {kind!r} (expected one of {KINDS})")
    if kind == "module":
        return _parse_module(doc)

    space, bichar = _parse_space(doc, "document")
    ops_doc = _get(doc, "ops", "document", dict)
    ops = {}
    for name, arity in _OPS_BY_KIND[kind]:
        entries = _get(ops_doc, name, "document.ops", list)
        ops[name] = _parse_table((space,) * arity, space, entries, f"document.ops.{name}")
    for name in ops_doc:
        if name not in ops:
            _fail(f"document.ops.{name}", f"unexpected operation for kind {kind!r}")
    maps_doc = _get(doc, "maps", "document", dict)
    twist = _parse_matrix(space, _get(maps_doc, "alpha", "document.maps", list),
                          "document.maps.alpha")
    extras = {}
    for name, rows in maps_doc.items():
        if name == "alpha":
            continue
        extras[name] = _parse_matrix(space, rows, f"document.maps.{name}")

    try:
        if kind == "nonassociative":
            bundle = NonAssocBundle(space, bichar, ops["product"], twist)
        elif kind == "akivis":
            bundle = AkivisBundle(space, bichar, ops["bracket"], ops["ternary"], twist)
        elif kind == "leibniz":
            bundle = LeibnizBundle(space, bichar, ops["bracket"], twist)
        elif kind == "nhlp":
            bundle = NHLPBundle(space, bichar, ops["product"], ops["bracket"], twist)
        else:
            bundle = DialgebraBundle(space, bichar, ops["left"], ops["right"], twist)
    except InputError as e:
        _fail("document", str(e))
    return ParsedDocument(bundle, extras)


def _parse_module(doc) -> ParsedDocument:
    adoc = _get(doc, "algebra", "document", dict)
    inner = parse_document(adoc)
    if inner.bundle.kind != "leibniz":
        _fail("document.algebra.kind", "module documents embed a leibniz algebra")
    alg = inner.bundle
    msp_doc = {
        "field": adoc["field"],
        "grading": adoc["grading"],
        "bicharacter": adoc["bicharacter"],
        "basis": _get(doc, "basis", "document", list),
    }
    mspace, _ = _parse_space(msp_doc, "document")
    ops_doc = _get(doc, "ops", "document", dict)
    act_left = _parse_table(
        (alg.space, mspace), mspace,
        _get(ops_doc, "action_left", "document.ops", list), "document.ops.action_left"
    )
    act_right = _parse_table(
        (mspace, alg.space), mspace,
        _get(ops_doc, "action_right", "document.ops", list), "document.ops.action_right"
    )
    for name in ops_doc:
        if name not in ("action_left", "action_right"):
            _fail(f"document.ops.{name}", "unexpected operation for kind 'module'")
    maps_doc = _get(doc, "maps", "document", dict)
    tM = _parse_matrix(mspace, _get(maps_doc, "alphaM", "document.maps", list),
                       "document.maps.alphaM")
    for name in maps_doc:
        if name != "alphaM":
            _fail(f"document.maps.{name}", "module documents carry only 'alphaM'")
    try:
        bundle = ModuleBundle(alg, mspace, act_left, act_right, tM)
    except InputError as e:
        _fail("document", str(e))
    return ParsedDocument(bundle, {})


def _vector_doc(v: Vector):
    return {str(i): scalar_to_text(c) for i, c in v.items()}


def _table_doc(m: MultilinearMap):
    return [
        {"args": list(key), "out": _vector_doc(value)} for key, value in m.entries()
    ]


def _matrix_doc(m: EvenMap):
    return [[scalar_to_text(c) for c in row] for row in m.rows]


def _space_doc(space, bichar):
    return {
        "field": {"cyclotomic_order": space.field.cyclotomic_order},
        "grading": {
            "free_rank": space.group.free_rank,
            "torsion": list(space.group.torsion_orders),
        },
        "bicharacter": [[scalar_to_text(e) for e in row] for row in bichar.matrix],
        "basis": [
            {"name": name, "degree": list(deg.coords)} for name, deg in space.basis
        ],
    }


def serialize_bundle(bundle, extra_maps=None, report=None) -> dict:
    """Inverse of parse_document (up to key order)."""
    if bundle.kind == "module":
        doc = {
            "schema": BUNDLE_SCHEMA,
            "kind": "module",
            "algebra": serialize_bundle(bundle.algebra),
            "basis": _space_doc(bundle.module_space, bundle.algebra.bichar)["basis"],
            "ops": {
                "action_left": _table_doc(bundle.act_left),
                "action_right": _table_doc(bundle.act_right),
            },
            "maps": {"alphaM": _matrix_doc(bundle.module_twist)},
        }
    else:
        doc = {"schema": BUNDLE_SCHEMA, "kind": bundle.kind}
        doc.update(_space_doc(bundle.space, bundle.bichar))
        names = _OPS_BY_KIND[bundle.kind]
        attrs = {
            "product": "product",
            "bracket": "bracket",
            "ternary": "ternary",
            "left": "prod_left",
            "right": "prod_right",
        }
        doc["ops"] = {
            name: _table_doc(getattr(bundle, attrs[name])) for name, _ in names
        }
        doc["maps"] = {"alpha": _matrix_doc(bundle.twist)}
        for name, m in (extra_maps or {}).items():
            if name in ("alpha",):
                raise InputError("extra map may not be named 'alpha'")
            doc["maps"][name] = _matrix_doc(m)
    if report is not None:
        doc["report"] = report
    return doc


def canonical_bytes(doc) -> bytes:
    """Canonical JSON encoding: sorted keys, no whitespace.  The 'report'
    key is excluded so embedding a report does not change a document's
    identity."""
    doc = {k: v for k, v in doc.items() if k != "report"}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()


def document_digest(doc) -> str:
    return "sha256:" + hashlib.sha256(canonical_bytes(doc)).hexdigest()


def dumps_document(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def loads_document(text) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"document is not valid JSON: {e}") from None
    return doc


# ---------------------------------------------------------------------------
# full per-kind check suites and report documents


def _evenness_report(bundle) -> CheckReport:
    if bundle.kind == "module":
        parts = [
            ("act_left", bundle.act_left),
            ("act_right", bundle.act_right),
            ("module_twist", bundle.module_twist),
            ("algebra.bracket", bundle.algebra.bracket),
            ("algebra.twist", bundle.algebra.twist),
        ]
    else:
        parts = []
        for op in bundle.ops():
            label = "op"
            for cand in ("product", "bracket", "ternary", "prod_left", "prod_right"):
                if getattr(bundle, cand, None) is op:
                    label = cand
                    break
            parts.append((label, op))
        parts.append(("twist", bundle.twist))
    violations = []
    for label, obj in parts:
        rep = check_evenness(obj)
        for v in rep.violations:
            violations.append(Violation(v.args, v.defect, f"{label}: {v.note}"))
    return CheckReport("evenness", sorted_violations(violations))


def _bichar_report(bundle) -> CheckReport:
    b = bundle.algebra.bichar if bundle.kind == "module" else bundle.bichar
    return validate_bicharacter(b.matrix, b.group, b.field)


def full_check(bundle, jobs=1):
    """Run every checker applicable to the bundle kind.

    Returns (results, flags) where results is an ordered list of
    (CheckReport, advisory) pairs.  Advisory reports classify structure
    (flexibility, skewness of a Leibniz bracket, ...) and never count
    against certification; non-advisory reports are the laws the kind
    claims, plus well-formedness."""
    results = [(_evenness_report(bundle), False), (_bichar_report(bundle), False)]
    flags = {}
    kind = bundle.kind
    if kind == "nonassociative":
        classify = check_flexible_alternative(bundle, jobs=jobs)
        assoc = check_hom_associativity(bundle.product, bundle.twist, jobs)
        results += [(classify, True), (assoc, True)]
        flags = {
            "multiplicative": is_multiplicative(bundle),
            "hom_associative": assoc.passed,
            "commutative": is_sign_commutative(bundle.product, bundle.bichar),
            "flexible": classify.flags["flexible"],
            "alternative": classify.flags["alternative"],
        }
    elif kind == "akivis":
        skew = check_skew_symmetry(bundle, jobs)
        akivis = check_akivis_identity(bundle, jobs)
        results += [(skew, False), (akivis, False)]
        classify = check_flexible_alternative(bundle, jobs=jobs)
        jacobi = check_hom_lie(bundle, jobs)
        results += [(classify, True), (jacobi, True)]
        flags = {
            "multiplicative": is_multiplicative(bundle),
            "flexible": classify.flags["flexible"],
            "alternative": classify.flags["alternative"],
            "hom_lie": jacobi.passed,
        }
        if bundle.space.is_trivially_graded() and classify.flags["flexible"]:
            results.append((check_flexible_akivis_relation(bundle, jobs=jobs), False))
    elif kind == "leibniz":
        law = check_color_leibniz(bundle, jobs)
        results.append((law, False))
        if law.passed:
            results.append((check_leibniz_consequences(bundle, jobs), False))
        skew = check_skew_symmetry(bundle, jobs)
        results.append((skew, True))
        flags = {
            "multiplicative": is_multiplicative(bundle),
            "skew_symmetric": skew.passed,
        }
    elif kind == "nhlp":
        rep = check_nhlp(bundle, jobs)
        results.append((rep, False))
        flags = {
            "multiplicative": is_multiplicative(bundle),
            "commutative": rep.flags["commutative"],
        }
    elif kind == "dialgebra":
        results.append((check_dialgebra(bundle, jobs), False))
        flags = {
            "multiplicative": is_multiplicative(bundle),
            "products_coincide": bundle.prod_left == bundle.prod_right,
        }
    elif kind == "module":
        results.append((check_module(bundle, jobs), False))
        flags = {
            "algebra_multiplicative": check_endomorphism(
                bundle.algebra.twist, [bundle.algebra.bracket]
            ).passed,
        }
    return results, flags


def _defect_doc(defect):
    if defect is None:
        return None
    if isinstance(defect, Vector):
        return _vector_doc(defect)
    if isinstance(defect, Scalar):
        return scalar_to_text(defect)
    return str(defect)


def _walk(report, prefix=""):
    path = prefix + report.identity_id
    if not report.subreports:
        yield path, report
        return
    for sub in report.subreports:
        yield from _walk(sub, path + "/")


def report_document(bundle_doc, results, flags) -> dict:
    """Assemble the machine report for a bundle document and its check
    results.  Deterministic: entries follow the fixed checker order and
    violations are canonically sorted."""
    entries = []
    overall = True
    for report, advisory in results:
        for path, leaf in _walk(report):
            entry = {
                "identity": path,
                "passed": leaf.passed,
                "advisory": advisory,
                "violations": [
                    {
                        "args": list(v.args),
                        "defect": _defect_doc(v.defect),
                        "note": v.note,
                    }
                    for v in leaf.violations
                ],
            }
            if leaf.precondition_failure is not None:
                entry["precondition_failed"] = leaf.precondition_failure.identity_id
            if leaf.note:
                entry["note"] = leaf.note
            entries.append(entry)
            if not advisory and not leaf.passed:
                overall = False
    return {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "input_digest": document_digest(bundle_doc),
        "kind": bundle_doc.get("kind"),
        "passed": overall,
        "results": entries,
        "flags": dict(sorted(flags.items())),
    }


def render_report_text(report_doc) -> str:
    """Human-readable rendering of a report document."""
    lines = [
        f"kind: {report_doc['kind']}    tool: colorhom {report_doc['tool_version']}",
        f"input: {report_doc['input_digest']}",
    ]
    for entry in report_doc["results"]:
        tag = " (advisory)" if entry["advisory"] else ""
        if entry.get("precondition_failed"):
            lines.append(
                f"{entry['identity']}: SKIPPED{tag} "
                f"(precondition {entry['precondition_failed']} failed)"
            )
            continue
        if entry["passed"]:
            lines.append(f"{entry['identity']}: PASS{tag}")
            continue
        lines.append(
            f"{entry['identity']}: FAIL{tag} ({len(entry['violations'])} violations)"
        )
        for v in entry["violations"][:5]:
            where = tuple(v["args"])
            defect = v["defect"]
            note = f" [{v['note']}]" if v["note"] else ""
            lines.append(f"  at {where}: defect {defect}{note}")
        if len(entry["violations"]) > 5:
            lines.append(f"  ... {len(entry['violations']) - 5} more")
    if report_doc["flags"]:
        flagtext = " ".join(f"{k}={str(v).lower()}" for k, v in report_doc["flags"].items())
        lines.append(f"flags: {flagtext}")
    lines.append("result: " + ("PASS" if report_doc["passed"] else "FAIL"))
    return "\n".join(lines) + "\n"
