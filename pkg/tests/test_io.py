"""Document round-trips, digest stability, malformed-input diagnostics,
and the composite verdicts produced by full_check."""

import copy
import json

import pytest

from colorhom import io
from colorhom.errors import InputError
from colorhom.fixtures import fixture, fixture_document, fixture_names
from colorhom.grading import GradingGroup
from colorhom.linalg import EvenMap
from colorhom.scalars import Scalar, cyclotomic_field


def reparse(doc):
    return io.parse_document(json.loads(json.dumps(doc)))


# ---------------------------------------------------------------------------
# round-trips


@pytest.mark.parametrize("name", fixture_names())
def test_parse_serialize_round_trip(name):
    parsed = fixture(name)
    doc = io.serialize_bundle(parsed.bundle, extra_maps=parsed.extra_maps)
    again = reparse(doc)
    assert again.bundle == parsed.bundle
    assert again.extra_maps == parsed.extra_maps


@pytest.mark.parametrize("name", fixture_names())
def test_serialize_parse_idempotent(name):
    doc = fixture_document(name)
    parsed = io.parse_document(doc)
    doc2 = io.serialize_bundle(parsed.bundle, extra_maps=parsed.extra_maps)
    assert doc == doc2


def test_round_trip_cyclotomic_scalars():
    F = cyclotomic_field(12)
    z = Scalar.root(F)
    from colorhom.bundles import LeibnizBundle
    from colorhom.grading import Bicharacter, TRIVIAL_GROUP
    from colorhom.linalg import GradedSpace, MultilinearMap, Vector

    sp = GradedSpace.build(F, TRIVIAL_GROUP, [("a", ()), ("b", ())])
    bc = Bicharacter.trivial(TRIVIAL_GROUP, F)
    coeff = z ** 2 - z.inverse() * Scalar.rational(F, 3, 7)
    bracket = MultilinearMap.internal(sp, 2, {(1, 1): Vector(sp, {0: coeff})})
    b = LeibnizBundle(sp, bc, bracket, EvenMap.identity(sp))
    doc = io.serialize_bundle(b)
    assert reparse(doc).bundle == b
    entry = doc["ops"]["bracket"][0]["out"]["0"]
    assert isinstance(entry, list) and len(entry) == 4  # phi(12) components


def test_loads_dumps_round_trip():
    doc = fixture_document("akivis-A")
    assert io.loads_document(io.dumps_document(doc)) == doc
    assert io.dumps_document(doc).endswith("\n")


# ---------------------------------------------------------------------------
# digests


def test_digest_ignores_whitespace_and_key_order():
    doc = fixture_document("leibniz-L2")
    d1 = io.document_digest(doc)
    shuffled = json.loads(json.dumps(doc))
    # rebuild with reversed key insertion order
    shuffled = {k: shuffled[k] for k in reversed(list(shuffled))}
    assert io.document_digest(shuffled) == d1
    assert d1.startswith("sha256:")


def test_digest_excludes_embedded_report():
    doc = copy.deepcopy(fixture_document("leibniz-L2"))
    base = io.document_digest(doc)
    doc["report"] = {"schema": io.REPORT_SCHEMA, "passed": True}
    assert io.document_digest(doc) == base
    doc["basis"][0]["name"] = "other"
    assert io.document_digest(doc) != base


# ---------------------------------------------------------------------------
# malformed documents fail with the offending path in the message


def broken(name, mutate):
    doc = copy.deepcopy(fixture_document(name))
    mutate(doc)
    return doc


@pytest.mark.parametrize(
    "mutate, needle",
    [
        (lambda d: d.update(schema="nope/9"), "schema"),
        (lambda d: d.update(kind="ring"), "kind"),
        (lambda d: d["field"].update(cyclotomic_order=0), "field"),
        (lambda d: d["grading"].update(torsion=[0]), "torsion"),
        (lambda d: d["basis"].append({"name": "e1", "degree": []}), "basis"),
        (lambda d: d["basis"].append({"name": "x", "degree": [1]}), "degree"),
        (lambda d: d["ops"].update(extra=[]), "ops"),
        (
            lambda d: d["ops"]["bracket"].append({"args": [0, 9], "out": {"0": "1"}}),
            "args",
        ),
        (
            lambda d: d["ops"]["bracket"].append({"args": [1, 1], "out": {"0": "2"}}),
            "bracket",
        ),
        (
            lambda d: d["ops"]["bracket"].append({"args": [0, 0], "out": {"7": "1"}}),
            "out",
        ),
        (
            lambda d: d["ops"]["bracket"].append({"args": [0, 0], "out": {"0": "1.5"}}),
            "malformed",
        ),
        (lambda d: d["maps"].pop("alpha"), "alpha"),
    ],
)
def test_malformed_leibniz_documents(mutate, needle):
    doc = broken("leibniz-L2", mutate)
    with pytest.raises(InputError) as exc:
        io.parse_document(doc)
    assert needle in str(exc.value)


def test_malformed_bicharacter_shape_and_value():
    doc = broken("leibniz-S1", lambda d: d.update(bicharacter=[["1", "1"]]))
    with pytest.raises(InputError) as exc:
        io.parse_document(doc)
    assert "bicharacter" in str(exc.value)

    doc = broken("leibniz-S1", lambda d: d.update(bicharacter=[["2"]]))
    with pytest.raises(InputError) as exc:
        io.parse_document(doc)
    assert "bicharacter" in str(exc.value)


def test_odd_alpha_rejected():
    def mutate(d):
        d["maps"]["alpha"] = [["0", "1"], ["1", "0"]]  # swaps degrees on S1

    with pytest.raises(InputError) as exc:
        io.parse_document(broken("leibniz-S1", mutate))
    assert "alpha" in str(exc.value)


def test_module_documents_reject_extra_maps():
    def mutate(d):
        d["maps"]["beta"] = [["1", "0"], ["0", "1"]]

    with pytest.raises(InputError) as exc:
        io.parse_document(broken("module-M", mutate))
    assert "maps" in str(exc.value) or "beta" in str(exc.value)


def test_module_algebra_must_be_leibniz():
    def mutate(d):
        d["algebra"]["kind"] = "nonassociative"
        d["algebra"]["ops"]["product"] = d["algebra"]["ops"].pop("bracket")

    with pytest.raises(InputError):
        io.parse_document(broken("module-M", mutate))


def test_extra_map_allowed_on_plain_kind_round_trips():
    parsed = fixture("akivis-A")
    assert set(parsed.extra_maps) == {"beta"}
    assert parsed.extra_maps["beta"] == EvenMap.diagonal(parsed.bundle.space, [1, 3])


def test_strict_scalar_strings_in_documents():
    def mutate(d):
        d["ops"]["bracket"][0]["out"]["0"] = " 1"

    with pytest.raises(InputError):
        io.parse_document(broken("leibniz-L2", mutate))


# ---------------------------------------------------------------------------
# full_check verdicts per kind


def run_full(name, jobs=1):
    parsed = fixture(name)
    results, flags = io.full_check(parsed.bundle, jobs)
    return results, flags


def non_advisory_pass(results):
    return all(rep.passed for rep, advisory in results if not advisory)


@pytest.mark.parametrize("name", fixture_names())
def test_every_fixture_passes_unless_marked_broken(name):
    results, _ = run_full(name)
    if name.endswith("-broken"):
        assert not non_advisory_pass(results)
    else:
        assert non_advisory_pass(results)


def test_leibniz_full_check_contents():
    results, flags = run_full("leibniz-L2")
    ids = [rep.identity_id for rep, _ in results]
    assert "evenness" in ids[0]
    advisory_ids = {rep.identity_id for rep, adv in results if adv}
    assert "skew-symmetry" in advisory_ids
    # L2's square bracket is not skew, but that is advisory only
    skew = next(rep for rep, adv in results if rep.identity_id == "skew-symmetry")
    assert not skew.passed
    assert flags["multiplicative"] is True
    assert flags["skew_symmetric"] is False


def test_nonassoc_full_check_flags():
    _, flags = run_full("nonassoc-NA2")
    assert flags == {
        "multiplicative": True,
        "hom_associative": False,
        "commutative": False,
        "flexible": False,
        "alternative": False,
    }


def test_akivis_full_check_flags():
    results, flags = run_full("akivis-A")
    assert flags["hom_lie"] is True
    assert non_advisory_pass(results)


def test_dialgebra_full_check_flags():
    _, flags = run_full("dialg-D1")
    assert flags["products_coincide"] is True
    _, flags2 = run_full("dialg-D2")
    assert flags2["products_coincide"] is False


def test_module_full_check_flags():
    _, flags = run_full("module-M")
    assert flags["algebra_multiplicative"] is True


def test_full_check_deterministic_across_jobs():
    r1, f1 = run_full("nonassoc-NA2", jobs=1)
    r4, f4 = run_full("nonassoc-NA2", jobs=4)
    assert f1 == f4
    assert [(rep.identity_id, rep.passed) for rep, _ in r1] == [
        (rep.identity_id, rep.passed) for rep, _ in r4
    ]


# ---------------------------------------------------------------------------
# report documents


def test_report_document_shape_and_rendering():
    parsed = fixture("leibniz-L2-broken")
    bundle_doc = io.serialize_bundle(parsed.bundle)
    results, flags = io.full_check(parsed.bundle, 1)
    rdoc = io.report_document(bundle_doc, results, flags)
    assert rdoc["schema"] == io.REPORT_SCHEMA
    assert rdoc["passed"] is False
    assert rdoc["input_digest"] == io.document_digest(bundle_doc)
    assert rdoc["kind"] == "leibniz"
    entry = next(e for e in rdoc["results"] if e["identity"] == "color-hom-leibniz")
    assert entry["passed"] is False and entry["advisory"] is False
    assert entry["violations"][0]["args"] == [0, 1, 1]
    assert entry["violations"][0]["defect"] == {"0": "-2"}
    skew = next(e for e in rdoc["results"] if e["identity"] == "skew-symmetry")
    assert skew["advisory"] is True
    text = io.render_report_text(rdoc)
    assert "FAIL" in text and "color-hom-leibniz" in text
    assert "result: FAIL" in text


def test_report_document_green_path():
    parsed = fixture("leibniz-S1")
    bundle_doc = io.serialize_bundle(parsed.bundle)
    results, flags = io.full_check(parsed.bundle, 1)
    rdoc = io.report_document(bundle_doc, results, flags)
    assert rdoc["passed"] is True
    text = io.render_report_text(rdoc)
    assert "result: PASS" in text
