"""Built-in example bundles.

Small hand-checked structures used by the CLI (`colorhom examples`), the
test suite, and as inputs to the construction commands.  Fixtures whose
names end in "-broken" deliberately violate their defining law and are
kept for exercising failure reporting.
"""

from functools import lru_cache

from .bundles import (
    AkivisBundle,
    DialgebraBundle,
    LeibnizBundle,
    ModuleBundle,
    NonAssocBundle,
)
from .constructions import trivial_extension
from .errors import InputError
from .grading import Bicharacter, GradingGroup, TRIVIAL_GROUP
from .io import ParsedDocument, serialize_bundle
from .linalg import EvenMap, GradedSpace, MultilinearMap, Vector
from .scalars import Scalar, cyclotomic_field

_REGISTRY = {}


def _fixture(name, description):
    def register(builder):
        _REGISTRY[name] = (description, builder)
        return builder

    return register


def fixture_names():
    return sorted(_REGISTRY)


def fixture_description(name) -> str:
    if name not in _REGISTRY:
        raise InputError(f"unknown fixture {name!r}")
    return _REGISTRY[name][0]


@lru_cache(maxsize=None)
def fixture(name) -> ParsedDocument:
    if name not in _REGISTRY:
        raise InputError(f"unknown fixture {name!r}")
    return _REGISTRY[name][1]()


def fixture_document(name) -> dict:
    parsed = fixture(name)
    return serialize_bundle(parsed.bundle, extra_maps=parsed.extra_maps)


def _trivial_setup(names):
    field = cyclotomic_field(1)
    space = GradedSpace.build(field, TRIVIAL_GROUP, [(n, ()) for n in names])
    bichar = Bicharacter.trivial(TRIVIAL_GROUP, field)
    return field, space, bichar


def _op(space, arity, entries):
    table = {
        key: Vector(space, {i: Scalar.rational(space.field, c) for i, c in out.items()})
        for key, out in entries.items()
    }
    return MultilinearMap.internal(space, arity, table)


@_fixture("leibniz-L2", "two-dimensional Leibniz algebra, [e2,e2] = e1, identity twist")
def _leibniz_l2():
    _, space, bichar = _trivial_setup(["e1", "e2"])
    bracket = _op(space, 2, {(1, 1): {0: 1}})
    return ParsedDocument(
        LeibnizBundle(space, bichar, bracket, EvenMap.identity(space))
    )


@_fixture(
    "leibniz-L2-broken",
    "leibniz-L2 with an extra product [e1,e2] = e2 that breaks the Leibniz law",
)
def _leibniz_l2_broken():
    _, space, bichar = _trivial_setup(["e1", "e2"])
    bracket = _op(space, 2, {(1, 1): {0: 1}, (0, 1): {1: 1}})
    return ParsedDocument(
        LeibnizBundle(space, bichar, bracket, EvenMap.identity(space))
    )


@_fixture(
    "leibniz-S1",
    "Z_2-graded bracket with sign bicharacter: odd e, even f, [e,e] = f",
)
def _leibniz_s1():
    field = cyclotomic_field(1)
    group = GradingGroup(0, (2,))
    space = GradedSpace.build(field, group, [("e", (1,)), ("f", (0,))])
    minus_one = Scalar.rational(field, -1)
    bichar = Bicharacter(group, field, ((minus_one,),))
    bracket = _op(space, 2, {(0, 0): {1: 1}})
    return ParsedDocument(
        LeibnizBundle(space, bichar, bracket, EvenMap.identity(space))
    )


@_fixture(
    "nonassoc-NA2",
    "two-dimensional non-associative product: e1*e2 = e1, e2*e1 = e2",
)
def _nonassoc_na2():
    _, space, bichar = _trivial_setup(["e1", "e2"])
    product = _op(space, 2, {(0, 1): {0: 1}, (1, 0): {1: 1}})
    return ParsedDocument(
        NonAssocBundle(space, bichar, product, EvenMap.identity(space))
    )


@_fixture("akivis-A", "solvable Lie bracket [e1,e2] = e2 with zero ternary op")
def _akivis_a():
    _, space, bichar = _trivial_setup(["e1", "e2"])
    bracket = _op(space, 2, {(0, 1): {1: 1}, (1, 0): {1: -1}})
    ternary = _op(space, 3, {})
    bundle = AkivisBundle(space, bichar, bracket, ternary, EvenMap.identity(space))
    # beta scales e2 by 3; it respects the bracket, so it can twist this bundle
    beta = EvenMap.diagonal(space, [1, 3])
    return ParsedDocument(bundle, {"beta": beta})


@_fixture("dialg-D1", "one-dimensional dialgebra with both products e1*e1 = e1")
def _dialg_d1():
    _, space, bichar = _trivial_setup(["e1"])
    left = _op(space, 2, {(0, 0): {0: 1}})
    right = _op(space, 2, {(0, 0): {0: 1}})
    return ParsedDocument(
        DialgebraBundle(space, bichar, left, right, EvenMap.identity(space))
    )


@_fixture(
    "dialg-D2",
    "two-dimensional dialgebra whose products differ; its derived bracket is "
    "Leibniz but not skew",
)
def _dialg_d2():
    _, space, bichar = _trivial_setup(["e1", "e2"])
    left = _op(space, 2, {(0, 0): {0: 1}})
    right = _op(space, 2, {(0, 0): {0: 1}, (0, 1): {1: 1}})
    return ParsedDocument(
        DialgebraBundle(space, bichar, left, right, EvenMap.identity(space))
    )


@_fixture(
    "nhlp-trivext-L2",
    "unital extension of leibniz-L2: the added unit multiplies like scalars",
)
def _nhlp_trivext_l2():
    return ParsedDocument(trivial_extension(fixture("leibniz-L2").bundle))


@_fixture("module-M", "leibniz-L2 acting on a copy of itself by its bracket")
def _module_m():
    alg = fixture("leibniz-L2").bundle
    field = alg.space.field
    mspace = GradedSpace.build(field, TRIVIAL_GROUP, [("m1", ()), ("m2", ())])
    one = Scalar.one(field)
    act_left = MultilinearMap(
        (alg.space, mspace), mspace, {(1, 1): Vector(mspace, {0: one})}
    )
    act_right = MultilinearMap(
        (mspace, alg.space), mspace, {(1, 1): Vector(mspace, {0: one})}
    )
    return ParsedDocument(
        ModuleBundle(alg, mspace, act_left, act_right, EvenMap.identity(mspace))
    )
