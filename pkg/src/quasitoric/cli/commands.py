"""
Command implementations.

Each command takes the parsed document and the command-line settings and
returns its results with an exit status: 0 on success, 2 when a validation
fails, 3 when two independent routes of the library disagree.
"""

import logging
import math
import typing
from dataclasses import dataclass, field
from fractions import Fraction

from ..arrangements import (
    complement_homotopy,
    dominates,
    enumerate_regions,
    nerve,
    nerve_isomorphic,
    region_report,
    region_system,
    stratify,
    union_homotopy,
)
from ..cohomology import algebra_report, betti_report, linear_operator, macaulay_algebra, self_intersection
from ..complexes import (
    CharacteristicPair,
    cell_vector,
    describe_indices,
    format_face,
    generic_vector,
    validate_characteristic,
    validate_fan,
)
from ..complexes.fan import format_vector
from ..core.errors import DimensionMismatchError, InputParseError
from ..core.options import RunOptions
from ..exact import parse_polynomial
from ..exact.linalg import Vector
from ..exact.sampling import random_vector, seeded
from ..virtualpoly import (
    ambient_variables,
    chain_report,
    chain_volume,
    cross_check_volume,
    integrate,
    stokes_integral,
    subordinate_map,
    translation_problems,
    virtual_chain,
    volume_polynomial,
)
from .documents import Document, InputDocument, arrangement_of, characteristic_pair

logger = logging.getLogger(__name__)

SUCCESS = 0
VALIDATION_FAILED = 2
CROSS_CHECK_FAILED = 3


@dataclass
class Settings:
    h: typing.Optional[typing.List[Fraction]] = None
    q: typing.Optional[str] = None
    samples: typing.Optional[int] = None
    seed: typing.Optional[int] = None
    other: typing.Optional[Document] = None
    options: RunOptions = field(default_factory=lambda: RunOptions())


@dataclass
class Outcome:
    results: typing.Any
    exit_code: int = SUCCESS


def _pair_document(doc: Document, command: str) -> InputDocument:
    if not isinstance(doc, InputDocument):
        raise InputParseError(f"{command} needs a fan document")
    return doc


def _support(pair: CharacteristicPair, doc: InputDocument, settings: Settings) -> Vector:
    h = settings.h if settings.h is not None else doc.h
    if h is None:
        raise InputParseError("A support vector is required (--h or an \"h\" entry)")
    if len(h) != pair.vertex_count:
        raise InputParseError("Support vector needs one entry per ray", body=(len(h), pair.vertex_count))
    return tuple(h)


def cmd_validate(doc: Document, settings: Settings) -> Outcome:
    fan_doc = _pair_document(doc, "validate")
    try:
        fan = fan_doc.fan()
    except DimensionMismatchError as e:
        raise InputParseError("Rays do not match the dimension", body=str(e)) from e
    report = validate_fan(fan)
    if report.ok:
        try:
            pair = CharacteristicPair.from_fan(fan, fan_doc.lambda_, fan_doc.mode)
        except DimensionMismatchError as e:
            raise InputParseError("Functionals do not match the fan", body=str(e)) from e
        report = report.merged(validate_characteristic(pair))
    results = {"ok": report.ok, "problems": report.problems}
    return Outcome(results, SUCCESS if report.ok else VALIDATION_FAILED)


def cmd_chain(doc: Document, settings: Settings) -> Outcome:
    fan_doc = _pair_document(doc, "chain")
    pair = characteristic_pair(fan_doc)
    h = _support(pair, fan_doc, settings)
    chain = virtual_chain(pair, h, options=settings.options)
    volume = chain_volume(chain)
    expected = volume_polynomial(pair).evaluate(h)
    results = {"h": list(h), "regions": chain_report(chain), "chain_volume": volume, "polynomial_value": expected}
    return Outcome(results, SUCCESS if volume == expected else CROSS_CHECK_FAILED)


def cmd_volpoly(doc: Document, settings: Settings) -> Outcome:
    pair = characteristic_pair(_pair_document(doc, "volpoly"))
    vol = volume_polynomial(pair)
    problems = translation_problems(pair, vol)
    results = {"polynomial": vol.labelled(), "text": str(vol), "translation_problems": problems}
    return Outcome(results, CROSS_CHECK_FAILED if problems else SUCCESS)


def cmd_integrate(doc: Document, settings: Settings) -> Outcome:
    fan_doc = _pair_document(doc, "integrate")
    pair = characteristic_pair(fan_doc)
    if settings.q is None:
        raise InputParseError("integrate needs --q")
    q = parse_polynomial(settings.q, ambient_variables(pair.dimension))
    h = _support(pair, fan_doc, settings)
    by_regions = integrate(q, virtual_chain(pair, h, options=settings.options))
    by_boundary = stokes_integral(q, subordinate_map(pair, h))
    results = {"q": str(q), "h": list(h), "integral": by_regions, "boundary_integral": by_boundary}
    return Outcome(results, SUCCESS if by_regions == by_boundary else CROSS_CHECK_FAILED)


def cmd_betti(doc: Document, settings: Settings) -> Outcome:
    pair = characteristic_pair(_pair_document(doc, "betti"))
    report = betti_report(pair, options=settings.options)
    return Outcome(report, SUCCESS if report.agree else CROSS_CHECK_FAILED)


def cmd_cohomology(doc: Document, settings: Settings) -> Outcome:
    pair = characteristic_pair(_pair_document(doc, "cohomology"))
    report = algebra_report(pair)
    return Outcome(report, SUCCESS if report.pairing_ok and not report.problems else CROSS_CHECK_FAILED)


def cmd_homotopy(doc: Document, settings: Settings) -> Outcome:
    arrangement = arrangement_of(doc, settings.h)
    union = union_homotopy(arrangement)
    regions = enumerate_regions(arrangement)
    complement = complement_homotopy([region_system(r) for r in regions])
    results = {
        "union": union,
        "regions": [region_report(r) for r in regions],
        "complement_of_regions": complement,
    }
    consistent = arrangement.size == 0 or (complement.removed_points or 0) == union.sphere_count
    return Outcome(results, SUCCESS if consistent else CROSS_CHECK_FAILED)


def cmd_nerve(doc: Document, settings: Settings) -> Outcome:
    arrangement = arrangement_of(doc, settings.h)
    k = nerve(arrangement)
    results = {
        "facets": [format_face(f) for f in k.facets],
        "f_vector": k.f_vector(),
        "strata": stratify(arrangement),
    }
    return Outcome(results)


def cmd_dominates(doc: Document, settings: Settings) -> Outcome:
    if settings.other is None:
        raise InputParseError("dominates needs --other")
    kx = nerve(arrangement_of(doc, settings.h))
    ky = nerve(arrangement_of(settings.other, settings.h))
    results = {
        "dominates": dominates(kx, ky),
        "dominated_by": dominates(ky, kx),
        "isomorphic": nerve_isomorphic(kx, ky),
    }
    return Outcome(results)


def cmd_cells(doc: Document, settings: Settings) -> Outcome:
    pair = characteristic_pair(_pair_document(doc, "cells"))
    assert pair.fan is not None
    v = generic_vector(pair.fan, settings.seed)
    results = {
        "vector": format_vector(v),
        "indices": describe_indices(pair.fan, v),
        "cell_vector": list(cell_vector(pair.fan, v)),
    }
    return Outcome(results)


def cmd_bkkcheck(doc: Document, settings: Settings) -> Outcome:
    """Chain volume against the volume polynomial, and ``n! Vol(h)`` against ``eps((sum h_i d_i)^n)``."""
    pair = characteristic_pair(_pair_document(doc, "bkkcheck"))
    report = cross_check_volume(pair, settings.samples, settings.seed, options=settings.options)
    vol = volume_polynomial(pair)
    algebra = macaulay_algebra(vol)
    rng = seeded(report.seed)
    intersection_mismatches = []
    for _ in range(report.samples):
        h = random_vector(rng, pair.vertex_count)
        expected = self_intersection(pair, h, vol)
        actual = algebra.epsilon(linear_operator(h) ** pair.dimension)
        if expected != actual:
            intersection_mismatches.append({"h": list(h), "n_factorial_volume": expected, "top_power": actual})
    results = {
        "volume_routes": report,
        "intersection_mismatches": intersection_mismatches,
        "n_factorial": math.factorial(pair.dimension),
    }
    ok = report.ok and not intersection_mismatches
    return Outcome(results, SUCCESS if ok else CROSS_CHECK_FAILED)


COMMANDS: typing.Dict[str, typing.Tuple[typing.Callable[[Document, Settings], Outcome], str]] = {
    "validate": (cmd_validate, "validate a fan and its characteristic functionals"),
    "chain": (cmd_chain, "the virtual chain of a support vector and its volume"),
    "volpoly": (cmd_volpoly, "the volume polynomial"),
    "integrate": (cmd_integrate, "integrate a polynomial over the virtual chain"),
    "betti": (cmd_betti, "Betti numbers by three independent routes"),
    "cohomology": (cmd_cohomology, "the cohomology ring as a Macaulay algebra"),
    "homotopy": (cmd_homotopy, "homotopy type of the union of an arrangement"),
    "nerve": (cmd_nerve, "nerve and natural stratification of an arrangement"),
    "dominates": (cmd_dominates, "compare the nerves of two arrangements"),
    "cells": (cmd_cells, "cell decomposition by a generic vector"),
    "bkkcheck": (cmd_bkkcheck, "cross-check volumes and self-intersections on random support vectors"),
}

