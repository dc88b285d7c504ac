"""Named example spaces, each with the facts it is expected to exhibit."""

from __future__ import annotations

from dataclasses import dataclass, field

from .spaces import BSpace, dot_product, sierpinski
from .topology import FinTopology


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    space: BSpace
    expected: dict[str, bool] = field(default_factory=dict)
    note: str = ""


def _t4x3() -> BSpace:
    return BSpace.from_opens(
        "xyz",
        [[], ["x", "y"], ["z"], ["x", "y", "z"]],
        [[], ["x"], ["y", "z"], ["x", "y", "z"]],
        "T4X3",
    )


def _pnorm3() -> BSpace:
    return BSpace.from_opens(
        "xyz",
        [[], ["x"], ["x", "y", "z"]],
        [[], ["x"], ["x", "y"], ["x", "z"], ["x", "y", "z"]],
        "PNORM3",
    )


def _dot22() -> BSpace:
    d = FinTopology.discrete("ab")
    return dot_product(d, d, "DOT22")


def _chain2() -> BSpace:
    # left topology on the first component, right topology on the second
    return BSpace.from_opens("01", [[], ["0"], ["0", "1"]], [[], ["1"], ["0", "1"]], "CHAIN2")


def _entries() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            "SIERP",
            sierpinski(),
            {"T0": True, "b_sober": True},
            "B with the B-topology generated by the identity map",
        ),
        CatalogEntry(
            "T4X3",
            _t4x3(),
            {
                "T1": True,
                "T4": True,
                "T3": True,
                "Hausdorff": True,
                "pairwiseRegular": False,
                "pairwiseNormal": False,
                "pairwiseHausdorff": False,
                "b_sober": False,
                "d_sober": True,
            },
            "three points, T4 but none of the pairwise axioms",
        ),
        CatalogEntry(
            "PNORM3",
            _pnorm3(),
            {"pairwiseNormal": True, "normal": False},
            "three points, pairwise normal but not normal",
        ),
        CatalogEntry(
            "DOT22",
            _dot22(),
            {"T1": True, "Hausdorff": True, "cwT0": False, "b_sober": True},
            "X.Y with X = Y = the two-point discrete space",
        ),
        CatalogEntry(
            "CHAIN2",
            _chain2(),
            {"joinT1": True, "R0": False, "T1": False},
            "two-point left/right space, the finite analog of the real line with left and right topologies",
        ),
    ]


CATALOG: dict[str, CatalogEntry] = {e.name: e for e in _entries()}

OUT_OF_SCOPE = {
    "cofinite": "on a finite carrier the cofinite topology is discrete, so the refinement "
    "counterexample built from it has no finite witness",
    "real-line": "the real line with left/right topologies is infinite; CHAIN2 is its finite analog",
    "unit-interval": "[0,1](B) has an infinite carrier",
}


def get(name: str) -> BSpace:
    try:
        return CATALOG[name].space
    except KeyError:
        raise KeyError(f"no catalog space named {name!r}; known: {', '.join(CATALOG)}") from None
