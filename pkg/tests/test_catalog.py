"""Built-in fixture catalog."""

import pytest

from curvesat.catalog import entry, load, names
from curvesat.errors import UnknownCatalogEntryError
from curvesat.parsing import Arrangement
from curvesat.poly import HomogeneousPoly


def test_names_cover_the_families():
    got = names()
    assert len(got) == len(set(got))
    assert "xy" in got and "conic" in got
    for d in range(3, 7):
        assert f"nodal-{d}" in got
        assert f"fermat-{d}" in got
    # one entry per (d, k) with 1 <= k < d
    nf = [n for n in got if n.startswith("nf-")]
    assert len(nf) == sum(d - 1 for d in range(3, 11))
    assert "ziegler-A" in got and "ziegler-Aprime" in got


def test_load_returns_parsed_objects():
    assert isinstance(load("conic"), HomogeneousPoly)
    arr = load("triangle")
    assert isinstance(arr, Arrangement)
    assert arr.degree == 3


def test_entry_metadata():
    e = entry("nf-d5-k2")
    assert e.kind == "poly"
    assert e.irreducible is True
    assert load("nf-d5-k2").degree == 5
    # a reducible member of the same family
    assert entry("nf-d4-k2").irreducible is False


def test_unknown_entry_raises():
    with pytest.raises(UnknownCatalogEntryError):
        entry("no-such-entry")
    with pytest.raises(UnknownCatalogEntryError):
        load("no-such-entry")


def test_every_entry_loads():
    for name in names():
        obj = load(name)
        kind = entry(name).kind
        if kind == "poly":
            assert isinstance(obj, HomogeneousPoly)
        else:
            assert isinstance(obj, Arrangement)
