"""The flat matroid file format: parsing, writing, validation on load."""

import pytest

from matroidfacets import (
    ExchangeAxiomViolated,
    MatroidFile,
    ParseError,
    catalog_get,
    dumps,
    load,
    loads,
    save,
    uniform,
)

MK4_NONBASES_TEXT = """\
name MK4
elements ab ac ad bc bd cd
rank 3
nonbases:
ab ac bc
ab ad bd
ac ad cd
bc bd cd
"""


def test_round_trip_through_text():
    m = catalog_get("MK4").matroid
    text = dumps(MatroidFile.from_matroid(m, "MK4"))
    assert text == MK4_NONBASES_TEXT
    loaded, mf = loads(text).to_matroid(), loads(text)
    assert loaded == m
    assert mf.name == "MK4"


def test_auto_encoding_picks_the_shorter_listing():
    mk4 = catalog_get("MK4").matroid
    assert MatroidFile.from_matroid(mk4, "MK4").nonbases is not None  # 4 < 16
    u11 = uniform(1, 1)
    tiny = MatroidFile.from_matroid(u11, "tiny")
    assert tiny.nonbases == ()  # zero lines beat one line
    assert loads(dumps(tiny)).to_matroid() == u11

    forced = MatroidFile.from_matroid(mk4, "MK4", encoding="bases")
    assert forced.bases is not None and len(forced.bases) == 16
    assert loads(dumps(forced)).to_matroid() == mk4


def test_empty_nonbases_section_means_uniform():
    text = "name U\nelements a b c\nrank 2\nnonbases:\n"
    m = loads(text).to_matroid()
    assert m.basis_count() == 3


def test_round_trip_all_catalog(tmp_path):
    for name in ("MK4", "W3", "Q6", "P6", "V8"):
        m = catalog_get(name).matroid
        path = tmp_path / f"{name}.txt"
        save(path, m, name)
        loaded, mf = load(path)
        assert loaded == m
        assert mf.name == name


def test_comments_and_blank_lines_ignored():
    text = (
        "# a comment\n\nname X\n"
        "elements a b\n# another\nrank 1\nbases:\na\n\nb\n"
    )
    m = loads(text).to_matroid()
    assert m.basis_count() == 2


@pytest.mark.parametrize(
    "text, hint",
    [
        ("elements a b\nrank 1\nbases:\na\n", "name"),
        ("name X\nrank 1\nbases:\na\n", "elements"),
        ("name X\nelements a b\nbases:\na\n", "rank"),
        ("name X\nelements a a\nrank 1\nbases:\na\n", "duplicate"),
        ("name X\nelements a b\nrank 1\n", "section"),
        ("name X\nelements a b\nrank 1\nbases:\n", "at least one basis"),
        ("name X\nelements a b\nrank 1\nbases:\nz\n", "z"),
        ("name X\nelements a b\nrank 2\nbases:\na\n", "rank"),
        ("name X\nelements a b\nrank 1\nnonbases:\na b\n", "cardinality"),
        ("name X\nelements a b\nrank 1\nwhat:\na\n", "header"),
        ("bogus line\n", "header"),
    ],
)
def test_malformed_inputs_rejected(text, hint):
    with pytest.raises(ParseError) as info:
        loads(text).to_matroid()
    assert hint.lower() in str(info.value).lower()


def test_corrupted_family_caught_on_conversion():
    # removing the star at vertex a from MK4's bases breaks exchange
    m = catalog_get("MK4").matroid
    kept = [b.labels() for b in m.bases if b.labels() != ("ab", "ac", "ad")]
    text = "name broken\nelements ab ac ad bc bd cd\nrank 3\nbases:\n"
    text += "".join(" ".join(b) + "\n" for b in kept)
    mf = loads(text)
    with pytest.raises(ExchangeAxiomViolated):
        mf.to_matroid()
    skipped = mf.to_matroid(validate=False)  # loads, just not a matroid
    assert skipped.basis_count() == 15


def test_load_validates_by_default(tmp_path):
    path = tmp_path / "broken.txt"
    m = catalog_get("MK4").matroid
    kept = [b.labels() for b in m.bases if b.labels() != ("ab", "ac", "ad")]
    text = "name broken\nelements ab ac ad bc bd cd\nrank 3\nbases:\n"
    text += "".join(" ".join(b) + "\n" for b in kept)
    path.write_text(text)
    with pytest.raises(ExchangeAxiomViolated):
        load(path)
    m2, _ = load(path, validate=False)
    assert m2.basis_count() == 15
