import json
from pathlib import Path

import pytest

from agr_lab.batch import ManifestError, parse_manifest, run_batch, summarize, summary_line
from agr_lab.semigroup import semigroup_from_generators
from agr_lab.semigroup_rings import oversemigroups

DATA = Path(__file__).parent / "data"


def load(name):
    path = DATA / name
    return parse_manifest(path.read_text(), path.parent)


def canonical(records):
    return json.dumps([r.to_dict() for r in records], sort_keys=True)


def test_oversemigroups_of_three_five():
    manifest = load("over35.manifest")
    listed = {tuple(int(g) for g in e.payload.split(",")) for e in manifest.entries}
    assert listed == {S.generators for S in oversemigroups(semigroup_from_generators([3, 5]))}
    records = run_batch(manifest)
    assert len(records) == 5 and all(r.status == "ok" for r in records)
    by = {r.label: r.report for r in records}
    assert by["H35"].gorenstein is True
    assert by["H357"].almost_gorenstein is True and by["H357"].gorenstein is False
    assert by["H345"].almost_gorenstein is True and by["H345"].gorenstein is False
    assert by["H23"].gorenstein is True and by["N"].gorenstein is True
    s = summarize(records)
    assert s["entries"] == 5 and s["gorenstein"] == 3 and s["almost_gorenstein"] == 5


def test_empty_manifest():
    assert run_batch(load("empty.manifest")) == []
    assert run_batch(parse_manifest("# only a comment\n\n")) == []
    assert summary_line(summarize([])).startswith("summary: entries=0 ok=0")


def test_error_entry_is_isolated():
    records = run_batch(load("mixed.manifest"))
    assert [r.label for r in records] == ["good", "bad", "v32", "path", "rp2-f2", "square"]
    status = {r.label: r.status for r in records}
    assert status["bad"] == "error" and "NotNumerical" in records[1].error
    assert all(s == "ok" for label, s in status.items() if label != "bad")
    by = {r.label: r.report for r in records if r.report}
    assert by["rp2-f2"].cohen_macaulay is False
    assert by["square"].gorenstein is True
    assert by["path"].almost_gorenstein is True and by["path"].cm_type == 2
    assert by["v32"].almost_gorenstein is True and by["v32"].gorenstein is False


def test_inline_matches_file_payload():
    inline = parse_manifest("complex\ta\tn=4;1 2;2 3;3 4\n")
    from_file = load("mixed.manifest")
    a = run_batch(inline)[0].report
    b = next(r for r in run_batch(from_file) if r.label == "path").report
    assert a == b


@pytest.mark.parametrize(
    "text",
    [
        "sgp\tx\t3,4\nsgp\tx\t3,5\n",
        "sgp\t3,4\n",
        "ring\tx\t3,4\n",
        "sgp\tx\t3,a\n",
        "veronese\tv\t3\n",
        "complex\tc\tn=3;1 x\n",
        "complex\tc\tnowhere.complex\n",
        "complex\tc\tn=2;1 2\tfield=r\n",
        "sgp\tx\t3,4\tcolour=red\n",
    ],
)
def test_malformed_manifest(text):
    with pytest.raises(ManifestError):
        parse_manifest(text, DATA)


def test_validation_fails_before_running():
    # the bad last line rejects the whole manifest, so nothing is classified
    with pytest.raises(ManifestError, match="line 3"):
        parse_manifest("sgp\ta\t3,4\nsgp\tb\t3,5\nsgp\tc\t\n")


def test_parallel_matches_serial():
    for name in ("over35.manifest", "mixed.manifest"):
        manifest = load(name)
        assert canonical(run_batch(manifest, workers=1)) == canonical(run_batch(manifest, workers=3))
