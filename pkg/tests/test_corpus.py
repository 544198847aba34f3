"""Dataset CSV handling, dedup, and comment mining."""

from __future__ import annotations

import pytest

from onhold.corpus import (
    Comment,
    Dataset,
    Label,
    deduplicate,
    dumps_dataset,
    load_dataset,
    loads_dataset,
    mine_comments,
    save_dataset,
)
from onhold.errors import DuplicateId, IoError, MalformedRow, UnknownLabel


def _ds(*rows):
    return Dataset(tuple(Comment(*row) for row in rows))


def test_round_trip_preserves_tricky_text():
    ds = _ds(
        ("a", "p", 'has, a comma and "quotes"', Label.ON_HOLD),
        ("b", "p", "line one\nline two", Label.NOT_ON_HOLD),
        ("c", "q", "plain", Label.NOT_SATD),
    )
    text = dumps_dataset(ds)
    back = loads_dataset(text)
    assert back.comments == ds.comments
    assert dumps_dataset(back) == text


def test_save_and_load_file(tmp_path):
    ds = _ds(("a", "p", "remove after 4.0", Label.ON_HOLD))
    path = tmp_path / "data.csv"
    save_dataset(ds, str(path))
    assert load_dataset(str(path)).comments == ds.comments


def test_missing_file_is_io_error(tmp_path):
    with pytest.raises(IoError):
        load_dataset(str(tmp_path / "nope.csv"))


def test_empty_file_rejected():
    with pytest.raises(MalformedRow) as exc:
        loads_dataset("")
    assert exc.value.line_no == 1


def test_wrong_header_rejected():
    with pytest.raises(MalformedRow) as exc:
        loads_dataset("id,text\n")
    assert exc.value.line_no == 1


def test_wrong_field_count_reports_line():
    text = "project,id,text,label\np,a,hi,on_hold\np,b,short\n"
    with pytest.raises(MalformedRow) as exc:
        loads_dataset(text)
    assert exc.value.line_no == 3


def test_empty_id_and_empty_text_rejected():
    with pytest.raises(MalformedRow):
        loads_dataset("project,id,text,label\np,,hi,on_hold\n")
    with pytest.raises(MalformedRow):
        loads_dataset("project,id,text,label\np,a,   ,on_hold\n")


def test_unknown_label_rejected():
    with pytest.raises(UnknownLabel):
        loads_dataset("project,id,text,label\np,a,hi,maybe\n")


def test_empty_label_reads_as_negative():
    ds = loads_dataset("project,id,text,label\np,a,unlabeled row,\n")
    assert ds.comments[0].label is Label.NOT_ON_HOLD


def test_duplicate_id_rejected():
    text = "project,id,text,label\np,a,hi,on_hold\nq,a,other,not_on_hold\n"
    with pytest.raises(DuplicateId):
        loads_dataset(text)


def test_blank_lines_skipped():
    text = "project,id,text,label\np,a,hi,on_hold\n\np,b,yo,not_satd\n"
    ds = loads_dataset(text)
    assert [c.id for c in ds.comments] == ["a", "b"]


def test_unsupported_format_rejected(tmp_path):
    with pytest.raises(ValueError):
        load_dataset(str(tmp_path / "x.json"), format="json")


def test_deduplicate_keeps_first_per_project():
    ds = _ds(
        ("a", "p", "Fix  this LATER", Label.ON_HOLD),
        ("b", "p", "fix this later", Label.NOT_ON_HOLD),
        ("c", "q", "fix this later", Label.ON_HOLD),
        ("d", "p", "something else", Label.ON_HOLD),
    )
    deduped = deduplicate(ds)
    assert [c.id for c in deduped.comments] == ["a", "c", "d"]
    assert deduplicate(deduped).comments == deduped.comments


def test_satd_only_drops_not_satd():
    ds = _ds(
        ("a", "p", "x", Label.ON_HOLD),
        ("b", "p", "y", Label.NOT_SATD),
        ("c", "p", "z", Label.NOT_ON_HOLD),
    )
    assert [c.id for c in ds.satd_only().comments] == ["a", "c"]


def test_projects_in_first_seen_order():
    ds = _ds(
        ("a", "beta", "x", Label.ON_HOLD),
        ("b", "alpha", "y", Label.ON_HOLD),
        ("c", "beta", "z", Label.ON_HOLD),
    )
    assert ds.projects() == ["beta", "alpha"]


# ---------------------------------------------------------------------------
# mining
# ---------------------------------------------------------------------------

MAIN_JAVA = "\n".join([
    "// first line",
    "// second line",
    "int x = 1; /* block one */ // tail comment",
    'String s = "// not a comment";',
    'String t = "a\\" // still";',
    "char c = '\"'; // after char",
    "/*",
    " * doc style",
    " * second",
    " */",
])

UTIL_JAVA = "\n".join([
    "int y; //",
    "// util note",
])


@pytest.fixture()
def tree(tmp_path):
    (tmp_path / "Main.java").write_text(MAIN_JAVA, encoding="utf-8")
    sub = tmp_path / "sub"
    sub.mkdir()
    (sub / "Util.java").write_text(UTIL_JAVA, encoding="utf-8")
    (tmp_path / "Bad.java").write_bytes(b"\xff\xfe// broken\n")
    (tmp_path / "Other.txt").write_text("// not scanned", encoding="utf-8")
    return tmp_path


def test_mine_golden_tree(tree):
    ds = mine_comments(str(tree))
    got = [(c.id, c.text) for c in ds.comments]
    assert got == [
        ("Main.java:1:0", "first line\nsecond line"),
        ("Main.java:3:11", "block one"),
        ("Main.java:3:27", "tail comment"),
        ("Main.java:6:14", "after char"),
        ("Main.java:7:0", "doc style\nsecond"),
        ("sub/Util.java:2:0", "util note"),
    ]
    assert all(c.label is Label.NOT_ON_HOLD for c in ds.comments)
    assert all(c.project == tree.name for c in ds.comments)
    assert ds.provenance.skipped_files == ("Bad.java",)


def test_mine_is_deterministic(tree):
    first = mine_comments(str(tree))
    second = mine_comments(str(tree))
    assert first.comments == second.comments


def test_mine_extension_filter(tree):
    ds = mine_comments(str(tree), extensions=(".txt",))
    assert [c.text for c in ds.comments] == ["not scanned"]


def test_mine_missing_directory():
    with pytest.raises(IoError):
        mine_comments("/no/such/tree")


def _mine_one(tmp_path, source):
    target = tmp_path / "one"
    target.mkdir()
    (target / "A.java").write_text(source, encoding="utf-8")
    return [c.text for c in mine_comments(str(target)).comments]


def test_mine_merge_needs_same_indent(tmp_path):
    texts = _mine_one(tmp_path, "// a\n  // b\n")
    assert texts == ["a", "b"]


def test_mine_merge_needs_consecutive_lines(tmp_path):
    texts = _mine_one(tmp_path, "// a\n\n// b\n")
    assert texts == ["a", "b"]


def test_mine_merges_whole_line_runs(tmp_path):
    texts = _mine_one(tmp_path, "// a\n// b\n// c\nint x;\n")
    assert texts == ["a\nb\nc"]


def test_mine_unterminated_block(tmp_path):
    texts = _mine_one(tmp_path, "int x;\n/* dangling\n")
    assert texts == ["dangling"]
