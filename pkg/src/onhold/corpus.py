"""Labeled comment datasets: loading, validation, dedup, mining, persistence.

The CSV exchange format is UTF-8 with a mandatory header row
``project,id,text,label``; label is one of on_hold / not_on_hold / not_satd.
Text fields are quoted per the usual RFC-4180 conventions (the stdlib csv
module on both ends), so embedded commas, quotes, and newlines survive a
round trip byte-stably.

Mining implements a Java-style grammar: // line comments and /* */ block
comments, with string and char literals respected so quoted "//" is not a
comment. Consecutive whole-line // comments at the same indentation merge
into one logical comment, which is how multi-line annotations show up in
the wild (see the motivating examples in the docs).
"""

from __future__ import annotations

import csv
import datetime as _dt
import io
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import DuplicateId, IoError, MalformedRow, UnknownLabel
from .fileio import atomic_write_text


class Label(Enum):
    ON_HOLD = "on_hold"
    NOT_ON_HOLD = "not_on_hold"
    NOT_SATD = "not_satd"


_LABEL_BY_NAME = {label.value: label for label in Label}

CSV_HEADER = ["project", "id", "text", "label"]


@dataclass(frozen=True)
class Comment:
    id: str
    project: str
    text: str
    label: Label


@dataclass(frozen=True)
class Provenance:
    source: str
    loaded_at: str
    skipped_files: tuple[str, ...] = ()


@dataclass(frozen=True)
class Dataset:
    comments: tuple[Comment, ...]
    provenance: Provenance = field(
        compare=False,
        default=Provenance(source="<memory>", loaded_at=""),
    )

    def __len__(self) -> int:
        return len(self.comments)

    def satd_only(self) -> "Dataset":
        """Drop NotSatd rows; they are excluded from training and eval."""
        kept = tuple(c for c in self.comments if c.label is not Label.NOT_SATD)
        return Dataset(kept, self.provenance)

    def projects(self) -> list[str]:
        seen: dict[str, None] = {}
        for c in self.comments:
            seen.setdefault(c.project, None)
        return list(seen)


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def load_dataset(path: str, format: str = "csv") -> Dataset:
    """Load and validate a labeled dataset. Only csv is supported."""
    if format != "csv":
        raise ValueError(f"unsupported dataset format: {format!r}")
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return _parse_csv(fh, source=str(path))
    except OSError as exc:
        raise IoError(str(path), str(exc)) from exc


def loads_dataset(text: str, source: str = "<string>") -> Dataset:
    return _parse_csv(io.StringIO(text), source=source)


def _parse_csv(fh, source: str) -> Dataset:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedRow(1, "empty file, header row required") from None
    if header != CSV_HEADER:
        raise MalformedRow(1, f"header must be {','.join(CSV_HEADER)}")
    comments: list[Comment] = []
    seen_ids: set[str] = set()
    for row in reader:
        line_no = reader.line_num
        if not row:
            continue
        if len(row) != 4:
            raise MalformedRow(line_no, f"expected 4 fields, got {len(row)}")
        project, comment_id, text, label_str = row
        if not comment_id:
            raise MalformedRow(line_no, "empty id")
        if not text.strip():
            raise MalformedRow(line_no, "empty text")
        if label_str == "":
            # unlabeled row (inference input); scored commands ignore labels
            label = Label.NOT_ON_HOLD
        else:
            label = _LABEL_BY_NAME.get(label_str)
        if label is None:
            raise UnknownLabel(label_str, line_no)
        if comment_id in seen_ids:
            raise DuplicateId(comment_id)
        seen_ids.add(comment_id)
        comments.append(Comment(comment_id, project, text, label))
    return Dataset(tuple(comments), Provenance(source, _now()))


def dumps_dataset(dataset: Dataset) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for c in dataset.comments:
        writer.writerow([c.project, c.id, c.text, c.label.value])
    return out.getvalue()


def save_dataset(dataset: Dataset, path: str) -> None:
    atomic_write_text(path, dumps_dataset(dataset))


def _dedup_key(comment: Comment) -> tuple[str, str]:
    normalized = " ".join(comment.text.casefold().split())
    return comment.project, normalized


def deduplicate(dataset: Dataset) -> Dataset:
    """Keep the first of any same-project comments with equal normalized text."""
    seen: set[tuple[str, str]] = set()
    kept: list[Comment] = []
    for comment in dataset.comments:
        key = _dedup_key(comment)
        if key in seen:
            continue
        seen.add(key)
        kept.append(comment)
    return Dataset(tuple(kept), dataset.provenance)


# ---------------------------------------------------------------------------
# comment mining
# ---------------------------------------------------------------------------

@dataclass
class _RawComment:
    offset: int       # character offset of the comment opener in the file
    line: int         # 1-based line of the opener
    col: int          # 0-based column of the opener
    kind: str         # "line" or "block"
    text: str         # marker-free text
    whole_line: bool  # nothing but whitespace before the opener
    indent: int       # opener column, used for merging whole-line runs


def _scan_java(source: str) -> list[_RawComment]:
    """Single pass over one file, honoring string and char literals."""
    comments: list[_RawComment] = []
    i = 0
    n = len(source)
    line = 1
    col = 0
    line_start = 0

    def advance(k: int) -> None:
        nonlocal i, line, col, line_start
        for _ in range(k):
            if i < n and source[i] == "\n":
                line += 1
                col = 0
                line_start = i + 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = source[i]
        nxt = source[i + 1] if i + 1 < n else ""
        if ch == '"' or ch == "'":
            quote = ch
            advance(1)
            while i < n and source[i] != quote:
                advance(2 if source[i] == "\\" else 1)
            advance(1)
        elif ch == "/" and nxt == "/":
            start, start_line, start_col = i, line, col
            whole = source[line_start:i].strip() == ""
            advance(2)
            text_start = i
            while i < n and source[i] != "\n":
                advance(1)
            comments.append(_RawComment(
                offset=start, line=start_line, col=start_col, kind="line",
                text=source[text_start:i], whole_line=whole, indent=start_col,
            ))
        elif ch == "/" and nxt == "*":
            start, start_line, start_col = i, line, col
            advance(2)
            text_start = i
            while i + 1 < n and not (source[i] == "*" and source[i + 1] == "/"):
                advance(1)
            body = source[text_start:i] if i + 1 < n else source[text_start:]
            advance(2)
            comments.append(_RawComment(
                offset=start, line=start_line, col=start_col, kind="block",
                text=body, whole_line=False, indent=start_col,
            ))
        else:
            advance(1)
    return comments


def _strip_block_body(body: str) -> str:
    """Remove doc-comment furniture: leading * on each line, outer blanks."""
    lines = []
    for raw in body.split("\n"):
        stripped = raw.strip()
        if stripped.startswith("*"):
            stripped = stripped[1:].strip()
        if stripped:
            lines.append(stripped)
    return "\n".join(lines)


def _merge_line_runs(raw: list[_RawComment]) -> list[_RawComment]:
    """Merge consecutive whole-line // comments at equal indentation."""
    merged: list[_RawComment] = []
    for comment in raw:
        prev = merged[-1] if merged else None
        if (
            prev is not None
            and comment.kind == "line" and prev.kind == "line"
            and comment.whole_line and prev.whole_line
            and comment.indent == prev.indent
            and comment.line == prev.line + prev.text.count("\n") + 1
        ):
            prev.text = prev.text + "\n" + comment.text
            continue
        merged.append(_RawComment(**vars(comment)))
    return merged


def _clean_comment_text(raw: _RawComment) -> str:
    if raw.kind == "block":
        return _strip_block_body(raw.text)
    lines = [ln.strip() for ln in raw.text.split("\n")]
    return "\n".join(ln for ln in lines if ln)


DEFAULT_EXTENSIONS = (".java",)


def mine_comments(root: str, extensions=DEFAULT_EXTENSIONS) -> Dataset:
    """Extract comments from every matching file under root.

    Labels are a NotOnHold placeholder; mined datasets are inference input,
    not training data. Files that fail UTF-8 decoding are skipped and listed
    in the dataset provenance. Output order is (path, offset), so repeated
    runs over the same tree are identical.
    """
    root_path = Path(root)
    if not root_path.is_dir():
        raise IoError(str(root), "not a readable directory")
    project = root_path.resolve().name
    files = sorted(
        p for p in root_path.rglob("*")
        if p.is_file() and p.suffix in set(extensions)
    )
    comments: list[Comment] = []
    skipped: list[str] = []
    for path in files:
        rel = path.relative_to(root_path).as_posix()
        try:
            source = path.read_text(encoding="utf-8")
        except UnicodeDecodeError:
            skipped.append(rel)
            continue
        except OSError as exc:
            raise IoError(str(path), str(exc)) from exc
        raw = _merge_line_runs(_scan_java(source))
        for item in raw:
            text = _clean_comment_text(item)
            if not text.strip():
                continue
            comment_id = f"{rel}:{item.line}:{item.col}"
            comments.append(Comment(comment_id, project, text, Label.NOT_ON_HOLD))
    provenance = Provenance(str(root), _now(), tuple(skipped))
    return Dataset(tuple(comments), provenance)
