"""Cayley-table and Rees-matrix text files."""
from __future__ import annotations

import os
import sys
from typing import Optional

from .corpus import CorpusEntry, builtin, builtin_rees
from .errors import FormatError
from .groups import builtin_group
from .rees import ReesStructure, build_rees
from .semigroup import FiniteSemigroup, make_semigroup


def _records(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((lineno, s.split()))
    return out


def _expect(rec, keyword: str, nargs: Optional[int] = 1) -> list[str]:
    lineno, toks = rec
    if toks[0] != keyword:
        raise FormatError(f"line {lineno}: expected {keyword!r}, found {toks[0]!r}")
    if nargs is not None and len(toks) != nargs + 1:
        raise FormatError(f"line {lineno}: {keyword!r} takes {nargs} argument(s)")
    return toks[1:]


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: {tok!r} is not an integer") from None


def parse_cayley(text: str) -> FiniteSemigroup:
    recs = _records(text)
    if len(recs) < 3:
        raise FormatError("file is too short for a Cayley table")
    (name,) = _expect(recs[0], "semigroup")
    (n_tok,) = _expect(recs[1], "order")
    n = _int(n_tok, recs[1][0])
    if n < 1:
        raise FormatError("order must be positive")
    k = 2
    labels = None
    if recs[k][1][0] == "elements":
        labels = _expect(recs[k], "elements", n)
        k += 1
    if k >= len(recs):
        raise FormatError("missing 'table' line")
    _expect(recs[k], "table", 0)
    rows = recs[k + 1:]
    if len(rows) != n:
        raise FormatError(f"expected {n} table rows, found {len(rows)}")
    table = []
    for lineno, toks in rows:
        if len(toks) != n:
            raise FormatError(f"line {lineno}: expected {n} entries, found {len(toks)}")
        table.append([_int(t, lineno) for t in toks])
    try:
        return make_semigroup(table, labels, name)
    except IndexError as exc:
        raise FormatError(str(exc)) from None


def _token(s: str) -> str:
    return "_".join(s.split()) or "unnamed"


def emit_cayley(S: FiniteSemigroup) -> str:
    lines = [f"semigroup {_token(S.name)}", f"order {S.order}"]
    if S.labels and all(lab and len(lab.split()) == 1 for lab in S.labels):
        lines.append("elements " + " ".join(S.labels))
    lines.append("table")
    lines.extend(" ".join(map(str, row)) for row in S.table)
    return "\n".join(lines) + "\n"


def parse_rees(text: str, base_dir: str = ".") -> ReesStructure:
    recs = _records(text)
    if len(recs) < 5:
        raise FormatError("file is too short for a Rees structure")
    lineno, head = recs[0]
    if head[0] not in ("rees0", "rees") or len(head) != 2:
        raise FormatError(f"line {lineno}: expected 'rees0 <name>' or 'rees <name>'")
    has_zero = head[0] == "rees0"
    (gname,) = _expect(recs[1], "group")
    G = builtin_group(gname)
    if G is None:
        path = gname if os.path.isabs(gname) else os.path.join(base_dir, gname)
        try:
            with open(path, encoding="utf-8") as fh:
                G = parse_cayley(fh.read())
        except OSError:
            raise FormatError(f"group {gname!r} is neither a builtin nor a readable file") from None
        if not G.is_group():
            raise FormatError(f"{gname!r} is not a group")
    m = _int(_expect(recs[2], "rows")[0], recs[2][0])
    n = _int(_expect(recs[3], "cols")[0], recs[3][0])
    _expect(recs[4], "P", 0)
    rows = recs[5:]
    if len(rows) != m:
        raise FormatError(f"expected {m} matrix rows, found {len(rows)}")
    P = []
    for lineno, toks in rows:
        if len(toks) != n:
            raise FormatError(f"line {lineno}: expected {n} entries, found {len(toks)}")
        row = []
        for t in toks:
            if t == ".":
                if not has_zero:
                    raise FormatError(f"line {lineno}: θ entry in a 'rees' file without zero")
                row.append(None)
                continue
            v = _int(t, lineno)
            if not 0 <= v < G.order:
                raise FormatError(f"line {lineno}: {v} is not an element of the group")
            row.append(v)
        P.append(tuple(row))
    return ReesStructure(G, n, m, tuple(P), has_zero, head[1])


def emit_rees(r: ReesStructure) -> str:
    if builtin_group(r.group.name or "") is None:
        raise ValueError("only Rees structures over builtin groups can be written")
    lines = [f"{'rees0' if r.has_zero else 'rees'} {_token(r.name)}", f"group {r.group.name}",
             f"rows {r.m}", f"cols {r.n}", "P"]
    lines.extend(" ".join("." if v is None else str(v) for v in row) for row in r.P)
    return "\n".join(lines) + "\n"


def parse_any(text: str, base_dir: str = ".", default_name: str = "") -> CorpusEntry:
    """Parse either format; Rees files are built into their semigroup."""
    recs = _records(text)
    if not recs:
        raise FormatError("empty input")
    if recs[0][1][0] in ("rees0", "rees"):
        r = parse_rees(text, base_dir)
        S = build_rees(r)
        return CorpusEntry(r.name or default_name, FiniteSemigroup(S.table, S.labels, r.name),
                           "file", rees=r)
    S = parse_cayley(text)
    return CorpusEntry(S.name or default_name, S, "file")


def load(path: str, stdin=None) -> CorpusEntry:
    """Read a file, or standard input for ``-``."""
    if path == "-":
        text = (stdin or sys.stdin).read()
        return parse_any(text, ".", "stdin")
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_any(text, os.path.dirname(path) or ".", os.path.basename(path))


def builtin_entry(name: str) -> CorpusEntry:
    return CorpusEntry(name, builtin(name), "builtin", rees=builtin_rees(name))
