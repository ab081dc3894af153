import json
import re
from pathlib import Path

from proxysmall.config import MAX_ARITY
from proxysmall.errors import InputFileError

IDENTIFIER_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _dangling_suffixes(words: set[str], others: set[str]) -> set[str]:
    """Suffixes w such that u + w = v for some u in ``words`` and v in ``others`` (or vice versa)."""
    result = set()
    for u in words:
        for v in others:
            if u != v and v.startswith(u):
                result.add(v[len(u):])
            if u != v and u.startswith(v):
                result.add(u[len(v):])
    return result


def is_uniquely_decodable(names: list[str]) -> bool:
    """Sardinas-Patterson test: every concatenation of names splits back in exactly one way."""
    code = set(names)
    suffixes = _dangling_suffixes(code, code)
    seen: set[frozenset] = set()
    while suffixes:
        if suffixes & code:
            return False
        key = frozenset(suffixes)
        if key in seen:
            return True
        seen.add(key)
        suffixes = _dangling_suffixes(suffixes, code)
    return True


def validate_variables(names: list[str]) -> str | None:
    """Checks a variable list for a ring file. Returns an error or None."""
    if not names:
        return "at least one variable is required"
    if len(names) > MAX_ARITY:
        return f"at most {MAX_ARITY} variables are supported, got {len(names)}"
    for name in names:
        if not IDENTIFIER_RE.match(name):
            return f"invalid variable name {name!r}"
    if len(set(names)) != len(names):
        return "variable names must be distinct"
    if not is_uniquely_decodable(names):
        return "variable names are ambiguous when juxtaposed (e.g. a, b, ab)"
    return None


def validate_span_dim(span_dim: int | None, n: int) -> str | None:
    """Checks a user-supplied lower bound s for dim span V_R(R). Returns an error or None."""
    if span_dim is None:
        return None
    if span_dim < 1:
        return "span dimension must be a positive integer"
    if span_dim > n:
        return f"span dimension {span_dim} exceeds the number of minimal generators {n}"
    return None


def parse_example_name(name: str) -> tuple[str, list[str]]:
    """Splits 'truncated:2,3' into ('truncated', ['2', '3']) and 'sr:path' into ('sr', ['path'])."""
    head, sep, tail = name.partition(":")
    if not sep:
        return head, []
    if head == "sr":
        return head, [tail]
    return head, [part.strip() for part in tail.split(",") if part.strip()]


def one_based(indices) -> str:
    """1-based set notation for 0-based indices."""
    return "{" + ", ".join(str(i + 1) for i in sorted(indices)) + "}"


def read_json_file(path) -> dict:
    """Loads a JSON document; decoding errors carry the line and column."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InputFileError(e.strerror or str(e), str(path)) from e
    except json.JSONDecodeError as e:
        raise InputFileError(e.msg, str(path), e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise InputFileError("expected a JSON object", str(path), 1, 1)
    return data
