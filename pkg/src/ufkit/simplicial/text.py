"""Line-oriented text format for finite simplicial sets and maps.

A simplicial set is one record per nondegenerate simplex::

    simplex a dim=1 faces=v,v
    simplex t dim=2 faces=a,v!s0,a

A face is an id, optionally followed by ``!`` and a degeneracy word such as
``s1s0``.  The word lists the collapsed positions, largest first.  A map is one
record per nondegenerate simplex of its source::

    send a -> x!s0
"""

from __future__ import annotations

import re
from importlib.resources import files

from .core import BadPresentation, FinSSet, degeneracy_word, fin_map, from_degeneracy_word

_ID = r"[^\s,!]+"
_SIMPLEX = re.compile(rf"simplex ({_ID}) dim=(\d+) faces=(.*)")
_SEND = re.compile(rf"send ({_ID}) -> ({_ID})(?:!(\S+))?")
_WORD = re.compile(r"s(\d+)")


class FormatError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _records(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_word(word, lineno):
    if not word:
        return ()
    parts = _WORD.findall(word)
    if "".join(f"s{p}" for p in parts) != word:
        raise FormatError(lineno, f"bad degeneracy word {word!r}")
    js = tuple(int(p) for p in parts)
    if list(js) != sorted(set(js), reverse=True):
        raise FormatError(lineno, f"degeneracy word {word!r} is not in canonical order")
    return js


def _format_word(s):
    word = degeneracy_word(s)
    return "!" + "".join(f"s{j}" for j in word) if word else ""


def id_name(sid) -> str:
    """A printable name: strings as they are, tuples of integers joined with dots."""
    if isinstance(sid, str):
        return sid
    if isinstance(sid, tuple) and all(isinstance(v, int) for v in sid):
        return ".".join(map(str, sid))
    raise BadPresentation(f"no text name for simplex id {sid!r}")


def format_sset(X: FinSSet, names=None) -> str:
    names = names or {sid: id_name(sid) for sid in X.simplices}
    lines = []
    for sid, (m, faces) in X.simplices.items():
        shown = ",".join(names[f] + _format_word(s) for f, s in faces)
        lines.append(f"simplex {names[sid]} dim={m} faces={shown}")
    return "\n".join(lines) + "\n"


def parse_sset(text: str, name: str = "") -> FinSSet:
    raw = {}
    for lineno, line in _records(text):
        m = _SIMPLEX.fullmatch(line)
        if not m:
            raise FormatError(lineno, f"expected a simplex record, got {line!r}")
        sid, dim, faces = m.group(1), int(m.group(2)), m.group(3)
        if sid in raw:
            raise FormatError(lineno, f"duplicate simplex {sid!r}")
        parsed = []
        for face in faces.split(",") if faces else ():
            fid, _, word = face.partition("!")
            parsed.append((fid, _parse_word(word, lineno)))
        raw[sid] = (lineno, dim, parsed)
    simplices = {}
    for sid, (lineno, dim, parsed) in raw.items():
        faces = []
        for fid, word in parsed:
            if fid not in raw:
                raise FormatError(lineno, f"unknown face {fid!r}")
            s = from_degeneracy_word(word, dim - 1)
            if s[-1] != raw[fid][1]:
                raise FormatError(lineno, f"face {fid!r} has the wrong dimension")
            faces.append((fid, s))
        simplices[sid] = (dim, tuple(faces))
    return FinSSet(simplices, name=name)


def format_map(f, names_src=None, names_tgt=None) -> str:
    """Print a map out of a finite presentation (one made by :func:`fin_map`)."""
    src, tgt = f.src, f.tgt
    names_src = names_src or {sid: id_name(sid) for sid in src.simplices}
    names_tgt = names_tgt or {sid: id_name(sid) for sid in tgt.simplices}
    lines = []
    for sid in src.simplices:
        y, s = f(src.dim(sid), src.element(sid))
        lines.append(f"send {names_src[sid]} -> {names_tgt[y]}{_format_word(s)}")
    return "\n".join(lines) + "\n"


def parse_map(text: str, src: FinSSet, tgt: FinSSet, name: str = ""):
    table = {}
    for lineno, line in _records(text):
        m = _SEND.fullmatch(line)
        if not m:
            raise FormatError(lineno, f"expected a send record, got {line!r}")
        a, b, word = m.group(1), m.group(2), m.group(3) or ""
        if a not in src.simplices or b not in tgt.simplices:
            raise FormatError(lineno, f"unknown simplex in {line!r}")
        s = from_degeneracy_word(_parse_word(word, lineno), src.dim(a))
        if s[-1] != tgt.dim(b):
            raise FormatError(lineno, f"{a!r} and {b!r}{'!' + word if word else ''} differ in dimension")
        table[a] = (b, s)
    missing = [a for a in src.simplices if a not in table]
    if missing:
        raise FormatError(0, f"no image for {missing[0]!r}")
    f = fin_map(src, tgt, table, name)
    for a in src.simplices:
        n = src.dim(a)
        for i in range(n + 1) if n else ():
            if tgt.face(n, i, f(n, src.element(a))) != f(n - 1, src.face(n, i, src.element(a))):
                raise BadPresentation(f"the map does not commute with d_{i} on {a!r}")
    return f



def fixture_names(suffix: str = ".sset") -> list:
    """Names of the fixtures shipped with the package."""
    root = files("ufkit.data") / "fixtures"
    return sorted(p.name[: -len(suffix)] for p in root.iterdir() if p.name.endswith(suffix))


def fixture_text(filename: str) -> str:
    return (files("ufkit.data") / "fixtures" / filename).read_text()


def load_sset(name: str) -> FinSSet:
    """A shipped simplicial set, e.g. ``load_sset("circle")``."""
    return parse_sset(fixture_text(f"{name}.sset"), name)


def load_smap(name: str, src: FinSSet, tgt: FinSSet):
    return parse_map(fixture_text(f"{name}.smap"), src, tgt, name)
