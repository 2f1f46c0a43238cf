"""The simplicial statements of a source file.

::

    sset T = discrete(2)
    sset C                      -- a block in the text format
    simplex v dim=0 faces=
    simplex a dim=1 faces=v,v
    end
    smap f : T -> T = id
    univalent f --dim 2 --expect no
"""

from __future__ import annotations

import re
import shlex

from ..simplicial import constructions as SC
from ..simplicial import generators as G
from ..simplicial.core import FinSSet, fin_map
from ..simplicial.homology import pi0
from ..simplicial.kan import is_kan_fibration, is_trivial_fibration
from ..simplicial.text import id_name, parse_map, parse_sset
from .report import ERROR, OK, Record


class CommandError(ValueError):
    pass


def _body(lines):
    out = []
    for line in lines[1:]:
        text = line.strip()
        if text and not text.startswith("--"):
            out.append(text)
    return "\n".join(out) + "\n"


def _renamed(X: FinSSet) -> FinSSet:
    """Give generated simplices text-friendly string ids."""
    names = {sid: id_name(sid) if isinstance(sid, (str, tuple)) else str(sid) for sid in X.simplices}
    return FinSSet(
        {names[s]: (m, tuple((names[f], w) for f, w in faces)) for s, (m, faces) in X.simplices.items()},
        name=X.name,
        validate=False,
    )


def _generator(session, spec: str) -> FinSSet:
    spec = spec.strip()
    if spec == "point":
        return _renamed(G.point())
    m = re.fullmatch(r"(\w+)\s*\((.*)\)", spec)
    if not m:
        raise CommandError(f"unknown simplicial set expression {spec!r}")
    kind, args = m.group(1), [a.strip() for a in m.group(2).split(",") if a.strip()]
    if kind == "product":
        X, Y = (_sset(session, a) for a in args)
        return _renamed(G.product(X, Y))
    builders = {"delta": G.delta, "horn": G.horn, "boundary": G.boundary, "discrete": G.discrete}
    if kind not in builders:
        raise CommandError(f"unknown generator {kind!r}")
    return _renamed(builders[kind](*map(int, args)))


def _sset(session, name):
    if name in session.ssets:
        return session.ssets[name]
    raise CommandError(f"no simplicial set named {name!r}")


def _smap(session, name):
    if name in session.smaps:
        return session.smaps[name]
    raise CommandError(f"no simplicial map named {name!r}")


def _options(words):
    """Split ``--dim 2 --budget 50 --expect no`` off a command line."""
    args, opts = [], {}
    it = iter(words)
    for w in it:
        if w.startswith("--"):
            opts[w[2:]] = next(it, None)
        else:
            args.append(w)
    return args, opts


def _to_point(X: FinSSet, P: FinSSet):
    (v,) = P.ids(0) if len(P.ids(0)) == 1 else (None,)
    if v is None or P.top_dim != 0:
        raise CommandError("terminal maps need a one-point target")
    return fin_map(X, P, {s: (v, (0,) * (X.dim(s) + 1)) for s in X.ids()})


def _define_sset(session, decl, words):
    name = words[1]
    if "=" in words:
        X = _generator(session, " ".join(words[words.index("=") + 1:]))
    else:
        X = parse_sset(_body(decl.lines), name)
    X.name = name
    session.ssets[name] = X
    counts = [len(X.ids(m)) for m in range(X.top_dim + 1)]
    return {"name": name, "nondegenerate": counts}


def _define_smap(session, decl, words):
    head = " ".join(words)
    m = re.fullmatch(r"smap\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)(?:\s*=\s*(\S+))?", head)
    if not m:
        raise CommandError("expected `smap NAME : SRC -> TGT [= id|incl|terminal]`")
    name, src, tgt, how = m.groups()
    X, Y = _sset(session, src), _sset(session, tgt)
    if how is None:
        f = parse_map(_body(decl.lines), X, Y, name)
    elif how == "id":
        if X is not Y:
            raise CommandError("`id` needs the same source and target")
        f = fin_map(X, X, {s: X.element(s) for s in X.ids()}, name)
    elif how == "incl":
        f = G.inclusion(X, Y)
    elif how == "terminal":
        f = _to_point(X, Y)
    else:
        raise CommandError(f"unknown map former {how!r}")
    session.smaps[name] = f
    return {"name": name, "source": src, "target": tgt}


def _verdict_record(decl, verdict, d, expect, extra=None):
    detail = {"verdict": verdict.answer, "reason": verdict.reason}
    if verdict.witness is not None:
        detail["witness"] = str(verdict.witness)
    detail.update(extra or {})
    status = OK
    if expect is not None and expect != verdict.answer:
        status = ERROR
        detail["expected"] = expect
        detail["message"] = f"verdict {verdict.answer}, expected {expect}"
    return Record(decl.label, decl.kind, status, detail, cert_dim=d)


def run_simplicial(session, decl) -> Record:
    words = shlex.split(decl.lines[0], comments=False)
    words = words[: words.index("--") if "--" in words else len(words)]
    kind = words[0]
    if kind == "sset":
        return Record(decl.label, decl.kind, OK, _define_sset(session, decl, words))
    if kind == "smap":
        return Record(decl.label, decl.kind, OK, _define_smap(session, decl, words))
    args, opts = _options(words[1:])
    d = int(opts.get("dim") or session.settings.dim)
    budget = int(opts.get("budget") or session.settings.search_budget)
    expect = opts.get("expect")
    if kind in ("kan", "trivial", "univalent", "eq"):
        if len(args) != 1:
            raise CommandError(f"`{kind}` takes one map name")
        f = _smap(session, args[0])
        if kind == "kan":
            return _verdict_record(decl, is_kan_fibration(f, d), d, expect)
        if kind == "trivial":
            return _verdict_record(decl, is_trivial_fibration(f, d), d, expect)
        if kind == "univalent":
            verdict = SC.is_univalent(f, d, budget)
            return _verdict_record(decl, verdict, d, expect, dict(verdict.details))
        eq = SC.eq_self(f, d, budget)
        vertices = eq.space.level(0)
        hit = {eq.delta(0, b) for b in f.tgt.level(0)}
        detail = {"vertices": len(vertices), "diagonal_hits": len(hit), "components": pi0(eq.space)}
        return Record(decl.label, decl.kind, OK, detail, cert_dim=d)
    if kind == "repspace":
        if len(args) != 2:
            raise CommandError("`repspace` takes two map names: q p")
        q, p = (_smap(session, a) for a in args)
        rep = SC.rep_space(q, p, d, budget)
        detail = {"verdict": rep.verdict, "detail": rep.detail, "vertices": len(rep.space.level(0))}
        status = OK
        if expect is not None and expect != rep.verdict:
            status, detail["expected"] = ERROR, expect
        return Record(decl.label, decl.kind, status, detail, cert_dim=d)
    raise CommandError(f"unknown simplicial command {kind!r}")

