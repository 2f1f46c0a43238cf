"""Processing a parsed source file declaration by declaration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .. import kernel as K
from .. import syntax as S
from .parser import CheckDecl, DefDecl, FlagDecl, InterpDecl, NormalizeDecl, ParseError, RawDecl, parse
from .printer import pretty
from .report import ERROR, EXPECTED, OK, Record, Report


@dataclass
class Settings:
    flags: K.TheoryFlags = K.TheoryFlags()
    prelude: bool = False
    fuel: Optional[int] = None
    budget: int = 64
    inner_budget: int = 16
    dim: int = 2
    search_budget: int = 20_000


class Session:
    """Mutable state threaded through one file: environment and named simplicial objects."""

    def __init__(self, settings: Settings = Settings()):
        self.settings = settings
        self.env = K.load_prelude(settings.flags) if settings.prelude else K.Environment((), settings.flags)
        self.ssets = {}
        self.smaps = {}
        self._universe = None

    @property
    def universe(self):
        if self._universe is None:
            from ..setmodel import build_set_universe

            self._universe = build_set_universe(self.settings.budget, self.settings.inner_budget)
        return self._universe

    # -- dispatch ---------------------------------------------------------
    def run_decl(self, decl) -> Record:
        try:
            rec = self._run(decl)
        except K.KernelError as e:
            rec = Record(decl.label, decl.kind, ERROR, e.as_dict())
        except Exception as e:  # every declaration yields a record
            rec = Record(decl.label, decl.kind, ERROR, {"error": type(e).__name__, "message": str(e)})
        rec.detail["span"] = f"{decl.line}:{decl.col}"
        return self._against_expectation(decl, rec)

    def _against_expectation(self, decl, rec: Record) -> Record:
        if not decl.expect:
            return rec
        want = decl.expect.split()
        if want[0] != "error":
            return rec
        kind = want[1] if len(want) > 1 else None
        if rec.status == ERROR and (kind is None or rec.detail.get("error") == kind):
            rec.status = EXPECTED
        elif rec.status == ERROR:
            rec.detail["expected"] = decl.expect
        else:
            rec.status = ERROR
            rec.detail["expected"] = decl.expect
            rec.detail["message"] = "declaration was expected to fail but succeeded"
        return rec

    def _run(self, decl) -> Record:
        fuel = self.settings.fuel
        if isinstance(decl, DefDecl):
            d = K.Definition(decl.name, decl.params, decl.type, decl.body)
            self.env = K.add_definition(self.env, d, fuel)
            kind = "axiom" if decl.kind == "axiom" else ("family" if d.is_family else "def")
            return Record(decl.label, decl.kind, OK, {"type": pretty(decl.type), "as": kind})
        if isinstance(decl, CheckDecl):
            K.check(self.env, S.Context(), decl.term, decl.type, fuel)
            return Record(decl.label, decl.kind, OK, {"term": pretty(decl.term), "type": pretty(decl.type)})
        if isinstance(decl, NormalizeDecl):
            ty = K.infer(self.env, S.Context(), decl.term, fuel)
            nf = K.normalize(self.env, S.Context(), decl.term, fuel)
            return Record(decl.label, decl.kind, OK, {"normal_form": pretty(nf), "type": pretty(ty)})
        if isinstance(decl, FlagDecl):
            return self._flag(decl)
        if isinstance(decl, InterpDecl):
            from ..setmodel.interpret import describe_definition

            detail = describe_definition(self.env, decl.name, self.universe)
            return Record(decl.label, decl.kind, OK, detail)
        if isinstance(decl, RawDecl):
            from .simplicial_cmds import run_simplicial

            return run_simplicial(self, decl)
        raise TypeError(f"unknown declaration {decl!r}")

    def _flag(self, decl: FlagDecl) -> Record:
        field = {"eta": "eta_pi", "funext": "funext", "univalence": "univalence_axiom"}[decl.flag]
        flags = self.env.flags.with_(**{field: decl.value})
        self.env = self.env.with_flags(flags)
        detail = {"flag": decl.flag, "value": "on" if decl.value else "off"}
        if field == "univalence_axiom" and decl.value and "uvt" not in self.env:
            if "isUnivalent" not in self.env:
                raise K.UnboundVariable("univalence needs the prelude (isUnivalent is not defined)")
            from ..kernel.prelude import UVT_SOURCE

            (d,) = parse(UVT_SOURCE).decls
            self.env = K.add_definition(self.env, K.Definition(d.name, d.params, d.type, None))
            detail["added"] = "uvt"
        return Record(decl.label, decl.kind, OK, detail)


def run_source(text: str, name: str = "<input>", settings: Settings = Settings()) -> Report:
    report = Report(name)
    try:
        src = parse(text)
    except ParseError as e:
        report.add(
            Record(
                f"parse {name}",
                "parse",
                ERROR,
                {"error": "ParseError", "message": str(e), "span": f"{e.line}:{e.col}", "expected": e.expected},
            )
        )
        return report
    session = Session(settings)
    for decl in src.decls:
        report.add(session.run_decl(decl))
    return report
