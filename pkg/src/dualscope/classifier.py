"""Hyperbolicity gates for the complements P^2 \\ C and P^2 \\ (C u L_C).

Each target gets a Judgment: a verdict plus the ordered trail of gates that
were evaluated.  Negative gates (nodal curves, low degree) run first; the
positive gates then follow the genus, the contact condition on C* and the
monomiality dispatch at a cusp of C*.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .branches import Inventory, artifacts, build_inventory, regular_hyperbolic
from .ratcurves import (
    ImproperParametrization,
    InconsistentInventory,
    ParamCurve,
    class_degree,
    dualize,
    validate_proper,
)
from .zariski import SolverLimit, build_frame, meets_S, monomiality_class


class Verdict(str, Enum):
    C_HYPERBOLIC = "CHyperbolic"
    ALMOST_C_HYPERBOLIC = "AlmostCHyperbolic"
    ALMOST_MODULO_LINE = "AlmostCHyperbolicModuloLine"
    DEGENERATE_ALONG_PENCIL = "DegenerateAlongPencil"
    SUPER_LIOUVILLE = "SuperLiouville"
    NOT_KOBAYASHI_HYPERBOLIC = "NotKobayashiHyperbolic"
    NOT_C_HYPERBOLIC = "NotCHyperbolic"
    UNDETERMINED = "Undetermined"


TARGET_C = "complement-of-C"
TARGET_CL = "complement-of-C-and-artifacts"

POSITIVE = (Verdict.C_HYPERBOLIC, Verdict.ALMOST_C_HYPERBOLIC)
NEGATIVE = (Verdict.SUPER_LIOUVILLE, Verdict.NOT_KOBAYASHI_HYPERBOLIC, Verdict.NOT_C_HYPERBOLIC)

# stronger verdicts win when several positive gates fire
_RANK = {
    Verdict.C_HYPERBOLIC: 5,
    Verdict.ALMOST_C_HYPERBOLIC: 4,
    Verdict.ALMOST_MODULO_LINE: 3,
    Verdict.DEGENERATE_ALONG_PENCIL: 2,
    Verdict.UNDETERMINED: 0,
}

CITE = {
    "nodal": "complement of a nodal curve has abelian fundamental group (Deligne-Fulton); "
    "abelian covering groups make every covering Liouville (Lin)",
    "degree-at-most-4": "lines through singular points or bitangents meet a curve of degree <= 4 in at most "
    "two points, giving entire curves in the complement; the fundamental group is almost abelian",
    "degree-5": "the least degree of an irreducible curve with C-hyperbolic complement is 6",
    "artifacts-empty": "L_C consists of the dual lines of the cusps of C*; an immersed C* has none",
    "genus-at-least-1": "for genus >= 1 the Zariski embedding maps the complement of C u L_C injectively "
    "into a C-hyperbolic quotient of the n-th power of the normalization of C*",
    "dual-immersed": "when C* is immersed L_C is empty and the genus >= 1 argument applies to P^2 \\ C, "
    "which is then also Kobayashi complete hyperbolic and hyperbolically embedded",
    "contact-condition": "every branch of C* with tangential contact <= n-2 keeps P^2_C off the tangent "
    "developable S; the complement is then almost C-hyperbolic",
    "no-quasi-monomial-axis": "C* has a cusp and P^2_C contains no pair of forms supported on one pair of "
    "points: the complement is almost C-hyperbolic",
    "quasi-monomial-non-exceptional": "C* has a cusp and is quasi-monomial, but some cusp normalization "
    "avoids the patterns (1 : t^n : g), (t : t^n : g): almost C-hyperbolic",
    "quasi-monomial-exceptional": "every cusp normalization lands on (1 : t^n : g) or (t : t^n : g): "
    "almost C-hyperbolic modulo the preimage of the coordinate axis",
    "monomial-pencil": "C* is projectively monomial: every entire curve in the complement lies in one "
    "curve of the pencil alpha*X^p = beta*Y^q*Z^r",
    "regular-locus-hyperbolic": "if reg of the removed curve is hyperbolic and the complement is Brody "
    "hyperbolic, the complement is Kobayashi complete hyperbolic and hyperbolically embedded",
}


# declared input ------------------------------------------------------------

@dataclass(frozen=True)
class DeclaredInventory:
    """Numerical data for a curve given without a parametrization (any genus)."""

    d: int
    g: int
    mults: tuple = ()  # multiplicities m_A of the singular branches of C
    immersed_dual: bool = False
    nodal: bool = False
    irreducible: bool = True
    n: int | None = None  # declared degree of C*
    dual_mults: tuple | None = None  # multiplicities of the singular branches of C*
    tangents_meet_twice: bool | None = None  # every tangent line of C* meets C* in two points

    def validate(self) -> int:
        """Check the class formula and the flags; returns deg C*."""
        if self.d < 1 or self.g < 0:
            raise InconsistentInventory("need d >= 1 and g >= 0")
        if 2 * self.g > (self.d - 1) * (self.d - 2):
            raise InconsistentInventory(f"genus {self.g} exceeds (d-1)(d-2)/2 for d = {self.d}")
        if any(m < 2 for m in self.mults):
            raise InconsistentInventory("singular branches have multiplicity >= 2")
        if self.nodal and self.mults:
            raise InconsistentInventory("a nodal curve has no singular branches")
        if self.immersed_dual and self.dual_mults:
            raise InconsistentInventory("an immersed dual has no singular branches")
        n = class_degree(self.d, self.g, self.mults)
        if self.n is not None and self.n != n:
            raise InconsistentInventory(
                f"class formula 2(g+d-1) - sum(m_A-1) = {n} but deg C* = {self.n} was declared"
            )
        if self.n is not None and self.n >= 3 and n < 3:
            raise InconsistentInventory(f"class formula gives {n} < 3")
        return n

    @staticmethod
    def from_json(obj: dict) -> "DeclaredInventory":
        known = {
            "d", "g", "mults", "immersed_dual", "nodal", "irreducible", "n", "dual_mults", "tangents_meet_twice",
        }
        extra = set(obj) - known
        if extra:
            raise ValueError(f"unknown inventory fields: {sorted(extra)}")
        data = dict(obj)
        data["mults"] = tuple(int(m) for m in data.get("mults", ()))
        if data.get("dual_mults") is not None:
            data["dual_mults"] = tuple(int(m) for m in data["dual_mults"])
        return DeclaredInventory(**data)

    def to_json(self) -> dict:
        out = {
            "d": self.d,
            "g": self.g,
            "mults": list(self.mults),
            "immersed_dual": self.immersed_dual,
            "nodal": self.nodal,
            "irreducible": self.irreducible,
        }
        if self.n is not None:
            out["n"] = self.n
        if self.dual_mults is not None:
            out["dual_mults"] = list(self.dual_mults)
        if self.tangents_meet_twice is not None:
            out["tangents_meet_twice"] = self.tangents_meet_twice
        return out


# judgments -----------------------------------------------------------------

@dataclass(frozen=True)
class Gate:
    name: str
    satisfied: bool
    evidence: object
    citation: str

    def to_json(self) -> dict:
        return {"name": self.name, "satisfied": self.satisfied, "evidence": self.evidence, "citation": self.citation}


@dataclass(frozen=True)
class Judgment:
    target: str
    verdict: Verdict
    kobayashi_upgrade: bool
    gates: tuple
    detail: dict | None = None  # the pencil, the leftover line, or the failed hypotheses
    notes: tuple = ()  # further verdicts established on the way (e.g. SuperLiouville)

    def gate(self, name: str) -> Gate | None:
        return next((g for g in self.gates if g.name == name), None)

    def fired(self) -> list:
        return [g.name for g in self.gates if g.satisfied]

    def to_json(self) -> dict:
        out = {
            "target": self.target,
            "verdict": self.verdict.value,
            "kobayashi_upgrade": self.kobayashi_upgrade,
            "gates": [g.to_json() for g in self.gates],
        }
        if self.detail is not None:
            out["detail"] = self.detail
        if self.notes:
            out["notes"] = [v.value for v in self.notes]
        return out


@dataclass
class _Facts:
    d: int
    g: int
    n: int | None
    irreducible: bool
    nodal: bool
    immersed_dual: bool
    lines: list = field(default_factory=list)
    curve: ParamCurve | None = None
    inventory: Inventory | None = None
    frame: object = None
    _smeet: object = None

    @property
    def lc_empty(self) -> bool:
        return self.immersed_dual

    def s_meeting(self):
        if self._smeet is None and self.frame is not None:
            self._smeet = meets_S(self.frame)
        return self._smeet


def _facts(obj, role: str) -> _Facts:
    if isinstance(obj, DeclaredInventory):
        n = obj.validate()
        return _Facts(obj.d, obj.g, n, obj.irreducible, obj.nodal, obj.immersed_dual)
    if not isinstance(obj, ParamCurve):
        raise TypeError("classify expects a ParamCurve or a DeclaredInventory")
    if role not in ("primal", "dual"):
        raise ValueError("role must be 'primal' or 'dual'")
    k = validate_proper(obj)
    if k != 1:
        raise ImproperParametrization(k)
    if role == "dual":
        nu, C = obj, dualize(obj)
    else:
        C = obj
        nu = dualize(C)
    inv = build_inventory(C)
    lines = artifacts(C)
    return _Facts(
        d=C.n,
        g=0,
        n=nu.n,
        irreducible=True,
        nodal=inv.nodal,
        immersed_dual=not lines,
        lines=lines,
        curve=C,
        inventory=inv,
        frame=build_frame(nu),
    )


def _negatives(f: _Facts):
    """Gates that rule out C-hyperbolicity of P^2 \\ C; returns (verdict or None, gates, notes)."""
    gates = []
    found = []
    if not f.irreducible:
        gates.append(Gate("irreducible", False, {"irreducible": False}, "the negative gates need C irreducible"))
        return None, gates, ()
    ev = {"nodal": f.nodal}
    if f.inventory is not None:
        ev.update(delta=f.inventory.delta, kappa=f.inventory.kappa)
    gates.append(Gate("nodal", f.nodal, ev, CITE["nodal"]))
    if f.nodal:
        found.append(Verdict.SUPER_LIOUVILLE)
    low = f.d <= 4
    gates.append(Gate("degree-at-most-4", low, {"d": f.d}, CITE["degree-at-most-4"]))
    if low:
        found += [Verdict.NOT_KOBAYASHI_HYPERBOLIC, Verdict.SUPER_LIOUVILLE]
    gates.append(Gate("degree-5", f.d == 5, {"d": f.d}, CITE["degree-5"]))
    if f.d == 5:
        found.append(Verdict.NOT_C_HYPERBOLIC)
    if not found:
        return None, gates, ()
    found = list(dict.fromkeys(found))
    return found[0], gates, tuple(found[1:])


def _upgrade_gate(f: _Facts, lines) -> Gate:
    if f.curve is None:
        return Gate("regular-locus-hyperbolic", False, "needs a parametrization", CITE["regular-locus-hyperbolic"])
    chk = regular_hyperbolic(f.curve, lines, f.inventory)
    return Gate("regular-locus-hyperbolic", chk.hyperbolic, chk.to_json(), CITE["regular-locus-hyperbolic"])


def _contact_gate(f: _Facts) -> Gate:
    sm = f.s_meeting()
    if sm is None:
        return Gate("contact-condition", False, "needs a parametrization of C*", CITE["contact-condition"])
    return Gate("contact-condition", not sm.meets, sm.to_json(), CITE["contact-condition"])


def _undetermined(target, gates, f: _Facts) -> Judgment:
    failed = [g.name for g in gates if not g.satisfied]
    detail = {"failed": failed}
    sm = f.s_meeting()
    if "contact-condition" in failed and sm is not None and sm.witness is not None:
        detail["witness"] = sm.witness.to_json()
    return Judgment(target, Verdict.UNDETERMINED, False, tuple(gates), detail)


def _judge_c(f: _Facts) -> Judgment:
    verdict, gates, notes = _negatives(f)
    if verdict is not None:
        return Judgment(TARGET_C, verdict, False, tuple(gates), None, notes)
    imm = Gate("dual-immersed", f.immersed_dual, {"immersed_dual": f.immersed_dual}, CITE["dual-immersed"])
    if f.g >= 1:
        gates.append(Gate("genus-at-least-1", True, {"g": f.g}, CITE["genus-at-least-1"]))
        gates.append(imm)
        if f.immersed_dual:
            return Judgment(TARGET_C, Verdict.C_HYPERBOLIC, True, tuple(gates))
        return _undetermined(TARGET_C, gates, f)
    gates.append(Gate("genus-at-least-1", False, {"g": f.g}, CITE["genus-at-least-1"]))
    gates.append(imm)
    cond = _contact_gate(f)
    gates.append(cond)
    if not (f.immersed_dual and cond.satisfied):
        return _undetermined(TARGET_C, gates, f)
    up = _upgrade_gate(f, ())
    gates.append(up)
    return Judgment(TARGET_C, Verdict.ALMOST_C_HYPERBOLIC, up.satisfied, tuple(gates))


def _cusp_dispatch(f: _Facts):
    """Gate and candidate verdict from the monomiality class of C*."""
    try:
        mc = monomiality_class(f.frame)
    except SolverLimit as exc:
        return Gate("cusp-monomiality", False, {"skipped": str(exc)}, CITE["no-quasi-monomial-axis"]), None, None
    ev = mc.to_json()
    if mc.tag == "None":
        return Gate("no-quasi-monomial-axis", True, ev, CITE["no-quasi-monomial-axis"]), Verdict.ALMOST_C_HYPERBOLIC, None
    if mc.tag == "Monomial":
        detail = {"pencil": mc.pencil}
        return Gate("monomial-pencil", True, ev, CITE["monomial-pencil"]), Verdict.DEGENERATE_ALONG_PENCIL, detail
    if mc.exceptional is False:
        g = Gate("quasi-monomial-non-exceptional", True, ev, CITE["quasi-monomial-non-exceptional"])
        return g, Verdict.ALMOST_C_HYPERBOLIC, None
    if mc.exceptional:
        detail = {"line": ev["line"], "pattern": mc.pattern}
        g = Gate("quasi-monomial-exceptional", True, ev, CITE["quasi-monomial-exceptional"])
        return g, Verdict.ALMOST_MODULO_LINE, detail
    # quasi-monomial along a positive-dimensional family only: no normal form to compare against
    return Gate("quasi-monomial-non-exceptional", False, ev, CITE["quasi-monomial-non-exceptional"]), None, None


def _judge_cl(f: _Facts, jc: Judgment) -> Judgment:
    if f.lc_empty:
        same = Gate("artifacts-empty", True, {"artifact_lines": 0}, CITE["artifacts-empty"])
        return Judgment(TARGET_CL, jc.verdict, jc.kobayashi_upgrade, (same,) + jc.gates, jc.detail, jc.notes)
    ev = {"artifact_lines": sum(ln.conjugates for ln in f.lines)} if f.lines else {"artifact_lines": "nonempty"}
    gates = [Gate("artifacts-empty", False, ev, CITE["artifacts-empty"])]
    if f.g >= 1:
        gates.append(Gate("genus-at-least-1", True, {"g": f.g}, CITE["genus-at-least-1"]))
        return Judgment(TARGET_CL, Verdict.C_HYPERBOLIC, False, tuple(gates))
    gates.append(Gate("genus-at-least-1", False, {"g": f.g}, CITE["genus-at-least-1"]))
    cands = []
    cond = _contact_gate(f)
    gates.append(cond)
    if cond.satisfied:
        cands.append((Verdict.ALMOST_C_HYPERBOLIC, None))
    if f.frame is not None:
        g, v, detail = _cusp_dispatch(f)
        gates.append(g)
        if v is not None:
            cands.append((v, detail))
    if not cands:
        return _undetermined(TARGET_CL, gates, f)
    verdict, detail = max(cands, key=lambda c: _RANK[c[0]])
    upgrade = False
    if verdict in POSITIVE:
        up = _upgrade_gate(f, f.lines)
        gates.append(up)
        upgrade = up.satisfied
    return Judgment(TARGET_CL, verdict, upgrade, tuple(gates), detail)


def _check(j: Judgment, f: _Facts) -> None:
    if j.verdict in POSITIVE:
        assert not set(j.notes) & set(NEGATIVE), "C-hyperbolicity verdict next to a negative one"
        assert any(g.satisfied and g.name not in ("artifacts-empty", "regular-locus-hyperbolic") for g in j.gates)
    if j.target == TARGET_C and f.irreducible and f.d <= 5:
        assert j.verdict is not Verdict.C_HYPERBOLIC, "degree <= 5 cannot have a C-hyperbolic complement"
    if j.kobayashi_upgrade:
        assert j.verdict in POSITIVE


def classify(obj, role: str = "primal") -> tuple:
    """(judgment for P^2 \\ C, judgment for P^2 \\ (C u L_C)).

    ``obj`` is a ParamCurve, read as C or as C* according to ``role``, or a
    DeclaredInventory.
    """
    f = _facts(obj, role)
    jc = _judge_c(f)
    jcl = _judge_cl(f, jc)
    for j in (jc, jcl):
        _check(j, f)
    return jc, jcl


# the metric criterion ------------------------------------------------------

@dataclass(frozen=True)
class GPCheck:
    a: bool  # genus >= 2
    b: bool | None  # every tangent line of C* meets C* in at least two points
    c: bool | None  # sum (m*_i - 1) < 2g - 2

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c)

    def to_json(self) -> dict:
        return {"genus_at_least_2": self.a, "tangents_meet_twice": self.b, "dual_branch_inequality": self.c}


def gp_metric_check(obj) -> GPCheck:
    """The three hypotheses of the negatively curved metric criterion; informational only.

    A parametrized curve is rational, so (a) fails and the other two are
    not evaluated.
    """
    if isinstance(obj, ParamCurve):
        return GPCheck(False, None, None)
    obj.validate()
    if obj.g < 2:
        return GPCheck(False, None, None)
    dm = () if obj.immersed_dual else obj.dual_mults
    c = None if dm is None else sum(m - 1 for m in dm) < 2 * obj.g - 2
    return GPCheck(True, obj.tangents_meet_twice, c)


# certificates --------------------------------------------------------------

def render_certificate(j: Judgment, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(j.to_json(), sort_keys=True, indent=2)
    if fmt != "text":
        raise ValueError("format must be 'json' or 'text'")
    up = " (Kobayashi complete hyperbolic, hyperbolically embedded)" if j.kobayashi_upgrade else ""
    lines = [f"{j.target}: {j.verdict.value}{up}"]
    if j.notes:
        lines.append("  also: " + ", ".join(v.value for v in j.notes))
    for g in j.gates:
        mark = "+" if g.satisfied else "-"
        lines.append(f"  [{mark}] {g.name}: {json.dumps(g.evidence, sort_keys=True)}")
        lines.append(f"      {g.citation}")
    if j.detail is not None:
        lines.append("  detail: " + json.dumps(j.detail, sort_keys=True))
    return "\n".join(lines) + "\n"
