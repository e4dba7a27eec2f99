"""Analysis reports: one JSON-ready dict per structure, emitted deterministically."""

from __future__ import annotations

import json

from .forms import AltForm, full_contract, wedge
from .g2core import identity_suite
from .ledger import IdentityLedger, vanishes
from .liegeom import codifferential
from .scalar import Scalar
from .solitons import (
    BiG2Pair,
    bi_g2_check,
    check_gradient_soliton,
    parallel_field_check,
    schrodinger_potential,
    soliton_from_lee,
)
from .spec_io import StructureSpec
from .tensor import QTensor
from .torsion import (
    G2Structure,
    characteristic_geometry,
    classify,
    closed_torsion_checks,
    identity_battery,
    symmetry_checks,
)

__all__ = ["build_report", "battery_ledger", "battery_report", "emit_report", "FORMATS"]

FORMATS = ("json", "md")


class _Render:
    def __init__(self, mode: str):
        self.mode = mode

    def scalar(self, x):
        x = x if isinstance(x, Scalar) else Scalar(x)
        if self.mode == "float":
            return float(f"{float(x):.12g}")
        return str(x)

    def form(self, f: AltForm | None):
        if f is None:
            return None
        return {"e" + "".join(map(str, idx)): self.scalar(c) for idx, c in sorted(f.coeffs.items())}

    def matrix(self, t: QTensor):
        return [[self.scalar(t[i, j]) for j in range(t.shape[1])] for i in range(t.shape[0])]

    def ledger(self, led: IdentityLedger, tol):
        return [
            {
                "name": e.name,
                "formula": e.formula,
                "residual_norm2": self.scalar(e.residual_norm2),
                "pass": e.passes(tol),
            }
            for e in led
        ]


def _structure(spec: StructureSpec) -> G2Structure:
    return G2Structure(spec.algebra, spec.forms, spec.name)


def battery_ledger(spec: StructureSpec) -> IdentityLedger:
    """Form identities, integrability and, when it holds, the full identity battery."""
    s = _structure(spec)
    led = IdentityLedger()
    led.extend(identity_suite(spec.forms))
    led.check("integrability", s.integrability_residual, "d*phi = theta ^ *phi")
    if s.integrable:
        led.extend(identity_battery(s))
    return led


def _tolerance(mode: str, tol: float | None) -> float | None:
    if mode not in ("exact", "float"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact":
        return None
    return 1e-9 if tol is None else tol


def battery_report(spec: StructureSpec, mode: str = "exact", tol: float | None = None) -> dict:
    tol = _tolerance(mode, tol)
    led = battery_ledger(spec)
    return {
        "name": spec.name,
        "mode": mode,
        "tolerance": tol,
        "identity_ledger": _Render(mode).ledger(led, tol),
        "verdict": "pass" if led.all_passed(tol) else "fail",
    }


def build_report(spec: StructureSpec, mode: str = "exact", tol: float | None = None) -> dict:
    """Everything computable about ``spec``; ``verdict`` is ``"pass"`` iff every
    ledger entry and every theorem-level implication check holds."""
    tol = _tolerance(mode, tol)
    r = _Render(mode)
    s = _structure(spec)
    cls = classify(s)
    vol_coeff = wedge(s.dphi, s.phi).coeffs.get(tuple(range(1, 8)), Scalar(0))
    led = IdentityLedger()
    led.extend(identity_suite(spec.forms))
    theorem_flags: dict[str, bool] = {}
    out = {
        "name": spec.name,
        "description": spec.description,
        "mode": mode,
        "tolerance": tol,
        "structure": {
            "brackets": [[i, j, k, r.scalar(c)] for i, j, k, c in spec.algebra.brackets()],
            "phi": r.form(s.phi),
            "unimodular": spec.algebra.is_unimodular(),
        },
        "classification": {
            "classes": cls.classes(tol),
            "residuals": {k: r.scalar(v) for k, v in sorted(cls.residuals.items())},
        },
        "theta": r.form(s.theta),
        "lambda": r.scalar(s.lam),
        "dphi_psi_pairing": r.scalar(s.lam * 6),
        "dphi_wedge_phi_vol": r.scalar(vol_coeff),
        "delta_phi": r.form(codifferential(spec.algebra, s.phi)),
        "integrable": s.integrable,
        "torsion": r.form(s.torsion),
        "norms": {"theta": r.scalar(full_contract(s.theta, s.theta))},
        "curvature": None,
        "soliton": None,
        "bi_g2": None,
    }
    if s.integrable:
        g = characteristic_geometry(s)
        curv = g.curvature
        led.extend(identity_battery(s))
        sym = symmetry_checks(s).flags(tol)
        closed = closed_torsion_checks(s).flags(tol)
        theorem_flags["symmetry_equivalences"] = sym["equivalences_hold"]
        theorem_flags["riemannian_bianchi_implications"] = sym["bianchi_implications_hold"]
        theorem_flags["closed_torsion_characterisation"] = closed["closed_iff_ricci_is_minus_nabla_theta"]
        theorem_flags["ricci_flat_consequences"] = closed["ricci_flat_consequences_hold"]
        pot = schrodinger_potential(s)
        led.check("schrodinger_potentials_agree", pot[0] - pot[1], "Scal^g - |T|^2/12 = Scal + |T|^2/6")
        out["norms"]["T"] = r.scalar(g.norm_T)
        out["curvature"] = {
            "connection_flat": g.connection.gamma.is_zero(),
            "flat": curv.is_flat(),
            "Ric": r.matrix(curv.Ric),
            "Scal": r.scalar(curv.Scal),
            "Scal_g": r.scalar(curv.Scal_g),
            "dT": r.form(curv.dT),
            "deltaT": r.form(curv.deltaT),
            "sigmaT": r.form(curv.sigmaT),
            "symmetry": sym,
            "closed_torsion": closed,
        }
        out["schrodinger_potential"] = [r.scalar(p) for p in pot]
        if curv.dT.is_zero():
            data, sol = soliton_from_lee(s)
            led.extend(sol)
            par = parallel_field_check(s)
            pflags = par.flags(tol)
            theorem_flags["parallel_field_consequences"] = pflags["parallel_implies_consequences"]
            out["soliton"] = {
                "X": r.form(data.X),
                "B": r.form(data.B),
                "gradient_with_constant_f": {e.name: e.passes(tol) for e in check_gradient_soliton(s)},
                "parallel_field": {"V": r.form(par.V), "flags": pflags, "corollary": par.corollary},
            }
        else:
            out["soliton"] = {"skipped": "torsion is not closed"}
    if spec.pair == "opposite":
        pair = BiG2Pair.from_opposite(s)
        if pair.s1.integrable and pair.s2.integrable:
            bi = bi_g2_check(pair)
            for key, val in sorted(bi.residuals.items()):
                led.check(f"bi_g2_{key}", val, "")
            out["bi_g2"] = {"T": r.form(bi.T), "T_tilde": r.form(bi.T_tilde), "flags": bi.flags(tol)}
        else:
            led.check("bi_g2_integrable", pair.s2.integrability_residual, "both members integrable")
            out["bi_g2"] = {"skipped": "a member of the pair is not integrable"}
    out["identity_ledger"] = r.ledger(led, tol)
    out["theorem_checks"] = theorem_flags
    ok = led.all_passed(tol) and all(theorem_flags.values())
    out["verdict"] = "pass" if ok else "fail"
    return out


def _md_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict):
        return ", ".join(f"{k}: {_md_value(x)}" for k, x in sorted(v.items())) or "0"
    if isinstance(v, list):
        return "[" + ", ".join(_md_value(x) for x in v) + "]"
    return str(v)


def _is_section(value) -> bool:
    if isinstance(value, dict):
        return bool(value) and any(isinstance(v, (dict, list)) for v in value.values())
    return isinstance(value, list) and bool(value) and all(isinstance(v, dict) for v in value)


def _md_section(lines: list[str], title: str, value, depth: int) -> None:
    if isinstance(value, dict) and _is_section(value):
        lines += [f"{'#' * depth} {title}", ""]
        for k in sorted(value, key=lambda k: (_is_section(value[k]), k)):
            _md_section(lines, k, value[k], depth + 1)
        lines.append("")
        return
    if _is_section(value):
        cols = sorted(value[0])
        lines += [f"{'#' * depth} {title}", "", "| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        lines += ["| " + " | ".join(_md_value(row[c]).replace("|", "\\|") for c in cols) + " |" for row in value]
        lines.append("")
        return
    lines.append(f"- **{title}**: {_md_value(value)}")


def emit_report(report: dict, fmt: str = "json") -> bytes:
    """Deterministic bytes: sorted keys, canonical scalar strings."""
    if fmt == "json":
        return (json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode()
    if fmt == "md":
        lines = [f"# {report.get('name') or 'structure'}", ""]
        nested = [k for k in sorted(report) if _is_section(report[k])]
        for key in sorted(report):
            if key != "name" and key not in nested:
                _md_section(lines, key, report[key], 2)
        lines.append("")
        for key in nested:
            _md_section(lines, key, report[key], 2)
        return ("\n".join(lines).rstrip() + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
