"""JSON formats for extension specs and analysis reports.

Spec files carry the variables (name + weight) and generator expression
strings; report files mirror :class:`~vrg.analyzer.AnalysisReport` with
every polynomial serialized as its canonical expression string, so a
report can be re-parsed and re-verified against its spec.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .analyzer import AnalysisReport, RamificationDatum, Witness
from .errors import SpecFileError
from .extension import ExtensionSpec
from .ideals import tag_table
from .poly import VarTable, format_poly, parse

# ---------------------------------------------------------------------------
# spec files
# ---------------------------------------------------------------------------


def spec_from_dict(data: dict) -> tuple[ExtensionSpec, dict]:
    if not isinstance(data, dict):
        raise SpecFileError("spec file must contain a JSON object")
    variables = data.get("variables")
    if not isinstance(variables, list) or not variables:
        raise SpecFileError('"variables" must be a non-empty array')
    names = []
    weights = []
    for entry in variables:
        if not isinstance(entry, dict) or "name" not in entry or "weight" not in entry:
            raise SpecFileError('each variable needs "name" and "weight"')
        name, weight = entry["name"], entry["weight"]
        if not isinstance(name, str):
            raise SpecFileError("variable names must be strings")
        if not isinstance(weight, int) or isinstance(weight, bool) or weight < 1:
            raise SpecFileError(f"weight of {name!r} must be a positive integer")
        names.append(name)
        weights.append(weight)
    try:
        vars = VarTable(tuple(names), tuple(weights))
    except ValueError as exc:
        raise SpecFileError(str(exc)) from exc

    generators = data.get("generators")
    if not isinstance(generators, list) or len(generators) != len(names):
        raise SpecFileError(
            '"generators" must list exactly one expression per variable'
        )
    polys = []
    for i, text in enumerate(generators, start=1):
        if not isinstance(text, str):
            raise SpecFileError(f"generator {i} must be an expression string")
        polys.append(parse(text, vars))

    labels = data.get("labels") or {}
    if not isinstance(labels, dict):
        raise SpecFileError('"labels" must be an object when present')
    return ExtensionSpec(vars, tuple(polys)), labels


def load_spec(path: str | Path) -> tuple[ExtensionSpec, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return spec_from_dict(data)


def spec_to_dict(spec: ExtensionSpec, labels: dict | None = None) -> dict:
    out = {
        "variables": [
            {"name": n, "weight": w}
            for n, w in zip(spec.vars.names, spec.vars.weights)
        ],
        "generators": [format_poly(f, spec.vars) for f in spec.generators],
    }
    if labels:
        out["labels"] = labels
    return out


# ---------------------------------------------------------------------------
# report files
# ---------------------------------------------------------------------------


def _witness_to_dict(witness: Witness, vars: VarTable, tags: VarTable) -> dict:
    if witness.kind == "discriminant_representation":
        return {
            "kind": witness.kind,
            "representation": format_poly(witness.representation, tags),
        }
    return {
        "kind": witness.kind,
        "contraction": format_poly(witness.contraction, tags),
        "pullback_factors": [
            {"factor": format_poly(q, vars), "ramified": flag}
            for q, flag in witness.pullback_factors
        ],
    }


def report_to_dict(report: AnalysisReport, spec: ExtensionSpec) -> dict:
    vars = spec.vars
    tags = tag_table(spec)
    out = {
        "degree": report.degree,
        "jacobian": format_poly(report.jacobian, vars),
        "discarded_unit": str(report.discarded_unit),
        "ramification": [
            {
                "Q": format_poly(d.prime, vars),
                "e": d.index,
                "contraction": format_poly(d.contraction, tags),
            }
            for d in report.ramification
        ],
        "S": format_poly(report.S, vars),
        "R": format_poly(report.R, vars),
        "S_tilde": format_poly(report.S_tilde, tags),
        "well_ramified": report.well_ramified,
        "witness": _witness_to_dict(report.witness, vars, tags),
        "discriminant": None,
        "quotient_DJ": None,
        "fiber_audit": report.fiber_audit,
        "warnings": list(report.warnings),
    }
    if report.discriminant is not None:
        d_poly, d_rep = report.discriminant
        out["discriminant"] = {
            "D": format_poly(d_poly, vars),
            "D_rep": format_poly(d_rep, tags),
        }
    if report.quotient_DJ is not None:
        out["quotient_DJ"] = format_poly(report.quotient_DJ, vars)
    return out


def _witness_from_dict(data: dict, vars: VarTable, tags: VarTable) -> Witness:
    kind = data.get("kind")
    if kind == "discriminant_representation":
        return Witness(kind=kind, representation=parse(data["representation"], tags))
    if kind == "mixed_prime":
        return Witness(
            kind=kind,
            contraction=parse(data["contraction"], tags),
            pullback_factors=tuple(
                (parse(entry["factor"], vars), bool(entry["ramified"]))
                for entry in data.get("pullback_factors", [])
            ),
        )
    raise SpecFileError(f"unknown witness kind {kind!r}")


def report_from_dict(data: dict, spec: ExtensionSpec) -> AnalysisReport:
    vars = spec.vars
    tags = tag_table(spec)
    ramification = tuple(
        RamificationDatum(
            prime=parse(entry["Q"], vars),
            jac_multiplicity=int(entry["e"]) - 1,
            contraction=parse(entry["contraction"], tags),
            index=int(entry["e"]),
        )
        for entry in data["ramification"]
    )
    well = bool(data["well_ramified"])
    discriminant = None
    if data.get("discriminant") is not None:
        discriminant = (
            parse(data["discriminant"]["D"], vars),
            parse(data["discriminant"]["D_rep"], tags),
        )
    quotient = None
    if data.get("quotient_DJ") is not None:
        quotient = parse(data["quotient_DJ"], vars)
    return AnalysisReport(
        degree=int(data["degree"]),
        jacobian=parse(data["jacobian"], vars),
        discarded_unit=Fraction(data["discarded_unit"]),
        ramification=ramification,
        S=parse(data["S"], vars),
        R=parse(data["R"], vars),
        S_tilde=parse(data["S_tilde"], tags),
        well_ramified=well,
        by_membership=well,
        by_factor_pattern=well,
        witness=_witness_from_dict(data["witness"], vars, tags),
        discriminant=discriminant,
        quotient_DJ=quotient,
        warnings=tuple(data.get("warnings", ())),
        fiber_audit=data.get("fiber_audit"),
    )


def dump_report(report: AnalysisReport, spec: ExtensionSpec, path: str | Path) -> None:
    data = report_to_dict(report, spec)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def load_report(path: str | Path, spec: ExtensionSpec) -> AnalysisReport:
    with open(path, "r", encoding="utf-8") as fh:
        return report_from_dict(json.load(fh), spec)
