"""Report payloads and their serializations.

Every command's outcome is a plain dict of strings, numbers, bools,
lists, and dicts.  The JSON form is that payload dumped with sorted
keys; the text form is a fixed-order rendering of the same payload, so
both formats always carry identical information and identical inputs
produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .brauer import (
    constant_is_trivial,
    divisor_reciprocity,
    ramification_divisor,
    regular_rational_points,
    specialize,
)
from .covers import KummerCoverDatum, Reparametrization
from .distinguish import FieldComparisonRow, SpecializationCertificate
from .errors import ParseError
from .hilbert import invariant_set
from .parser import class_text, parse_ratfunc, ratfunc_text
from .points import FiniteBase, Q_BASE

VERSION = "0.1.0"
TOOL = "brauercalc"


def value_text(v):
    """Base-field values (Fraction or FFElem) as grammar-compatible text."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    return v.field.format_element(v)


def base_text(base):
    return "q" if not base.is_finite else f"fq:{base.field.order}"


def parse_base(text):
    if text == "q":
        return Q_BASE
    if text.startswith("fq:"):
        q = int(text[3:])
        base = FiniteBase(q)
        base.field  # force validation of the order
        return base
    raise ValueError(f"unknown base {text!r}; use q or fq:<q>")


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict
    outcome: dict

    def payload(self):
        return {
            "tool": TOOL,
            "version": VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
        }

    def to_json(self):
        return json.dumps(self.payload(), sort_keys=True, indent=2) + "\n"

    def to_text(self):
        lines = [f"{TOOL} {VERSION}: {self.command}"]
        lines.extend(_render("inputs", self.inputs, 0))
        lines.extend(_render("outcome", self.outcome, 0))
        return "\n".join(lines) + "\n"


def _render(key, value, depth):
    pad = "  " * depth
    label = f"{pad}{key}:" if key is not None else f"{pad}-"
    if isinstance(value, dict):
        lines = [label]
        for k in sorted(value):
            lines.extend(_render(k, value[k], depth + 1))
        return lines
    if isinstance(value, (list, tuple)):
        lines = [label]
        for item in value:
            lines.extend(_render(None, item, depth + 1))
        return lines
    if value is None:
        return [f"{label} ~"]
    return [f"{label} {value}"]


# ---------------------------------------------------------------------------
# outcome payloads

def divisor_payload(div):
    rows = []
    for pt, rc in div.entries:
        rows.append(
            {
                "point": str(pt),
                "degree": pt.degree,
                "residue": value_text(rc.canonical_value()),
                "residue_field": rc.field_label(),
            }
        )
    return rows


def ram_outcome(cls):
    div = ramification_divisor(cls)
    return {
        "divisor": divisor_payload(div),
        "ramification_points": len(div.entries),
        "reciprocity": divisor_reciprocity(div),
    }


def equal_outcome(a, b):
    diff = a - b
    div = ramification_divisor(diff)
    out = {"difference_unramified": div.is_empty}
    if not div.is_empty:
        out["equal"] = False
        out["obstruction"] = {
            "point": str(div.entries[0][0]),
            "residue": value_text(div.entries[0][1].canonical_value()),
        }
        return out
    if a.base.is_finite:
        out["equal"] = True
        out["constant_difference"] = {
            "trivial": True,
            "reason": "constant classes over a finite field are trivial",
        }
        return out
    at = regular_rational_points(diff, 1)[0]
    pairs = specialize(diff, at)
    trivial = constant_is_trivial(a.base, pairs, a.p)
    cert = {
        "at": value_text(a.base.field.coerce(at)),
        "pairs": [[value_text(x), value_text(y)] for x, y in pairs],
        "trivial": trivial,
    }
    if not trivial:
        cert["nonsplit_places"] = [str(v) for v in invariant_set(pairs)]
    out["equal"] = trivial
    out["constant_difference"] = cert
    return out


def _certificate_payload(cert):
    if cert is None:
        return None
    if isinstance(cert, FieldComparisonRow):
        return {
            "point": str(cert.point),
            "left_ramified": cert.left_ramified,
            "right_ramified": cert.right_ramified,
            "left_field": cert.left_label,
            "right_field": cert.right_label,
        }
    if isinstance(cert, SpecializationCertificate):
        out = {
            "at": value_text(cert.at),
            "left_pairs": [[value_text(x), value_text(y)] for x, y in cert.left_pairs],
            "right_pairs": [
                [value_text(x), value_text(y)] for x, y in cert.right_pairs
            ],
            "left_trivial": cert.left_trivial,
            "right_trivial": cert.right_trivial,
        }
        if cert.discriminant is not None:
            out["separating_discriminant"] = str(cert.discriminant)
        return out
    raise TypeError(f"unknown certificate {cert!r}")


def distinguish_outcome(verdict):
    return {
        "outcome": verdict.outcome,
        "narrative": list(verdict.narrative),
        "point": None if verdict.point is None else str(verdict.point),
        "certificate": _certificate_payload(verdict.certificate),
    }


def enumerate_outcome(cand):
    return {
        "support": [str(pt) for pt in cand.support],
        "bound": cand.bound,
        "size": cand.size,
        "sequences": [list(seq.exponents) for seq in cand.sequences],
        "classes": [class_text(c) for c in cand.classes],
        "note": (
            "bound counts reciprocity-compatible residue twists; whether "
            "distinct twists are genuinely inequivalent is not decided"
        ),
    }


def witness_report_outcome(rep):
    return {
        "mode": rep.mode,
        "ok": rep.ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in rep.checks
        ],
        "notes": list(rep.notes),
    }


# ---------------------------------------------------------------------------
# witness datum files

def witness_to_obj(datum):
    obj = {
        "kind": datum.kind,
        "base": base_text(datum.base),
        "m": datum.m,
        "g": ratfunc_text(datum.g),
        "basepoint": value_text(datum.basepoint_t),
        "fiber_root": value_text(datum.fiber_root),
    }
    if datum.f is not None:
        obj["f"] = ratfunc_text(datum.f)
    if datum.reparam is not None:
        obj["reparam"] = ratfunc_text(datum.reparam.subst)
    if datum.symbol is not None:
        obj["symbol"] = [ratfunc_text(datum.symbol[0]), ratfunc_text(datum.symbol[1])]
    return obj


def witness_to_json(datum):
    return json.dumps(witness_to_obj(datum), sort_keys=True, indent=2) + "\n"


def witness_from_json(text, base):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos, f"witness file is not valid JSON: {exc.msg}")
    if not isinstance(obj, dict):
        raise ParseError(0, "witness file must hold a JSON object")
    try:
        kind = obj["kind"]
        m = int(obj["m"])
        g = parse_ratfunc(obj["g"], base.field)
        basepoint = _constant_value(obj["basepoint"], base.field, "basepoint")
        fiber_root = _constant_value(obj["fiber_root"], base.field, "fiber_root")
    except KeyError as exc:
        raise ParseError(0, f"witness file is missing the {exc.args[0]!r} field")
    if obj.get("base") not in (None, base_text(base)):
        raise ValueError(
            f"witness base {obj['base']!r} does not match --base {base_text(base)!r}"
        )
    f = None
    if "f" in obj:
        f = parse_ratfunc(obj["f"], base.field)
    reparam = None
    if "reparam" in obj:
        reparam = Reparametrization(parse_ratfunc(obj["reparam"], base.field))
    symbol = None
    if "symbol" in obj:
        symbol = (
            parse_ratfunc(obj["symbol"][0], base.field),
            parse_ratfunc(obj["symbol"][1], base.field),
        )
    return KummerCoverDatum(
        kind=kind,
        base=base,
        m=m,
        g=g,
        basepoint_t=basepoint,
        fiber_root=fiber_root,
        f=f,
        reparam=reparam,
        symbol=symbol,
    )


def _constant_value(text, field, what):
    r = parse_ratfunc(str(text), field)
    if not r.is_constant:
        raise ValueError(f"witness {what} must be a constant, got {text!r}")
    return r.constant_value()
