"""
JSON forms of curve parameters and resolved diagrams.

Rationals are written as "p/q" strings and crossing parameters as their
symbolic form {k, eps, b}, meaning t = (k + eps * r_b) / (2n). Nothing is
serialised as a float, so a diagram round-trips exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .braid import Diagram, ResolvedCrossing, diagram
from .errors import ParameterError
from .geometry import CurveParams, ExactParam


def params_to_json(p: CurveParams) -> dict:
    return {"s": p.s, "n": p.n, "m": p.m, "phi": f"{p.phi.numerator}/{p.phi.denominator}"}


def params_from_json(data: dict) -> CurveParams:
    try:
        return CurveParams(int(data["s"]), int(data["n"]), int(data["m"]), Fraction(str(data.get("phi", "0"))))
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"bad curve parameters: {exc}") from exc


def diagram_to_json(D: Diagram) -> dict:
    return {
        "params": params_to_json(D.params),
        "crossings": [
            {
                "block": c.block,
                "level": c.level,
                "sign": c.sign,
                "t_over": c.over.to_json(),
                "t_under": c.under.to_json(),
            }
            for c in D.crossings
        ],
    }


def _param(s: int, n: int, data: dict) -> ExactParam:
    return ExactParam(s, n, int(data["k"]), int(data["eps"]), int(data["b"]))


def diagram_from_json(data: dict) -> Diagram:
    """
    Rebuild a Diagram. The crossing geometry is recomputed from the
    parameters and must agree with every stored crossing.
    """
    params = params_from_json(data["params"])
    reference = {(c.crossing.param_a, c.crossing.param_b): c for c in diagram(params).crossings}
    out = []
    for rec in data["crossings"]:
        over = _param(params.s, params.n, rec["t_over"])
        under = _param(params.s, params.n, rec["t_under"])
        sign = int(rec["sign"])
        key = (under, over) if sign > 0 else (over, under)
        # param_a moves outward (eps=+1); the over strand is param_b when sign > 0
        ref = reference.get(key)
        if ref is None or ref.sign != sign or ref.block != int(rec["block"]) or ref.level != int(rec["level"]):
            raise ParameterError(f"crossing {rec} does not belong to {params}")
        out.append(ResolvedCrossing(ref.crossing, ref.block, ref.generator, sign))
    if len(out) != len(reference):
        raise ParameterError(f"expected {len(reference)} crossings, got {len(out)}")
    return Diagram(params, tuple(out))


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
