"""Canonical text form for polynomials and the JSON ideal format.

Polynomials print with terms sorted descending in the active order, variables
as "u_2_1" / "x_1_2", rational coefficients as "a/b".  Parsing round-trips
bit-exactly.
"""

from __future__ import annotations

import re

from .algebra import Mon, Poly, Ring, TermOrder

_VAR_RE = re.compile(r"^([A-Za-z]+)_(\d+)_(\d+)(?:\^(\d+))?$")


def _term_str(ring: Ring, m: Mon, coeff_str: str, coeff_is_one: bool) -> str:
    if m == ring.one_mon:
        return coeff_str
    vars_part = "*".join(
        ring.names[i] if e == 1 else f"{ring.names[i]}^{e}"
        for i, e in enumerate(m)
        if e
    )
    if coeff_is_one:
        return vars_part
    return f"{coeff_str}*{vars_part}"


def format_poly(p: Poly, order: TermOrder | None = None) -> str:
    if p.is_zero():
        return "0"
    if order is None:
        order = TermOrder.revlex()
    ring = p.ring
    field = ring.field
    one = field.one
    pieces = []
    for idx, (m, c) in enumerate(p.sorted_terms(order)):
        negative = field.characteristic == 0 and c < 0
        mag = field.neg(c) if negative else c
        body = _term_str(ring, m, field.to_str(mag), mag == one)
        if idx == 0:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


class ParseError(ValueError):
    pass


def parse_poly(s: str, ring: Ring) -> Poly:
    """Inverse of format_poly (also accepts unnormalized spacing)."""
    field = ring.field
    name_pos = {name: i for i, name in enumerate(ring.names)}
    s = s.strip()
    if s == "0":
        return ring.zero()
    # normalize into signed tokens
    s = s.replace("- ", "-").replace("+ ", "+")
    raw = s.replace(" ", "")
    tokens = re.findall(r"[+-]?[^+-]+", raw)
    total: dict = {}
    for tok in tokens:
        sign = 1
        if tok.startswith("+"):
            tok = tok[1:]
        elif tok.startswith("-"):
            sign = -1
            tok = tok[1:]
        if not tok:
            raise ParseError(f"empty term in {s!r}")
        coeff = field.one
        expo = [0] * ring.nvars
        saw_var = False
        for factor in tok.split("*"):
            mv = _VAR_RE.match(factor)
            if mv:
                name = f"{mv.group(1)}_{mv.group(2)}_{mv.group(3)}"
                if name not in name_pos:
                    raise ParseError(f"unknown variable {name!r}")
                e = int(mv.group(4)) if mv.group(4) else 1
                expo[name_pos[name]] += e
                saw_var = True
            else:
                try:
                    coeff = field.mul(coeff, field.parse(factor))
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad factor {factor!r} in {s!r}") from exc
        if sign < 0:
            coeff = field.neg(coeff)
        m = tuple(expo)
        prev = total.get(m)
        total[m] = coeff if prev is None else field.add(prev, coeff)
        _ = saw_var
    return ring.from_dict(total)


def ideal_to_json(ideal, order: TermOrder | None = None) -> dict:
    """The JSON ideal payload: ambient metadata plus canonical generators."""
    space = ideal.space
    if space is None:
        raise ValueError("only ambient ideals serialize to JSON")
    return {
        "ambient": {
            "flavor": space.flavor,
            "m": space.m,
            "n": space.n,
            "field": space.ring.field.name,
        },
        "generators": [format_poly(g, order or space.order) for g in ideal.gens],
    }


def ideal_from_json(payload: dict):
    from .families import ambient_space
    from .fields import field_by_name
    from .ideals import Ideal

    amb = payload["ambient"]
    space = ambient_space(amb["flavor"], amb["m"], amb["n"], field_by_name(amb["field"]))
    gens = [parse_poly(s, space.ring) for s in payload["generators"]]
    return Ideal(space.ring, gens, space=space)
