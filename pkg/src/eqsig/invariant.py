"""Equivariant signature: correction term, g-signature and their difference."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import SymmetricDiagram, classify_strands, crossing_sign, validate
from .errors import ConsistencyError, ValidationError
from .faces import FaceComplex, Shading, check_admissible, describe_faces
from .forms import eigen_split, goeritz_eta, goeritz_matrix, restricted_forms
from .linalg import SignatureTriple, format_matrix, signature


def correction_term(d: SymmetricDiagram) -> int:
    """Minus the summed ab-sign of the off-axis crossings between a and b."""
    arcs = classify_strands(d)
    return -sum(crossing_sign(d, cid, "ab") for cid in arcs.ids("ab", on_axis=False))


def correction_term_crosscheck(d: SymmetricDiagram, fc: FaceComplex, shading: Shading) -> int:
    """Same number computed with the axis terms left in.

    Sums eta over the on-axis crossings and subtracts the ab-sign of every
    crossing between a and b.  The axis terms cancel only if eta and the
    ab-sign agree on the axis, so a mismatch exposes a convention error.
    """
    arcs = classify_strands(d)
    on_axis = sum(goeritz_eta(d, fc, shading, cid) for cid in sorted(d.on_axis))
    all_ab = sum(crossing_sign(d, cid, "ab") for cid in arcs.ids("ab"))
    value = on_axis - all_ab
    expected = correction_term(d)
    if value != expected:
        bad = [cid for cid in sorted(d.on_axis)
               if goeritz_eta(d, fc, shading, cid) != crossing_sign(d, cid, "ab")]
        raise ConsistencyError(
            f"correction term cross-check gave {value}, direct formula gave {expected}; "
            f"eta differs from the ab-sign at on-axis crossings {bad}",
            where="correction_term")
    return value


def g_signature(m_plus, m_minus) -> int:
    return signature(m_plus).signature - signature(m_minus).signature


def is_alternating(d: SymmetricDiagram) -> bool:
    """True when over and under passages strictly alternate along the knot."""
    passage = {}
    for c in d.crossings:
        passage[c.under_in] = "under"
        passage[c.over_in] = "over"
    # fixed points are not crossings: segments n+1 and 2n+2 end there
    seq = [passage[s] for s in range(1, d.num_segments + 1) if s in passage]
    return all(seq[i] != seq[(i + 1) % len(seq)] for i in range(len(seq)))


def alternating_fast_path(d: SymmetricDiagram) -> int:
    if not is_alternating(d):
        raise ValidationError("fast path needs an alternating diagram", where=d.name)
    return -correction_term(d)


def butterfly_lower_bound(sigma_tilde: int) -> int:
    """Lower bound ceil(|s| / 2) on the butterfly 4-genus."""
    return (abs(sigma_tilde) + 1) // 2


@dataclass(frozen=True)
class InvariantReport:
    name: str
    n: int
    alternating: bool
    e: int
    gsig: int
    sigma_tilde: int
    bg4_lower: int
    intermediates: dict = field(default_factory=dict, compare=False)

    def to_dict(self, explain: bool = False) -> dict:
        out = {
            "name": self.name,
            "n": self.n,
            "alternating": self.alternating,
            "e": self.e,
            "gsig": self.gsig,
            "sigma_tilde": self.sigma_tilde,
            "bg4_lower": self.bg4_lower,
        }
        inter = dict(self.intermediates)
        if not explain:
            inter.pop("faces", None)
        out["intermediates"] = inter
        return out

    def to_json(self, explain: bool = False) -> str:
        return json.dumps(self.to_dict(explain), indent=2) + "\n"

    def to_text(self, explain: bool = False) -> str:
        it = self.intermediates
        lines = [
            f"name:         {self.name}",
            f"crossings:    {self.n}",
            f"alternating:  {'yes' if self.alternating else 'no'}",
            f"e:            {self.e}",
            f"gsig:         {self.gsig}  (sign E+ = {it['sign_plus']['signature']}, "
            f"sign E- = {it['sign_minus']['signature']})",
            f"sigma_tilde:  {self.sigma_tilde}",
            f"bg4 >=        {self.bg4_lower}",
        ]
        if it.get("invariant_regions"):
            lines.append(f"note: invariant unshaded regions besides r_infinity: "
                         f"{it['invariant_regions']}")
        if not explain:
            return "\n".join(lines) + "\n"
        labels = [f"R{f}" for f in it["basis"]]
        lines += ["", "faces:"]
        lines += ["  " + s for s in it["faces"]]
        lines += ["", f"shaded regions:   {it['shaded']}",
                  f"unshaded regions: {it['unshaded']}  (r_infinity = R{it['r_infinity']})",
                  f"region involution: {it['region_involution']}",
                  "", "Goeritz matrix G:"]
        lines += ["  " + s for s in format_matrix(it["goeritz"], labels)]
        plus_labels = [f"R{r}-R{s}" for r, s in it["pairs"]]
        minus_labels = [f"R{r}+R{s}" for r, s in it["pairs"]] + [f"R{r}" for r in it["invariant_regions"]]
        lines += ["", "E+ basis: " + (", ".join(plus_labels) or "(empty)"),
                  "M+:"]
        lines += ["  " + s for s in format_matrix(it["m_plus"], plus_labels)]
        lines += ["", "E- basis: " + (", ".join(minus_labels) or "(empty)"), "M-:"]
        lines += ["  " + s for s in format_matrix(it["m_minus"], minus_labels)]
        lines += ["", f"e cross-check: {it['e_crosscheck']}"]
        if self.alternating:
            lines.append(f"alternating fast path: {it['fast_path']}")
        return "\n".join(lines) + "\n"


def _triple(t: SignatureTriple) -> dict:
    return {"p": t.p, "q": t.q, "z": t.z, "signature": t.signature}


def sigma_tilde(d: SymmetricDiagram) -> InvariantReport:
    """Run the whole pipeline on a diagram and collect every intermediate."""
    d = validate(d)
    fc, shading, rho = check_admissible(d)

    g = goeritz_matrix(d, fc, shading, rho)
    split = eigen_split(g, rho)
    m_plus, m_minus = restricted_forms(g, split)
    s_plus, s_minus = signature(m_plus), signature(m_minus)
    gsig = s_plus.signature - s_minus.signature

    e = correction_term(d)
    e_check = correction_term_crosscheck(d, fc, shading)
    if e % 2:
        raise ConsistencyError(f"correction term {e} is odd", where="correction_term")
    value = gsig - e

    alternating = is_alternating(d)
    fast = None
    if alternating:
        fast = alternating_fast_path(d)
        if fast != value or gsig != 0:
            raise ConsistencyError(
                f"alternating fast path gives {fast} but the pipeline gives {value} "
                f"(g-signature {gsig})", where="alternating_fast_path")

    intermediates = {
        "basis": list(g.basis),
        "r_infinity": g.r_infinity,
        "goeritz": [list(r) for r in g.matrix],
        "pairs": [list(p) for p in split.pairs],
        "invariant_regions": list(split.invariant),
        "plus_basis": [list(v) for v in split.plus_basis],
        "minus_basis": [list(v) for v in split.minus_basis],
        "m_plus": m_plus,
        "m_minus": m_minus,
        "sign_plus": _triple(s_plus),
        "sign_minus": _triple(s_minus),
        "e_crosscheck": e_check,
        "fast_path": fast,
        "shaded": sorted(shading.shaded),
        "unshaded": sorted(shading.unshaded),
        "region_involution": {str(k): v for k, v in sorted(rho.mapping.items())},
        "faces": describe_faces(fc, shading),
    }
    return InvariantReport(d.name, d.n, alternating, e, gsig, value,
                           butterfly_lower_bound(value), intermediates)
