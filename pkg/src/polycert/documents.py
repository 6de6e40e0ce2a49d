"""JSON certificate documents: build, serialize, and re-verify.

Every document has the keys ``schema_version``, ``command``, ``inputs`` and
``outcome``. Polynomials are stored in the text grammar (with ``nvars`` in
``inputs``); scalar rationals are ``"p/q"`` strings; exponent vectors are
integer lists. :func:`dumps` sorts keys, so output is byte-for-byte
deterministic and ``dumps(loads(s)) == s``.

:func:`verify_document` re-checks the claims a document makes without
repeating any search. The one exception is completeness of a face list,
which is compared against a fresh face enumeration.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import membership, polya, powers, simplexcert, support, valuation
from .polyring import Polynomial, evaluate, format_poly, is_nonneg_coeffs, parse

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    pass


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def unrat(s: str) -> Fraction:
    return Fraction(s)


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def loads(text: str) -> dict:
    doc = json.loads(text)
    for key in ("schema_version", "command", "inputs", "outcome"):
        if key not in doc:
            raise DocumentError(f"document lacks {key!r}")
    return doc


def _doc(command: str, inputs: dict, outcome: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "outcome": outcome}


def _poly(doc: dict, text: str) -> Polynomial:
    return parse(text, doc["inputs"]["nvars"])


def _exp(e) -> list[int]:
    return [int(a) for a in e]


# -------------------------------------------------------------------- builders


def polya_document(f: Polynomial, res: polya.PolyaResult) -> dict:
    inputs = {"f": format_poly(f), "nvars": f.nvars, "max_k": res.max_k}
    if res.found:
        out: dict[str, Any] = {"status": "found", "k": res.k, "product": format_poly(res.product)}
        if res.k > 0:
            out["minimality_witness"] = _exp(res.witnesses[-1][1])
    else:
        out = {"status": "exhausted", "witnesses": [{"k": k, "exponent": _exp(e)} for k, e in res.witnesses]}
    return _doc("polya", inputs, out)


def certify_document(
    f: Polynomial,
    identity: simplexcert.IdentityData | None,
    result,
    max_shift: int,
    max_k: int,
) -> dict:
    inputs: dict[str, Any] = {"f": format_poly(f), "nvars": f.nvars, "max_shift": max_shift, "max_k": max_k}
    if identity is None:
        inputs["positive"] = True
    else:
        inputs["identity"] = [[format_poly(g), format_poly(h)] for g, h in identity.pairs]
    if isinstance(result, simplexcert.SimplexCertificate):
        out = {
            "status": "certified",
            "f": format_poly(f),
            "P": format_poly(result.P),
            "Q": format_poly(result.Q),
            "k": result.k,
            "shift": result.shift,
        }
    else:
        out = {"status": "exhausted", "shifts_tried": list(result.shifts_tried)}
    return _doc("certify", inputs, out)


def powers_document(
    f: Polynomial, report: powers.StabilizationReport, max_power: int, hyp: powers.HypothesisReport | None = None
) -> dict:
    inputs = {"f": format_poly(f), "nvars": f.nvars, "max_power": max_power}
    out: dict[str, Any] = {"status": report.outcome}
    if report.outcome == "stabilized":
        out.update(
            k0=report.k0,
            pair=list(report.pair),
            conductor=report.conductor,
            checked=[[j, ok] for j, ok in report.checked],
            minimality_witness=None if report.minimality_witness is None else _exp(report.minimality_witness),
        )
    elif report.outcome == "no_power_found":
        out["witnesses"] = [{"k": k, "exponent": _exp(e)} for k, e in report.witnesses]
    else:
        out["reason"] = report.reason
        out["value_at_ones"] = rat(evaluate(f, [1] * f.nvars))
    if hyp is not None:
        out["hypotheses"] = {
            "value_at_ones": rat(hyp.value_at_ones),
            "first_nonneg_power": hyp.first_nonneg_power,
            "initial_parts_nonneg": hyp.initial_parts_nonneg,
            "definite_negative": None
            if hyp.definite_negative is None
            else {"vertex": _exp(hyp.definite_negative[0]), "beta": _exp(hyp.definite_negative[1])},
        }
    return _doc("powers", inputs, out)


def member_document(target: Polynomial, T: membership.SemiringPresentation, D: int, result) -> dict:
    inputs = {
        "target": format_poly(target),
        "generators": [format_poly(g) for g in T.generators],
        "nvars": target.nvars,
        "degree": D,
    }
    if isinstance(result, membership.MembershipWitness):
        out = {
            "status": "member",
            "terms": [{"coefficient": rat(c), "multidegree": list(md)} for c, md in result.terms],
        }
    else:
        out = {
            "status": "infeasible_at_degree",
            "functional": [{"exponent": _exp(m), "value": rat(v)} for m, v in sorted(result.functional.items())],
        }
    return _doc("member", inputs, out)


def _face_json(face: support.FaceData) -> dict:
    return {
        "normal": [rat(x) for x in face.normal],
        "value": rat(face.value),
        "members": face.members.to_list(),
        "dim": face.dim,
    }


def newton_document(f: Polynomial) -> dict:
    verts = support.newton_vertices(f)
    faces = support.newton_faces(f)
    vlist = sorted(verts.points)
    inner = []
    for p in sorted(f.support()):
        if p in verts:
            continue
        lam = support.hull_combination(p, vlist)
        inner.append(
            {"point": list(p), "combination": [{"vertex": list(v), "weight": rat(w)} for v, w in zip(vlist, lam) if w]}
        )
    out = {"vertices": verts.to_list(), "faces": [_face_json(F) for F in faces], "non_vertices": inner}
    return _doc("newton", {"f": format_poly(f), "nvars": f.nvars}, out)


def initial_document(f: Polynomial, w=None) -> dict:
    inputs: dict[str, Any] = {"f": format_poly(f), "nvars": f.nvars}
    if w is not None:
        inputs["w"] = [rat(x) for x in w]
        v = valuation.valuation(f, w)
        out = {
            "valuation": "inf" if v == float("inf") else rat(v),
            "initial_part": format_poly(valuation.initial_part(f, w)),
        }
    else:
        parts = valuation.proper_initial_parts(f)
        ok = all(is_nonneg_coeffs(p)[0] for _, p in parts)
        out = {
            "proper_initial_parts": [dict(_face_json(F), initial_part=format_poly(p)) for F, p in parts],
            "initial_parts_nonneg": ok,
        }
    return _doc("initial", inputs, out)


def frobenius_document(p: powers.SemigroupParams) -> dict:
    m = powers.frobenius_conductor(p)
    run = []
    for j in range(m, m + min(p.l1, p.l2)):
        a, b = powers.semigroup_member(j, p)
        run.append({"m": j, "a": a, "b": b})
    return _doc("frobenius", {"l1": p.l1, "l2": p.l2, "k": p.k}, {"conductor": m, "witnesses": run})


# -------------------------------------------------------------------- verification


def verify_document(doc: dict) -> tuple[bool, str]:
    """Re-check a document's claims; returns ``(ok, message)``."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        return False, f"unsupported schema_version {doc.get('schema_version')!r}"
    check = _VERIFIERS.get(doc.get("command"))
    if check is None:
        return False, f"unknown command {doc.get('command')!r}"
    try:
        return check(doc)
    except (KeyError, TypeError, ValueError) as exc:
        return False, f"malformed document: {exc}"


def _verify_polya(doc):
    f = _poly(doc, doc["inputs"]["f"])
    out = doc["outcome"]
    if out["status"] == "found":
        k = out["k"]
        if not polya.verify_polya(f, k, _poly(doc, out["product"])):
            return False, "product is not (x1+...+xn)^k f or has a negative coefficient"
        if k > 0 and not polya.verify_witnesses(f, [(k - 1, tuple(out["minimality_witness"]))]):
            return False, "minimality witness does not show a negative coefficient at k-1"
        return True, f"Polya certificate with k={k} verified"
    wit = [(w["k"], tuple(w["exponent"])) for w in out["witnesses"]]
    if sorted(k for k, _ in wit) != list(range(doc["inputs"]["max_k"] + 1)):
        return False, "exhaustion witnesses do not cover every k"
    if not polya.verify_witnesses(f, wit):
        return False, "a witness does not point at a negative coefficient"
    return True, f"negative coefficients verified for every k <= {doc['inputs']['max_k']}"


def _verify_certify(doc):
    out = doc["outcome"]
    if out["status"] != "certified":
        return False, "document holds no certificate (search exhausted)"
    f = _poly(doc, doc["inputs"]["f"])
    if _poly(doc, out["f"]) != f:
        return False, "certificate is for a different f"
    cert = simplexcert.SimplexCertificate(_poly(doc, out["P"]), _poly(doc, out["Q"]), out["k"], out["shift"])
    if not simplexcert.verify_certificate(f, cert):
        return False, "f != P + Q (x1+...+xn-1) or P has a negative coefficient"
    # provenance: P must be (x1+...+xn)^k times the homogenized shifted identity
    k, shift = out["k"], out["shift"]
    if not (isinstance(k, int) and isinstance(shift, int)) or k < 0 or shift < 0:
        return False, "k and shift must be nonnegative integers"
    if doc["inputs"].get("positive"):
        pairs = [(f, Polynomial.constant(f.nvars, 1))]
    else:
        pairs = [(_poly(doc, g), _poly(doc, h)) for g, h in doc["inputs"]["identity"]]
    if simplexcert.IdentityData(pairs).total() != f:
        return False, "recorded identity does not reproduce f"
    schedule = simplexcert.shift_schedule(doc["inputs"]["max_shift"])
    if shift not in schedule or k > doc["inputs"]["max_k"]:
        return False, "k or shift lies outside the recorded budgets"
    sq = simplexcert.simplex_ideal_generator(f.nvars) ** 2
    s = Polynomial.simplex_form(f.nvars)

    def homogenized(c):
        return simplexcert.homogenized_sum([(g + sq * c, h) for g, h in pairs])

    F = homogenized(shift)
    if s**k * F != cert.P:
        return False, f"P is not (x1+...+xn)^{k} times the homogenized identity at shift {shift}"
    if k > 0 and is_nonneg_coeffs(s ** (k - 1) * F)[0]:
        return False, f"k={k} is not minimal at shift {shift}"
    # an earlier shift whose form divides F by a power of x1+...+xn would have ended the search
    for c in schedule[: schedule.index(shift)]:
        E = homogenized(c)
        j = F.degree() - E.degree() if not (E.is_zero() or F.is_zero()) else -1
        if j >= 0 and k + j <= doc["inputs"]["max_k"] and s**j * E == F:
            return False, f"the search would have stopped at shift {c}"
    return True, "simplex certificate verified"


def _verify_powers(doc):
    f = _poly(doc, doc["inputs"]["f"])
    out = doc["outcome"]
    status = out["status"]
    if status == "rejected":
        at_ones = evaluate(f, [1] * f.nvars)
        if at_ones > 0:
            return False, "rejection claims f(1,...,1) <= 0 but it is positive"
        if out.get("value_at_ones") != rat(at_ones):
            return False, "recorded f(1,...,1) is wrong"
        return True, "f(1,...,1) <= 0 verified"
    if status == "no_power_found":
        ks = [w["k"] for w in out["witnesses"]]
        if ks != sorted(set(ks)) or not all(1 <= k <= doc["inputs"]["max_power"] for k in ks):
            return False, "witness powers must be distinct, increasing and within the budget"
        seen = set(ks)
        for w in out["witnesses"]:
            k, e = w["k"], tuple(w["exponent"])
            if (f**k).coeff(e) >= 0:
                return False, f"witness for k={k} does not show a negative coefficient"
        for k in range(1, doc["inputs"]["max_power"]):
            if k not in seen and k + 1 not in seen:
                return False, f"powers {k} and {k + 1} both lack a witness"
        return True, "negative coefficients verified"
    l1, l2 = out["pair"]
    if l2 != l1 + 1:
        return False, "pair is not consecutive"
    m = powers.frobenius_conductor(powers.SemigroupParams(l1, l2, 1))
    if m != out["conductor"]:
        return False, f"conductor should be {m}"
    k0 = out["k0"]
    if not (isinstance(k0, int) and 1 <= k0 <= m):
        return False, "k0 must lie in [1, conductor]"
    checked = []
    for j, fj in enumerate(f.powers()):
        if j > m:
            break
        if j == 0:
            continue
        ok = is_nonneg_coeffs(fj)[0]
        checked.append([j, ok])
        if j >= k0 and not ok:
            return False, f"f^{j} has a negative coefficient"
        if j == k0 - 1 and fj.coeff(tuple(out["minimality_witness"])) >= 0:
            return False, "minimality witness does not show a negative coefficient"
    if k0 == 1 and out["minimality_witness"] is not None:
        return False, "k0 = 1 needs no minimality witness"
    if checked != out["checked"]:
        return False, "recorded per-power checks disagree with expansion"
    if not (k0 <= l1 and l2 <= m):
        return False, "pair powers are not covered by the verified range"
    return True, f"all powers from k0={k0} on verified (expanded up to {m}, sealed beyond)"


def _verify_member(doc):
    gens = [_poly(doc, g) for g in doc["inputs"]["generators"]]
    T = membership.SemiringPresentation(gens)
    target = _poly(doc, doc["inputs"]["target"])
    out = doc["outcome"]
    if out["status"] == "member":
        w = membership.MembershipWitness(
            doc["inputs"]["degree"],
            tuple((unrat(t["coefficient"]), tuple(t["multidegree"])) for t in out["terms"]),
        )
        if not membership.verify_witness(target, T, w):
            return False, "witness does not re-expand to the target"
        return True, "membership witness verified"
    r = membership.InfeasibleAtDegree(
        doc["inputs"]["degree"], {tuple(t["exponent"]): unrat(t["value"]) for t in out["functional"]}
    )
    if not membership.verify_refutation(target, T, r):
        return False, "Farkas functional is not a valid refutation"
    return True, f"no representation of degree <= {r.degree} (Farkas functional verified)"


def _face_from_json(nvars, d) -> support.FaceData:
    return support.FaceData(
        tuple(unrat(x) for x in d["normal"]),
        unrat(d["value"]),
        support.SupportSet(nvars, d["members"]),
        d["dim"],
    )


def _complete(f: Polynomial, faces: list[support.FaceData]) -> bool:
    """The listed faces are exactly the proper faces, each with its canonical normal."""

    def key(F):
        return sorted(F.members.points), tuple(F.normal), F.value, F.dim

    return sorted(map(key, faces)) == sorted(map(key, support.newton_faces(f)))


def _verify_newton(doc):
    f = _poly(doc, doc["inputs"]["f"])
    pts = sorted(f.support())
    out = doc["outcome"]
    verts = {tuple(v) for v in out["vertices"]}
    faces = [_face_from_json(f.nvars, d) for d in out["faces"]]
    if not _complete(f, faces):
        return False, "face list is not the set of proper faces with canonical normals"
    for face in faces:
        if not face.check(pts):
            return False, f"face {face.members.to_list()} fails strict separation"
    if len(pts) > 1:
        certified = {next(iter(F.members.points)) for F in faces if len(F.members) == 1}
        if verts - certified:
            return False, f"vertices without a separating normal: {sorted(verts - certified)}"
    elif verts != set(pts):
        return False, "single support point must be the only vertex"
    inner = {tuple(d["point"]): d["combination"] for d in out["non_vertices"]}
    if set(inner) | verts != set(pts) or set(inner) & verts:
        return False, "vertices and non-vertices do not partition the support"
    for p, comb in inner.items():
        weights = [(tuple(c["vertex"]), unrat(c["weight"])) for c in comb]
        if any(w < 0 or v not in verts for v, w in weights) or sum(w for _, w in weights) != 1:
            return False, f"bad convex combination for {p}"
        if tuple(sum(w * v[i] for v, w in weights) for i in range(f.nvars)) != p:
            return False, f"convex combination does not reproduce {p}"
    return True, f"{len(verts)} vertices and {len(faces)} faces verified"


def _verify_initial(doc):
    f = _poly(doc, doc["inputs"]["f"])
    out = doc["outcome"]
    if "w" in doc["inputs"]:
        w = [unrat(x) for x in doc["inputs"]["w"]]
        v = valuation.valuation(f, w)
        shown = "inf" if v == float("inf") else rat(v)
        if shown != out["valuation"] or _poly(doc, out["initial_part"]) != valuation.initial_part(f, w):
            return False, "valuation or initial part does not match"
        return True, "valuation and initial part verified"
    pts = sorted(f.support())
    if not _complete(f, [_face_from_json(f.nvars, d) for d in out["proper_initial_parts"]]):
        return False, "initial parts do not cover every proper face"
    all_ok = True
    for d in out["proper_initial_parts"]:
        face = _face_from_json(f.nvars, d)
        if not face.check(pts):
            return False, f"face {face.members.to_list()} fails strict separation"
        part = _poly(doc, d["initial_part"])
        if part != valuation.initial_part(f, face.normal):
            return False, "initial part does not match its face normal"
        all_ok &= is_nonneg_coeffs(part)[0]
    if all_ok != out["initial_parts_nonneg"]:
        return False, "initial_parts_nonneg flag disagrees with the listed initial parts"
    return True, "initial parts verified"


def _verify_frobenius(doc):
    p = powers.SemigroupParams(doc["inputs"]["l1"], doc["inputs"]["l2"], doc["inputs"]["k"])
    m = doc["outcome"]["conductor"]
    if m > 0 and powers.semigroup_member(m - 1, p) is not None:
        return False, f"{m - 1} is representable, so the conductor is smaller"
    run = doc["outcome"]["witnesses"]
    if [w["m"] for w in run] != list(range(m, m + min(p.l1, p.l2))):
        return False, "witness run does not cover min(l1, l2) consecutive values from the conductor"
    for w in run:
        if w["a"] < p.k or w["b"] < p.k or w["a"] * p.l1 + w["b"] * p.l2 != w["m"]:
            return False, f"bad witness for {w['m']}"
    return True, f"conductor {m} verified"


_VERIFIERS = {
    "polya": _verify_polya,
    "certify": _verify_certify,
    "powers": _verify_powers,
    "member": _verify_member,
    "newton": _verify_newton,
    "initial": _verify_initial,
    "frobenius": _verify_frobenius,
}
