"""Seeded census: random smooth hypersurfaces pushed through the whole pipeline.

Each trial draws a form of degree d in n+2 variables with independent uniform
coefficients, keeps it when the smoothness certificate is clean, counts its
rational outer Galois points, normalises it when it has any, and then runs
the cover round trip::

    Y  --cover-->  C  --random g-->  H = C o g  --recover_branch-->  Y'

closing the loop with :func:`~cyclic_covers.recovery.base_equivalence`,
whose block-extracted witness is re-checked by exact substitution.

Reproducibility: trial i uses the i-th output of SplitMix64(seed) as its own
seed.  The coefficients come from that stream first, then the seed of g.
The report is plain data with no timings, so identical parameters give
byte-identical JSON.
"""

from __future__ import annotations

import json
import math

from .cover import cover_equation
from .equiv import verify_equivalence
from .errors import CharDividesDegree, CoverError, Falsification, GaloisBoundViolation
from .fields import Field
from .galois import enumerate_galois, structure_normalize
from .hypersurface import DEFAULT_POINT_CAP, Hypersurface, smoothness_certificate
from .poly import Polynomial, apply_linear, monomials
from .projlin import random_invertible
from .recovery import base_equivalence, recover_branch
from .rng import SplitMix64

__all__ = ["census", "random_form", "trial_seeds", "report_json"]

SCOPE_NOTE = ("n = 1 (plane curves) lies outside the range n >= 2 of the injectivity theorem; "
              "the pipeline runs unchanged and results are reported for information")


def trial_seeds(seed: int, trials: int):
    master = SplitMix64(seed)
    return [master.next_u64() for _ in range(trials)]


def random_form(field: Field, d: int, nvars: int, rng: SplitMix64) -> Polynomial:
    """Uniform coefficients, in monomial order, for every degree-d monomial."""
    elems = field.elements()
    terms = {}
    for e in monomials(nvars, d):
        c = elems[rng.below(len(elems))]
        if c != field.zero:
            terms[e] = c
    return Polynomial(field, nvars, d, terms, check=False)


def _run_trial(field, d, n, index, tseed, ext_max, cap, out):
    rng = SplitMix64(tseed)
    F = random_form(field, d, n + 2, rng)
    g_seed = rng.next_u64()
    bundle = {"index": index, "trial_seed": tseed, "poly": F.to_text(), "g_seed": g_seed}
    if F.is_zero():
        out["rejected_zero"] += 1
        return None
    Y = Hypersurface(F)
    if not smoothness_certificate(Y, ext_max, cap).clean:
        out["rejected_singular"] += 1
        return None
    out["retained"] += 1

    report = enumerate_galois(Y, ext_max, cap)
    delta = report.delta_lower_bound
    out["delta_histogram"][str(delta)] = out["delta_histogram"].get(str(delta), 0) + 1
    if not report.bound_respected:
        raise GaloisBoundViolation(
            f"{delta} outer Galois points found, bound is {report.bound}", bundle | {"galois": report.to_json()})
    rational = report.rational_points()
    if rational:
        out["galois_positive"] += 1
        form = structure_normalize(Y, rational)
        out["structure_normalized"] += 1
        out["structure_r"][str(form.r)] = out["structure_r"].get(str(form.r), 0) + 1

    g = random_invertible(field, n + 3, g_seed)
    bundle["g"] = g.to_json()
    H = Hypersurface(apply_linear(cover_equation(Y.equation), g))
    rec = recover_branch(H, cap=cap)
    W = rec.witness
    g_lift = g if W.field == field else type(g)(W.field, [[field.lift(x, W.field) for x in r] for r in g.rows])
    T = base_equivalence(Y, rec.branch, g_lift @ W)
    if not verify_equivalence(Y, rec.branch, T):
        raise Falsification("round trip produced a witness that fails exact substitution", bundle)
    out["round_trip_pass"] += 1
    if T.field != field:
        out["witness_over_extension"] += 1
    return None


def census(field: Field, d: int, n: int, trials: int, seed: int, ext_max: int = 1,
           cap: int = DEFAULT_POINT_CAP) -> dict:
    """Run ``trials`` seeded trials and return the aggregate report (a dict).

    A falsification (bound violation, block-structure violation, failed round
    trip) stops the run; the report then carries ``halted = true`` and the
    reproduction bundle in ``failures``.  Operational errors in single trials
    (for example a missing Galois point under the search cap) are recorded as
    failures without halting.
    """
    field.require_finite("census")
    if math.gcd(field.p, d) != 1:
        raise CharDividesDegree(field.p, d)
    if n < 1:
        raise ValueError("census needs n >= 1")
    out = {
        "params": {"field": field.spec_text(), "d": d, "n": n, "trials": trials, "seed": seed,
                   "ext_max": ext_max, "cap": cap},
        "scope_note": SCOPE_NOTE if n < 2 else "",
        "smoothness_bound_k": ext_max,
        "retained": 0,
        "rejected_singular": 0,
        "rejected_zero": 0,
        "delta_histogram": {},
        "galois_positive": 0,
        "structure_normalized": 0,
        "structure_r": {},
        "round_trip_pass": 0,
        "witness_over_extension": 0,
        "failures": [],
        "falsification": False,
        "halted": False,
    }
    for index, tseed in enumerate(trial_seeds(seed, trials)):
        try:
            _run_trial(field, d, n, index, tseed, ext_max, cap, out)
        except Falsification as exc:
            bundle = exc.bundle if getattr(exc, "bundle", None) else {"index": index, "trial_seed": tseed}
            out["failures"].append({"kind": type(exc).__name__, "message": str(exc), "seed": seed,
                                    "reproduction": bundle})
            out["falsification"] = True
            out["halted"] = True
            break
        except CoverError as exc:
            out["failures"].append({"kind": type(exc).__name__, "message": str(exc), "seed": seed,
                                    "reproduction": {"index": index, "trial_seed": tseed}})
    out["delta_histogram"] = dict(sorted(out["delta_histogram"].items(), key=lambda kv: int(kv[0])))
    out["structure_r"] = dict(sorted(out["structure_r"].items(), key=lambda kv: int(kv[0])))
    return out


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)
