"""Property suites behind ``perichar selftest`` and the acceptance tests.

Each ``check_*`` driver returns a :class:`CheckResult`.  Drivers are
deterministic (seeded sampling, sorted iteration) so their JSON reports are
byte-identical across runs.  Timing is kept out of the reports for that
reason; callers measure it separately.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, combinations_with_replacement, product
from typing import Callable

from .euler import (delta1_r, euler_characteristic, euler_characteristic_direct,
                    surjectivity_probe, validate_levi_weight)
from .laurent import LaurentPolynomial
from .schur import schur_laurent, schur_ssyt_oracle
from .superchar import (SupercharElement, SupercharError, ThinKacCombination,
                        ds_eval, ds_iterate, jn_membership, kernel_decompose,
                        pair_evaluate, sch_natural, sch_thin_kac, sign_table,
                        tensor_V_decompose, thin_kac_to_poly, translate_thin_kac,
                        translation_case)
from .weights import ball_moves, parity, to_diagram

PROBE_CASES = ((3, 1), (4, 1), (5, 1), (5, 2))
PROBE_A_RANGE = tuple(range(-4, 5))
GOLDEN_SIGN_TABLE_N2 = {1: {(1, 0): -1}, 0: {(0, -1): -1}}


@dataclass
class Scale:
    name: str
    schur_n: int = 4
    schur_size: int = 8
    kac_n: int = 4          # thin Kac formula vs. oracle
    member_n: int = 5       # containment / kernel samples
    weight_bound: int = 3
    kernel_n: int = 4
    kernel_samples: int = 100
    hom_pairs: int = 50
    pieri_n: int = 4
    pieri_bound: int = 2
    euler_n: int = 4
    euler_max_roots: int = 8
    filtration_ns: tuple = (4, 5, 6)
    probe_cases: tuple = PROBE_CASES


FULL = Scale("full")
QUICK = Scale("quick", schur_n=3, schur_size=6, kac_n=3, member_n=3, weight_bound=2,
              kernel_n=3, kernel_samples=30, hom_pairs=15, pieri_n=3, pieri_bound=2,
              euler_n=3, euler_max_roots=6, filtration_ns=(4,), probe_cases=((3, 1), (4, 1)))
SCALES = {"full": FULL, "quick": QUICK}


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: object = None
    details: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out


# -- sample generation ---------------------------------------------------------

def dominant_weights(n: int, bound: int) -> list[tuple]:
    """Dominant weights with all entries in ``[-bound, bound]``, lex ascending."""
    out = [tuple(sorted(c, reverse=True))
           for c in combinations_with_replacement(range(-bound, bound + 1), n)]
    return sorted(out)


def partitions(size_limit: int, parts: int) -> list[tuple]:
    out = []

    def rec(prefix, remaining, cap):
        if len(prefix) == parts:
            out.append(tuple(prefix))
            return
        for v in range(min(cap, remaining), -1, -1):
            rec(prefix + [v], remaining - v, v)

    rec([], size_limit, size_limit)
    return sorted(out)


def _by_partition(weights):
    # group shifts of one partition together so cached products get reused
    return sorted(weights, key=lambda w: (tuple(v - w[-1] for v in w), w))


def power_difference(n: int, k: int) -> SupercharElement:
    """``sum x_i^k - sum x_i^{-k}``, a member of J_n for every k."""
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = 1
        e[i] = -k
        terms[tuple(e)] = terms.get(tuple(e), 0) - 1
    return SupercharElement(n, LaurentPolynomial(n, terms), check=False)


def determinant_power(n: int, c: int) -> SupercharElement:
    return SupercharElement(n, LaurentPolynomial.monomial((c,) * n), check=False)


def random_jn_member(n: int, rng: random.Random, thin_kac: bool = True) -> SupercharElement:
    """A random element of J_n built from products of known members.

    Each term is a product of one or two cheap generators (power differences,
    powers of the determinant), optionally times one small thin Kac class.
    Keeping at most one thin Kac factor bounds the size at n = 6.
    """
    cheap = [power_difference(n, 1), power_difference(n, 2),
             determinant_power(n, 1), determinant_power(n, -1)]
    small = [w for w in dominant_weights(n, 1) if _ssyt_limit(w) <= 2]
    out = SupercharElement.constant(n, rng.randint(-3, 3))
    for _ in range(rng.randint(1, 3)):
        term = SupercharElement.constant(n, rng.choice([-2, -1, 1, 2]))
        for _ in range(rng.randint(1, 2)):
            term = term * rng.choice(cheap)
        if thin_kac and rng.random() < 0.5:
            term = term * sch_thin_kac(rng.choice(small))
        out = out + term
    return out


def _ssyt_limit(lam) -> int:
    return sum(v - lam[-1] for v in lam) if lam else 0


def _direct_r_minus1(n: int) -> LaurentPolynomial:
    out = LaurentPolynomial.one(n)
    for i, j in combinations(range(n), 2):
        e = [0] * n
        e[i] = e[j] = 1
        out = out * (LaurentPolynomial.one(n) - LaurentPolynomial.monomial(e))
    return out


def _weights_str(w) -> str:
    return ",".join(str(v) for v in w)


# -- criteria ----------------------------------------------------------------------

def check_schur_oracle(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("schur_oracle_agreement", True)
    for n in range(1, scale.schur_n + 1):
        for part in partitions(scale.schur_size, n):
            for c in range(-2, 3):
                lam = tuple(v + c for v in part)
                res.checked += 1
                if schur_laurent(lam) != schur_ssyt_oracle(lam, size_limit=scale.schur_size):
                    res.passed = False
                    res.counterexample = list(lam)
                    return res
    return res


def check_thin_kac_formula(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("thin_kac_supercharacter_formula", True)
    for n in range(1, scale.kac_n + 1):
        r = _direct_r_minus1(n)
        for lam in dominant_weights(n, scale.weight_bound):
            sign = -1 if parity(lam) else 1
            expected = (r * schur_ssyt_oracle(lam, size_limit=_ssyt_limit(lam))).scale(sign)
            res.checked += 1
            if sch_thin_kac(lam).poly != expected:
                res.passed = False
                res.counterexample = list(lam)
                return res
    return res


def containment_samples(scale: Scale = FULL, seed: int = 11):
    """Yield ``(label, element)``: thin Kac classes and products of two of them."""
    rng = random.Random(seed)
    for n in range(1, scale.member_n + 1):
        weights = dominant_weights(n, scale.weight_bound)
        for lam in _by_partition(weights):
            yield f"nabla({_weights_str(lam)})", sch_thin_kac(lam)
        if n <= 3:
            pairs = list(combinations_with_replacement(weights, 2))
        elif n == 4:
            small = dominant_weights(n, 1)
            pairs = list(combinations_with_replacement(small, 2))
            pairs += [tuple(rng.sample(weights, 2)) for _ in range(100)]
        else:
            small = dominant_weights(n, 1)
            pairs = [tuple(rng.sample(small, 2)) for _ in range(15)]
        for a, b in pairs:
            yield (f"nabla({_weights_str(a)})*nabla({_weights_str(b)})",
                   sch_thin_kac(a) * sch_thin_kac(b))


def euler_samples(scale: Scale = FULL):
    """Yield admissible ``(gamma, lam)`` with at most ``euler_max_roots`` radical roots.

    ``gamma`` runs over weakly decreasing vectors in ``{-1, 0, 1}^n``; ``lam``
    takes values in ``{-1, 0, 1, 2}`` on each Levi block (blocks are the
    classes of ``|gamma_i|``).
    """
    for n in range(1, scale.euler_n + 1):
        for gamma in combinations_with_replacement((1, 0, -1), n):
            if len(delta1_r(gamma)) > scale.euler_max_roots:
                continue
            blocks = sorted({abs(g) for g in gamma})
            for values in product((-1, 0, 1, 2), repeat=len(blocks)):
                lookup = dict(zip(blocks, values))
                lam = tuple(lookup[abs(g)] for g in gamma)
                assert validate_levi_weight(lam, gamma)
                yield gamma, lam


def check_containment(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("jn_containment", True)
    counts = {"thin_kac": 0, "products": 0, "euler": 0}
    for label, f in containment_samples(scale):
        res.checked += 1
        counts["products" if "*" in label else "thin_kac"] += 1
        if not jn_membership(f):
            res.passed = False
            res.counterexample = label
            return res
    for gamma, lam in euler_samples(scale):
        res.checked += 1
        counts["euler"] += 1
        if not jn_membership(euler_characteristic(lam, gamma)):
            res.passed = False
            res.counterexample = {"gamma": list(gamma), "lambda": list(lam)}
            return res
    res.details = counts
    return res


def check_kernel(scale: Scale = FULL, seed: int = 7) -> CheckResult:
    res = CheckResult("ds_kernel_thin_kac", True)
    # (a) thin Kac classes and their products lie in the kernel
    for label, f in containment_samples(scale):
        if f.n < 2:
            continue
        res.checked += 1
        if not ds_eval(f).is_zero():
            res.passed = False
            res.counterexample = label
            return res
    # (b) decomposition roundtrip on random combinations
    rng = random.Random(seed)
    for _ in range(scale.kernel_samples):
        n = rng.randint(2, scale.kernel_n)
        weights = dominant_weights(n, scale.weight_bound)
        size = rng.randint(1, 5)
        coeffs = {lam: rng.choice([c for c in range(-9, 10) if c])
                  for lam in rng.sample(weights, size)}
        c = ThinKacCombination(n, coeffs)
        res.checked += 1
        back = kernel_decompose(thin_kac_to_poly(c))
        if back != c:
            res.passed = False
            res.counterexample = c.to_json_obj()
            return res
    # (c) rejection of a non-kernel element
    x1, x2 = LaurentPolynomial.variables(2)
    res.checked += 1
    try:
        kernel_decompose(SupercharElement(2, x1 + x2))
    except SupercharError as exc:
        if str(exc) != "not in kernel":
            res.passed = False
            res.counterexample = f"wrong error: {exc}"
    else:
        res.passed = False
        res.counterexample = "x1+x2 accepted"
    return res


def check_ds_homomorphism(scale: Scale = FULL, seed: int = 5) -> CheckResult:
    res = CheckResult("ds_ring_homomorphism", True)
    rng = random.Random(seed)
    n = 4
    nonzero = 0
    members = []
    for idx in range(scale.hom_pairs):
        f, g = random_jn_member(n, rng), random_jn_member(n, rng)
        members += [f, g]
        df, dg = ds_eval(f), ds_eval(g)
        nonzero += (not df.is_zero()) + (not dg.is_zero())
        res.checked += 1
        if ds_eval(f + g) != df + dg or ds_eval(f * g) != df * dg:
            res.passed = False
            res.counterexample = {"pair": idx, "f": f.poly.to_json_obj(), "g": g.poly.to_json_obj()}
            return res
    for f in members:
        ref = ds_eval(f).poly
        for i, j in combinations(range(1, n + 1), 2):
            for a, b in ((i, j), (j, i)):
                res.checked += 1
                if pair_evaluate(f, a, b) != ref:
                    res.passed = False
                    res.counterexample = {"pair": [a, b], "f": f.poly.to_json_obj()}
                    return res
    res.details = {"nonzero_images": nonzero}
    return res


def _pieri_oracle(lam) -> LaurentPolynomial:
    """``sch nabla(lam) * sch V`` from independently built pieces."""
    n = len(lam)
    v_terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = 1
        v_terms[tuple(e)] = 1
        e[i] = -1
        v_terms[tuple(e)] = -1
    sign = -1 if parity(lam) else 1
    s = schur_ssyt_oracle(lam, size_limit=_ssyt_limit(lam))
    return (_direct_r_minus1(n) * s * LaurentPolynomial(n, v_terms)).scale(sign)


def check_translation(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("translation_pieri_completeness", True)
    observed = {}
    for n in range(1, scale.pieri_n + 1):
        for lam in dominant_weights(n, scale.pieri_bound):
            bullets = to_diagram(lam)
            window = range(min(bullets) - 2, max(bullets) + 3)
            total = ThinKacCombination(n)
            for k in window:
                t = translate_thin_kac(lam, k)
                total = total + t
                case = translation_case(lam, k)
                moves = {m.target: m.direction for m in ball_moves(lam) if m.source == k}
                expected_size = {1: 1, 2: 1, 3: 2, 4: 0}[case]
                expected_dirs = {1: {1}, 2: {-1}, 3: {1, -1}, 4: set()}[case]
                got_dirs = {moves.get(mu) for mu in t.coeffs}
                res.checked += 1
                if len(t.coeffs) != expected_size or got_dirs != expected_dirs:
                    res.passed = False
                    res.counterexample = {"lambda": list(lam), "k": k, "case": case,
                                          "got": t.to_json_obj()}
                    return res
                for mu, c in t.coeffs.items():
                    key = f"case{case}:{'right' if moves[mu] > 0 else 'left'}:{c:+d}"
                    observed[key] = observed.get(key, 0) + 1
            res.checked += 1
            if total != tensor_V_decompose(lam) or thin_kac_to_poly(total).poly != _pieri_oracle(lam):
                res.passed = False
                res.counterexample = {"lambda": list(lam), "sum": total.to_json_obj()}
                return res
    table = sign_table((0, 0))
    res.checked += 1
    if table != GOLDEN_SIGN_TABLE_N2:
        res.passed = False
        res.counterexample = {"sign_table_n2": {str(k): {_weights_str(m): c for m, c in v.items()}
                                                for k, v in table.items()}}
        return res
    golden = load_golden("sign_table.json")
    if scale is FULL and golden is not None:
        res.checked += 1
        if dump_json(sign_table_golden()) != golden:
            res.passed = False
            res.counterexample = "sign table differs from golden file"
            return res
    res.details = {"sign_patterns": dict(sorted(observed.items()))}
    return res


def check_euler_routes(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("euler_subset_vs_direct", True)
    for gamma, lam in euler_samples(scale):
        res.checked += 1
        if euler_characteristic(lam, gamma) != euler_characteristic_direct(lam, gamma):
            res.passed = False
            res.counterexample = {"gamma": list(gamma), "lambda": list(lam)}
            return res
    return res


def check_euler_literal_example(scale: Scale = FULL) -> CheckResult:
    """The literal target ``(x1 + x2) - (x1^-1 + x2^-1)`` for n=2, gamma=(0,-1), lam=(1,0)."""
    res = CheckResult("euler_literal_example", True, checked=1)
    x1, x2 = LaurentPolynomial.variables(2)
    target = (x1 + x2) - (LaurentPolynomial.monomial((-1, 0)) + LaurentPolynomial.monomial((0, -1)))
    got = euler_characteristic((1, 0), (0, -1)).poly
    if got != target:
        res.passed = False
        res.counterexample = {"expected": target.to_json_obj(), "computed": got.to_json_obj()}
    res.details = {"computed": str(got)}
    return res


def probe_reports(scale: Scale = FULL) -> list[dict]:
    return [surjectivity_probe(n, k, PROBE_A_RANGE) for n, k in scale.probe_cases]


def check_probe(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("nabla0_preimage_probe", True)
    hits = {}
    reports = probe_reports(scale)
    for rep in reports:
        good = [row["a"] for row in rep["rows"] if row["equals_plus"] or row["equals_minus"]]
        res.checked += len(rep["rows"])
        hits[f"n={rep['n']},k={rep['k']}"] = good
        if not good:
            res.passed = False
            res.counterexample = {"n": rep["n"], "k": rep["k"]}
    golden = load_golden("probe_reports.json")
    if scale is FULL and golden is not None:
        res.checked += 1
        if dump_json(reports) != golden:
            res.passed = False
            res.counterexample = "probe report differs from golden file"
    res.details = {"matching_a": hits}
    return res


def filtration_samples(scale: Scale = FULL, seed: int = 3):
    rng = random.Random(seed)
    for n in scale.filtration_ns:
        weights = dominant_weights(n, scale.weight_bound if n <= 5 else 1)
        for lam in weights:
            yield sch_thin_kac(lam)
        for _ in range(6):
            yield random_jn_member(n, rng)
        for _ in range(3):
            a, b = rng.sample(weights, 2)
            yield sch_thin_kac(a) * random_jn_member(n, rng, thin_kac=False) + sch_thin_kac(b)


def check_filtration(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("kernel_filtration_monotone", True)
    levels = {}
    for f in filtration_samples(scale):
        n = f.n
        images = [f]
        for _ in range(n // 2):
            images.append(ds_eval(images[-1]))
        first = next((k for k, d in enumerate(images) if d.is_zero()), None)
        key = f"n={n}"
        levels.setdefault(key, {})
        label = "none" if first is None else str(first)
        levels[key][label] = levels[key].get(label, 0) + 1
        for k in range(len(images) - 1):
            res.checked += 1
            if images[k].is_zero() and not images[k + 1].is_zero():
                res.passed = False
                res.counterexample = {"n": n, "k": k, "f": f.poly.to_json_obj()}
                return res
        # the full composite agrees with step-by-step evaluation
        res.checked += 1
        if ds_iterate(f, n // 2) != images[-1]:
            res.passed = False
            res.counterexample = {"n": n, "composite": True}
            return res
    res.details = {"first_kernel_level": levels}
    return res


def check_serialization(scale: Scale = FULL) -> CheckResult:
    res = CheckResult("json_roundtrip", True)
    polys = [f.poly for _, f in containment_samples(QUICK)]
    polys += [euler_characteristic(lam, gamma).poly for gamma, lam in euler_samples(QUICK)]
    for f in polys:
        text = f.to_json()
        res.checked += 1
        back = LaurentPolynomial.from_json(text)
        if back != f or back.to_json() != text:
            res.passed = False
            res.counterexample = text[:200]
            return res
    return res


CRITERIA: dict[str, Callable[[Scale], CheckResult]] = {
    "1": check_schur_oracle,
    "2": check_thin_kac_formula,
    "3": check_containment,
    "4": check_kernel,
    "5": check_ds_homomorphism,
    "6": check_translation,
    "7a": check_euler_routes,
    "7b": check_euler_literal_example,
    "8": check_probe,
    "9": check_filtration,
    "10": check_serialization,
}


def run_all(scale: Scale = FULL, timings: dict | None = None, cancel=None) -> list[CheckResult]:
    out = []
    for key, fn in CRITERIA.items():
        if cancel is not None:
            cancel.check()
        start = time.perf_counter()
        r = fn(scale)
        if timings is not None:
            timings[key] = time.perf_counter() - start
        out.append(r)
    return out


# -- golden files ----------------------------------------------------------------

def dump_json(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def load_golden(name: str) -> str | None:
    try:
        return resources.files("perichar").joinpath("golden", name).read_text()
    except (FileNotFoundError, OSError):
        return None


def sign_table_golden(n_max: int = 3, bound: int = 1) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        for lam in dominant_weights(n, bound):
            for k, terms in sign_table(lam).items():
                for mu, c in sorted(terms.items()):
                    direction = "right" if sum(mu) > sum(lam) else "left"
                    rows.append({"lambda": list(lam), "k": k, "case": translation_case(lam, k),
                                 "target": list(mu), "move": direction, "sign": c})
    return rows


def golden_files() -> dict[str, str]:
    return {"probe_reports.json": dump_json(probe_reports(FULL)),
            "sign_table.json": dump_json(sign_table_golden())}
