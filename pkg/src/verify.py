"""
SKEWRANK - Verification Scenarios

Each scenario checks statements about B = A[[y; alpha]] exactly on the
truncations B_N and returns a Report. Statements about the infinite rings
B and B' are recorded as certified when they follow from conditions
checked on A; when such a condition fails, a truncated witness is built
instead.
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

import field as fp
from algebra import Algebra, is_homomorphism
from alpha_ideals import (alpha_prime_ideals, alpha_prime_witness, enumerate_alpha_ideals,
                          is_alpha_prime, orbit_intersection, require_alpha_ideal)
from config import get_settings
from errors import SpecError, TooLarge, VerificationFailed
from ideals import (Ideal, RightIdeal, ideal_power, ideal_product, intersect_all, is_direct_sum,
                    products, quotient_algebra, whole_ideal, zero_ideal)
from induced import (induced_membership, induced_view, random_member, reduce_mod_induced,
                     rewrite_in_generators)
from laurent import (SkewLaurent, conjugate_by_y, laurent_invert, laurent_mul,
                     laurent_semiprime_witness, random_laurent)
from modules import (enumerate_submodules, is_chain, is_simple, peel_simple_submodules,
                     regular_module, submodule_of_regular, uniform_dimension)
from report import Report
from series import (SkewContext, SkewSeries, extend_alpha, from_right_coefficients, invert_unit,
                    mul_by_y_power, random_series, random_unit, reduce_mod_y, semiprime_witness,
                    to_right_coefficients)
from structure import (enumerate_prime_ideals, goldie_rank, is_semiprime, is_semiprime_ideal,
                       jacobson_radical, require_semiprime, simple_right_ideal_decomposition)
from truncation import TruncationRing, build_truncation, contract, induced_ideal_truncated, induced_module

logger = logging.getLogger("skewrank.verify")

CERT_ALPHA_PRIME = "A alpha-prime => B, B' alpha-prime, B' prime, B prime (A noetherian)"
CERT_SEMIPRIME = "A semiprime => B and B' semiprime (f B' f != 0 for nonzero f)"
CERT_RANK_LAURENT = "B' is the localization of B at the normal element y; rank B' = rank B = rank A"
CERT_INDUCED_SEMIPRIME = "A/I semiprime and B/IB = (A/I)[[y; alpha]] => IB semiprime"
CERT_INDUCED_ALPHA_PRIME = "I alpha-prime <=> 0 alpha-prime in A/I <=> (A/I)[[y; alpha]] = B/IB alpha-prime"


def _method_for(size: int) -> str:
    settings = get_settings()
    return "both" if settings.oracle and size <= settings.limits.max_enum else "socle"


def _attempt(report: Report, name: str, fn: Callable[[], bool], witness=None) -> bool:
    """Record fn() as a claim; a failed internal verification is a failed claim"""
    try:
        ok = bool(fn())
    except VerificationFailed as exc:
        report.check(name, False, exc.witness, detail=str(exc))
        return False
    return report.check(name, ok, None if ok else witness)


def _rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(get_settings().seed if seed is None else seed)


# ============================================
# Series arithmetic
# ============================================

def verify_series_laws(ctx: SkewContext, N: Optional[int] = None, samples: Optional[int] = None,
                       seed: Optional[int] = None) -> Report:
    """Ring laws of B and B' modulo y^N on exhaustive basis checks and random samples"""
    settings = get_settings()
    N = N or settings.default_precision
    samples = settings.samples if samples is None else samples
    rng = _rng(seed)
    A = ctx.algebra
    alpha = ctx.alpha
    report = Report(f"series laws {ctx.name} N={N}")
    report.data["precision"] = N

    y = SkewSeries.y(ctx, N)
    bad = [e.to_list() for e in A.basis()
           if y * SkewSeries.constant(ctx, e, N) != SkewSeries.constant(ctx, alpha(e), N) * y]
    report.check("defining_relation", not bad, bad[:1])

    def graded() -> bool:
        for a in A.basis():
            for b in A.basis():
                for i in range(N):
                    for j in range(N - i):
                        lhs = SkewSeries.monomial(ctx, a, i, N) * SkewSeries.monomial(ctx, b, j, N)
                        rhs = SkewSeries.monomial(ctx, a * alpha.apply(b, i), i + j, N)
                        if lhs != rhs:
                            return False
        return True
    _attempt(report, "graded_law", graded)

    triples = [tuple(random_series(ctx, N, rng) for _ in range(3)) for _ in range(samples)]
    failed = next(((f, g, h) for f, g, h in triples if (f * g) * h != f * (g * h)), None)
    report.check("associativity", failed is None, None if failed is None else repr(failed[0]))

    one = SkewSeries.one(ctx, N)
    report.check("unit_law", all(f * one == f and one * f == f for f, _, _ in triples))
    report.check("y_shift", all(mul_by_y_power(f, 1) == y * f
                                and mul_by_y_power(f, 1, side="right") == f * y
                                for f, _, _ in triples))
    report.check("right_coefficients_roundtrip",
                 all(from_right_coefficients(ctx, to_right_coefficients(f)) == f
                     for f, _, _ in triples))
    report.check("reduce_mod_y_homomorphism",
                 all(reduce_mod_y(f * g) == reduce_mod_y(f) * reduce_mod_y(g)
                     for f, g, _ in triples))
    report.check("extend_alpha_multiplicative",
                 all(extend_alpha(f * g) == extend_alpha(f) * extend_alpha(g)
                     for f, g, _ in triples))

    def inversion() -> bool:
        for _ in range(samples):
            f = random_series(ctx, N, rng, unit_constant=True)
            g = invert_unit(f)
            if f * g != one or g * f != one:
                return False
        return True
    _attempt(report, "inversion_roundtrip", inversion)

    laurents = [random_laurent(ctx, rng, N) for _ in range(samples)]
    report.check("conjugation_is_extend_alpha",
                 all(conjugate_by_y(f) == extend_alpha(f) for f in laurents))

    def laurent_units() -> bool:
        for _ in range(samples):
            coeffs = rng.integers(0, A.p, size=(N, A.dim))
            coeffs[0] = random_unit(A, rng).coords
            f = SkewLaurent(ctx, int(rng.integers(-3, 4)), coeffs)
            g = laurent_invert(f)
            unit = SkewLaurent.y_power(ctx, 0, N)
            if laurent_mul(f, g) != unit or laurent_mul(g, f) != unit:
                return False
        return True
    _attempt(report, "laurent_units_invertible", laurent_units)
    return report.finish()


def verify_truncation(ctx: SkewContext, N: int, samples: Optional[int] = None,
                      seed: Optional[int] = None) -> Report:
    """B_N multiplication against series arithmetic; y normal; B_1 = A"""
    samples = get_settings().samples if samples is None else samples
    rng = _rng(seed)
    T = build_truncation(ctx, N)
    B = T.algebra
    report = Report(f"truncation {ctx.name} N={N}")
    report.data["dim_B_N"] = B.dim

    def basis_pairs() -> bool:
        for x in B.basis():
            for z in B.basis():
                if B.multiply(x, z) != T.from_series(T.to_series(x) * T.to_series(z)):
                    return False
        return True
    report.check("matches_series_on_basis", basis_pairs())

    def random_pairs() -> bool:
        for _ in range(samples):
            f, g = random_series(ctx, N, rng), random_series(ctx, N, rng)
            if B.multiply(T.from_series(f), T.from_series(g)) != T.from_series(f * g):
                return False
        return True
    report.check("matches_series_random", random_pairs())

    y = T.y_elem
    report.check("y_nilpotent", B.power(y, N).is_zero())
    report.check("y_normal", T.is_y_normal())
    report.check("embedding_homomorphism", is_homomorphism(ctx.algebra, B, T.embedding_matrix()))
    report.check("reduction_homomorphism", is_homomorphism(B, ctx.algebra, T.reduction_matrix()))

    T1 = build_truncation(ctx, 1)
    report.check("truncation_one_is_A",
                 np.array_equal(T1.algebra.structure, ctx.algebra.structure)
                 and is_homomorphism(ctx.algebra, T1.algebra, T1.embedding_matrix()))

    if B.size() <= get_settings().limits.max_enum:
        scanned = jacobson_radical(B)
        report.check("radical_structural_matches_scan", scanned == T.radical(),
                     {"scan": scanned.dim, "structural": T.radical().dim})
    return report.finish()


# ============================================
# Uniserial chain and rank
# ============================================

def verify_uniserial_chain(V: RightIdeal, T: TruncationRing, label: str = "V") -> Report:
    """The submodules of V B_N are exactly V B_N y^i, 0 <= i <= N"""
    report = Report(f"uniserial {label}B_{T.N} over {T.context.name}")
    A = T.base
    B = T.algebra
    report.check("V_simple", is_simple(submodule_of_regular(A, V.basis)), V.to_lists())

    M = induced_module(V, T)
    subs = [M.to_ambient(S) for S in enumerate_submodules(M)]
    layers = []
    for i in range(T.N + 1):
        y_i = B.power(T.y_elem, i).coords.reshape(1, -1)
        layers.append(fp.span(products(B, M.embedding, y_i), B.dim, B.p))

    keys = {S.tobytes() + bytes([S.shape[0]]) for S in subs}
    layer_keys = {S.tobytes() + bytes([S.shape[0]]) for S in layers}
    report.data["submodules"] = len(subs)
    report.check("submodule_count", len(subs) == T.N + 1, {"found": len(subs), "expected": T.N + 1})
    report.check("submodules_are_y_layers", keys == layer_keys)
    chain, pair = is_chain(subs, B.p)
    report.check("totally_ordered", chain, pair)
    return report.finish()


def verify_rank_theorem(ctx: SkewContext, N: int) -> Report:
    """udim(B_N) = goldie_rank(A), each V_i B_N uniform, B_N = sum of V_i B_N"""
    A = ctx.algebra
    require_semiprime(A)
    report = Report(f"rank theorem {ctx.name} N={N}")
    Vs = simple_right_ideal_decomposition(A)
    d = goldie_rank(A)
    report.data["goldie_rank_A"] = d
    report.check("decomposition_length", len(Vs) == d, {"summands": len(Vs), "rank": d})

    T = build_truncation(ctx, N)
    B = T.algebra
    radical = T.radical_basis()
    udim = uniform_dimension(regular_module(B), radical=radical, method=_method_for(B.size()))
    report.data["udim_B_N"] = udim
    report.check("udim_B_N_equals_rank_A", udim == d, {"udim": udim, "rank": d})

    modules = [induced_module(V, T) for V in Vs]
    for idx, M in enumerate(modules, start=1):
        u = uniform_dimension(M, radical=radical, method=_method_for(M.size()))
        report.check(f"V{idx}B_N_uniform", u == 1, {"udim": u})

    stacked = np.vstack([M.embedding for M in modules])
    direct = (sum(M.dim for M in modules) == B.dim and fp.rank(stacked, B.p) == B.dim)
    report.check("B_N_direct_sum_of_ViB_N", direct, [M.dim for M in modules])
    report.certify("rank_B_laurent", CERT_RANK_LAURENT, {"rank": d})
    return report.finish()


def verify_uniform_lower_bound(ctx: SkewContext, N: int, ideals: List[RightIdeal]) -> Report:
    """Independent right ideals K_i of A stay independent as K_i B_N"""
    if not is_direct_sum(ideals):
        raise SpecError("right ideals do not have direct sum in A")
    report = Report(f"uniform lower bound {ctx.name} N={N}")
    T = build_truncation(ctx, N)
    B = T.algebra
    modules = [induced_module(K, T) for K in ideals]
    nonzero = [M for M in modules if M.dim]
    if nonzero:
        stacked = np.vstack([M.embedding for M in nonzero])
        independent = fp.rank(stacked, B.p) == sum(M.dim for M in nonzero)
    else:
        independent = True
    report.check("induced_independent", independent, [M.dim for M in modules])
    udim = uniform_dimension(regular_module(B), radical=T.radical_basis(),
                             method=_method_for(B.size()))
    report.data["udim_B_N"] = udim
    report.check("udim_B_N_at_least_family_size", udim >= len(nonzero),
                 {"udim": udim, "family": len(nonzero)})
    return report.finish()


# ============================================
# Alpha-prime and semiprime transfer
# ============================================

def _nilpotency_index(J: Ideal) -> int:
    k = 1
    while not ideal_power(J, k).is_zero():
        k += 1
    return k


def zero_product_witness(A: Algebra, alpha) -> Optional[Tuple[Ideal, Ideal]]:
    """Nonzero alpha-ideals I, J with IJ = 0, or None when 0 is alpha-prime"""
    if A.size() <= get_settings().limits.max_enum:
        return alpha_prime_witness(zero_ideal(A), alpha, enumerate_alpha_ideals(A, alpha))
    J = jacobson_radical(A)
    if not J.is_zero():
        return ideal_power(J, _nilpotency_index(J) - 1), J
    orbits = {}
    for P in enumerate_prime_ideals(A):
        W = orbit_intersection(P, alpha)
        orbits.setdefault(W.key, W)
    walls = list(orbits.values())
    if len(walls) < 2:
        return None
    # semisimple: W_1 (W_2 ... W_r) lies in the intersection of all primes, which is 0
    return walls[0], intersect_all(walls[1:])


def alpha_prime_transfer(ctx: SkewContext, N: Optional[int] = None) -> Report:
    """alpha-primeness of A transferred to B and B', with truncated witnesses otherwise"""
    A = ctx.algebra
    alpha = ctx.alpha
    N = N or get_settings().verify_precision
    report = Report(f"alpha-prime transfer {ctx.name} N={N}")
    T = build_truncation(ctx, N)
    B = T.algebra

    zero = zero_ideal(A)
    alpha_prime = is_alpha_prime(zero, alpha)
    report.data["A_alpha_prime"] = alpha_prime
    if alpha_prime:
        for name in ("B_alpha_prime", "B_laurent_alpha_prime", "B_laurent_prime", "B_prime"):
            report.certify(name, CERT_ALPHA_PRIME, {"A_alpha_prime": True})
    else:
        pair = zero_product_witness(A, alpha)
        if pair is None:
            report.check("falsification_witness", False, detail="no zero-product pair found")
        else:
            I, J = pair
            IB = induced_ideal_truncated(I, T).ideal
            JB = induced_ideal_truncated(J, T).ideal
            product = ideal_product(IB, JB)
            report.check("falsification_witness",
                         not I.is_zero() and not J.is_zero() and product.is_zero(),
                         {"I": I.to_lists(), "J": J.to_lists()})

    for W in alpha_prime_ideals(A, alpha):
        if W.is_whole():
            continue
        IB = induced_ideal_truncated(W, T).ideal
        back = contract(IB, T)
        label = f"contraction[{'/'.join(str(r) for r in W.pivots) or '0'}]"
        report.check(label, back == W and is_alpha_prime(back, alpha), W.to_lists())

    if is_semiprime(A):
        report.certify("B_semiprime", CERT_SEMIPRIME)
    else:
        J = jacobson_radical(A)
        L = ideal_power(J, _nilpotency_index(J) - 1)
        LB = induced_ideal_truncated(L, T).ideal
        report.check("semiprime_contrapositive",
                     not LB.is_zero() and ideal_product(LB, LB).is_zero(),
                     {"L": L.to_lists()})
    report.data["dim_B_N"] = B.dim
    return report.finish()


def verify_induced_corollary(ctx: SkewContext, I: Ideal, N: int) -> Report:
    """rank(A/I) = udim(B_N/IB_N) and I alpha-prime <=> IB alpha-prime"""
    A = ctx.algebra
    alpha = ctx.alpha
    require_alpha_ideal(I, alpha)
    QA = quotient_algebra(A, I, alpha=alpha)
    require_semiprime(QA.algebra)
    label = "/".join(str(r) for r in I.pivots) or "0"
    report = Report(f"induced corollary {ctx.name} I=<{label}> N={N}")

    T = build_truncation(ctx, N)
    induced = induced_ideal_truncated(I, T)
    rank = goldie_rank(QA.algebra)
    QB = induced.quotient.algebra
    reduced = induced.reduced
    iso_inv = fp.inverse(induced.iso, A.p)
    if iso_inv is None:
        raise VerificationFailed("quotient isomorphism is singular")
    radical = (reduced.radical_basis() @ iso_inv) % A.p
    udim = uniform_dimension(regular_module(QB), radical=radical, method=_method_for(QB.size()))
    report.data["rank_A_mod_I"] = rank
    report.data["udim_B_N_mod_IB_N"] = udim
    report.check("rank_equality", rank == udim, {"rank": rank, "udim": udim})

    quotient_ctx = SkewContext(QA.algebra, QA.alpha)
    in_A = is_alpha_prime(I, alpha)
    in_quotient = alpha_prime_transfer(quotient_ctx, N).data["A_alpha_prime"]
    report.check("alpha_prime_biconditional", in_A == in_quotient,
                 {"I_alpha_prime": in_A, "quotient_alpha_prime": in_quotient})
    if in_A:
        report.certify("IB_alpha_prime", CERT_INDUCED_ALPHA_PRIME)
    report.check("I_semiprime", is_semiprime_ideal(A, I))
    report.certify("IB_semiprime", CERT_INDUCED_SEMIPRIME)
    return report.finish()


def _scenario_ideals(ctx: SkewContext) -> List[Ideal]:
    A = ctx.algebra
    if A.size() <= get_settings().limits.max_enum:
        return enumerate_alpha_ideals(A, ctx.alpha)
    return [zero_ideal(A), whole_ideal(A)]


def verify_induced_views(ctx: SkewContext, N: int, ideals: Optional[List[Ideal]] = None,
                         samples: Optional[int] = None, seed: Optional[int] = None) -> Report:
    """I[[y; alpha]] for every alpha-ideal I: rewriting, products, reduction to (A/I)[[y; alpha]]

    Per ideal, `samples` random members are rewritten in the generators of I,
    and B -> (A/I)[[y; alpha]] is checked to be a ring homomorphism whose
    kernel is exactly I[[y; alpha]]. Per pair (I, J), members f of IB and g
    of JB give f g in (IJ)B.
    """
    samples = get_settings().samples if samples is None else samples
    rng = _rng(seed)
    ideals = _scenario_ideals(ctx) if ideals is None else ideals
    report = Report(f"induced views {ctx.name} N={N}")
    views = [induced_view(ctx, I) for I in ideals]
    labels = [f"I{k}" for k in range(len(views))]
    report.data["ideals"] = len(views)
    report.data["ideal_bases"] = {label: view.base_ideal.to_lists()
                                  for label, view in zip(labels, views)}
    report.data["members_per_ideal"] = samples

    for label, view in zip(labels, views):
        members = [random_member(view, N, rng) for _ in range(samples)]

        def rewriting() -> bool:
            for f in members:
                parts = rewrite_in_generators(view, f)
                total = SkewSeries.zero(ctx, N)
                for g, s in zip(view.generators, parts):
                    total = total + SkewSeries.constant(ctx, g, N) * s
                if total != f:
                    return False
            return True
        _attempt(report, f"rewrite[{label}]", rewriting)

        if view.base_ideal.is_whole():
            continue
        one = SkewSeries.one(view.quotient_context, N)
        pairs = [(random_series(ctx, N, rng), random_series(ctx, N, rng)) for _ in range(samples)]
        report.check(f"reduction_unit[{label}]",
                     reduce_mod_induced(view, SkewSeries.one(ctx, N)) == one)
        report.check(f"reduction_homomorphism[{label}]",
                     all(reduce_mod_induced(view, f * g)
                         == reduce_mod_induced(view, f) * reduce_mod_induced(view, g)
                         and reduce_mod_induced(view, f + g)
                         == reduce_mod_induced(view, f) + reduce_mod_induced(view, g)
                         for f, g in pairs))
        report.check(f"reduction_kernel[{label}]",
                     all(reduce_mod_induced(view, f).is_zero() for f in members)
                     and all(reduce_mod_induced(view, f).is_zero() == induced_membership(view, f)
                             for f, _ in pairs))

    per_pair = max(1, samples // max(1, len(views)))
    for left_label, left in zip(labels, views):
        for right_label, right in zip(labels, views):
            IJ = ideal_product(left.base_ideal, right.base_ideal)
            target = induced_view(ctx, IJ)
            ok = all(induced_membership(target,
                                        random_member(left, N, rng) * random_member(right, N, rng))
                     for _ in range(per_pair))
            report.check(f"product[{left_label}*{right_label}]", ok)
    return report.finish()


# ============================================
# Semiprime witnesses
# ============================================

def witness_valuations(order: int, N: int) -> List[int]:
    """Valuations i with N > 2i + (-i mod order)"""
    return [i for i in range(N) if N > 2 * i + ((-i) % order)]


def verify_semiprime_witnesses(ctx: SkewContext, N: Optional[int] = None,
                               samples: Optional[int] = None, seed: Optional[int] = None) -> Report:
    """f g f != 0 for sampled nonzero f in B and B'"""
    settings = get_settings()
    N = N or settings.default_precision
    samples = settings.samples if samples is None else samples
    rng = _rng(seed)
    A = ctx.algebra
    require_semiprime(A)
    report = Report(f"semiprime witnesses {ctx.name} N={N}")
    valuations = witness_valuations(ctx.alpha.order, N)
    report.data["valuations"] = valuations

    def series_side() -> bool:
        for _ in range(samples):
            i = int(rng.choice(valuations))
            coeffs = rng.integers(0, A.p, size=(N, A.dim))
            coeffs[:i] = 0
            while not coeffs[i].any():
                coeffs[i] = rng.integers(0, A.p, size=A.dim)
            f = SkewSeries(ctx, coeffs)
            g = semiprime_witness(f)
            if (f * g * f).is_zero():
                return False
        return True
    _attempt(report, "series_fgf_nonzero", series_side)

    def laurent_side() -> bool:
        for _ in range(samples):
            f = random_laurent(ctx, rng, N)
            if f.is_zero:
                continue
            g = laurent_semiprime_witness(f)
            if laurent_mul(laurent_mul(f, g), f).is_zero:
                return False
        return True
    _attempt(report, "laurent_fgf_nonzero", laurent_side)
    return report.finish()


# ============================================
# Full scenario
# ============================================

def _label(I: Ideal) -> str:
    return "/".join(str(r) for r in I.pivots) or "0"


def verify_context(ctx: SkewContext, N: Optional[int] = None,
                   ideals: Optional[List[Ideal]] = None) -> Report:
    """Every applicable scenario for one (A, alpha)"""
    settings = get_settings()
    N = N or settings.verify_precision
    A = ctx.algebra
    for I in ideals or []:
        require_alpha_ideal(I, ctx.alpha)
        require_semiprime(quotient_algebra(A, I).algebra)
    report = Report(f"verify {ctx.name} N={N}")
    report.data["dim_A"] = A.dim
    report.data["alpha_order"] = ctx.alpha.order
    logger.info("[Verify] scenario %s N=%d", ctx.name, N)

    report.extend(verify_series_laws(ctx, max(N, settings.default_precision)), "series.")
    report.extend(verify_truncation(ctx, N), "truncation.")
    T = build_truncation(ctx, N)

    semiprime = is_semiprime(A)
    report.data["A_semiprime"] = semiprime
    if semiprime:
        report.extend(verify_rank_theorem(ctx, N), "rank.")
        report.extend(verify_semiprime_witnesses(ctx, settings.default_precision), "witness.")
        summands = simple_right_ideal_decomposition(A)
        for idx, V in enumerate(summands, start=1):
            size = A.p ** induced_module(V, T).dim
            if size <= settings.limits.max_enum:
                report.extend(verify_uniserial_chain(V, T, f"V{idx}"), f"uniserial.V{idx}.")
            else:
                report.data[f"uniserial.V{idx}"] = f"skipped, |V B_N| = {size}"
    else:
        M = regular_module(A)
        summands = [RightIdeal(A, S) for S in
                    peel_simple_submodules(M, M.socle(jacobson_radical(A).basis))]
    report.extend(verify_uniform_lower_bound(ctx, N, summands), "lower_bound.")
    report.extend(alpha_prime_transfer(ctx, N), "alpha_prime.")
    report.extend(verify_induced_views(ctx, N), "induced_views.")

    # user ideals are never filtered; a bad one raised above
    if ideals is not None:
        for I in ideals:
            report.extend(verify_induced_corollary(ctx, I, N), f"induced[{_label(I)}].")
        return report.finish()

    skipped = []
    for I in _scenario_ideals(ctx):
        if I.is_whole():
            continue
        try:
            semiprime_quotient = is_semiprime_ideal(A, I)
        except TooLarge as exc:
            skipped.append({"ideal": _label(I), "reason": str(exc)})
            continue
        if semiprime_quotient:
            report.extend(verify_induced_corollary(ctx, I, N), f"induced[{_label(I)}].")
    if skipped:
        report.data["induced_skipped"] = skipped
    return report.finish()
