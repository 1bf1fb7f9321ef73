"""
Self-check suites run by ``twisted-schubert verify``.

Each suite takes a :class:`VerifyConfig` and returns ``(passed, checked, detail)``.
Suites are independent, so they may run in a process pool; the report is
always assembled in suite order.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import operators as ops
from .permutations import (
    Permutation, all_permutations, alpha_beta_pairs, bruhat_leq, bruhat_leq_tableau,
    compose, reduced_words, remove_letters_factorization,
)
from .polyring import (
    MultiPoly, act_permutation, divided_difference, elementary, homogeneous,
    is_monomial_nonnegative, min_degree_part, substitute_x_by_y, twisted_op,
)
from .pipedreams import pipe_dream_weight, reduced_pipe_dreams
from .schubert import (
    billey,
    chain_from_pipe_dream,
    chain_weight,
    double_schubert,
    double_schubert_via_pipedreams,
    double_twisted_schubert,
    double_twisted_schubert_via_chains,
    expand_schubert,
    localize,
    localize_formula,
    min_degree_chains,
    pipe_dream_from_chain,
    schubert,
    schubert_via_pipedreams,
    twisted_schubert,
    twisted_schubert_via_chains,
)
from .symchains import (
    a_set, b_set, brute_force_chains, pieri_chains, pieri_e, pieri_h,
    tdel_on_elementary, tdel_on_homogeneous,
)

WORKERS_ENV = "TWISTED_SCHUBERT_WORKERS"


@dataclass(frozen=True)
class VerifyConfig:
    n: int
    seed: int = 0
    random_polys: int = 4
    max_degree: int = 5
    sampled_pairs: int = 100


def random_poly(rng: random.Random, n: int, degree: int, nterms: int = 6, coeff: int = 3) -> MultiPoly:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, degree)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        terms[tuple(e) + (0,) * n] = rng.choice([c for c in range(-coeff, coeff + 1) if c])
    return MultiPoly(n, terms)


def _basket(cfg: VerifyConfig, rng) -> list[MultiPoly]:
    return [random_poly(rng, cfg.n, cfg.max_degree) for _ in range(cfg.random_polys)]


def suite_permutations(cfg):
    n = cfg.n
    checked = 0
    for w in all_permutations(n):
        for word in reduced_words(w)[:4]:
            pairs = alpha_beta_pairs(word, n)
            if sorted(pairs) != sorted(w.inversions()) or len(set(pairs)) != len(pairs):
                return False, checked, f"pairs of {word} differ from inversions of {w}"
            if n <= 4:
                for mask in range(1 << len(word)):
                    J = [j + 1 for j in range(len(word)) if mask >> j & 1]
                    remove_letters_factorization(word, J, n)
                    checked += 1
        for v in all_permutations(n):
            answers = {bruhat_leq(v, w, word) for word in reduced_words(w)[:3]}
            if answers != {bruhat_leq_tableau(v, w)}:
                return False, checked, f"Bruhat order disagrees at {v}, {w}"
            checked += 1
    return True, checked, ""


def suite_relations(cfg):
    n = cfg.n
    rng = random.Random(cfg.seed)
    basket = _basket(cfg, rng)
    d = divided_difference
    checked = 0
    idx = range(1, n + 1)
    for P in basket:
        Q = random_poly(rng, n, cfg.max_degree)
        for i in idx:
            for j in idx:
                if i == j:
                    continue
                sij = Permutation.transposition(i, j, n)
                checks = [
                    d(i, j, P) == -d(j, i, P),
                    d(i, j, d(i, j, P)).is_zero(),
                    d(i, j, P * Q) == d(i, j, P) * Q + act_permutation(sij, P) * d(i, j, Q),
                ]
                for k in idx:
                    if k in (i, j):
                        continue
                    checks.append(d(i, j, d(j, k, P)) == d(i, k, d(i, j, P)) + d(j, k, d(i, k, P)))
                    checks.append(d(i, j, d(j, k, d(i, j, P))) == d(j, k, d(i, j, d(j, k, P))))
                    for l in idx:
                        if l in (i, j, k):
                            continue
                        checks.append(d(i, j, d(k, l, P)) == d(k, l, d(i, j, P)))
                if not all(checks):
                    return False, checked, f"relation failed at ({i},{j}) on {P}"
                checked += len(checks)
        for w in all_permutations(n)[:: max(1, len(all_permutations(n)) // 12)]:
            winv = w.inverse()
            for i in idx:
                for j in idx:
                    if i != j:
                        lhs = d(i, j, act_permutation(w, P))
                        rhs = act_permutation(w, d(winv(i), winv(j), P))
                        if lhs != rhs:
                            return False, checked, f"conjugation failed for {w}, ({i},{j})"
                        checked += 1
    return True, checked, ""


def suite_coxeter(cfg):
    n = cfg.n
    rng = random.Random(cfg.seed + 1)
    checked = 0
    T = twisted_op
    for P in _basket(cfg, rng):
        for i in range(1, n):
            if T(i, T(i, P)) != P:
                return False, checked, f"T_{i}^2 != 1 on {P}"
            checked += 1
            if i + 1 < n and T(i, T(i + 1, T(i, P))) != T(i + 1, T(i, T(i + 1, P))):
                return False, checked, f"braid fails at {i}"
            for j in range(i + 2, n):
                if T(i, T(j, P)) != T(j, T(i, P)):
                    return False, checked, f"T_{i} T_{j} do not commute"
                checked += 1
    return True, checked, ""


def suite_skew_oracle(cfg):
    n = cfg.n
    basket = ops.equality_basket(n)
    perms = all_permutations(n)
    checked = 0
    for w in perms:
        for v in perms:
            naive = ops.twisted_skew_naive(w, v)
            pos = ops.twisted_skew_positive(w, v)
            if not pos.is_positive_form():
                return False, checked, f"positive form violated for {w}/{v}"
            if not ops.operators_agree(naive, pos, basket):
                return False, checked, f"naive != positive for {w}/{v}"
            top = {k: c for k, c in naive.terms.items() if len(k[1]) == w.length() - v.length()}
            if top != ops.skew_naive(w, v).terms:
                return False, checked, f"top part of twisted {w}/{v} is not the skew operator"
            checked += 1
        words = reduced_words(w)
        if len(words) > 1:
            for v in perms:
                a = ops.twisted_skew_naive(w, v, words[0])
                b = ops.twisted_skew_naive(w, v, words[-1])
                if not ops.operators_agree(a, b, basket):
                    return False, checked, f"twisted skew {w}/{v} depends on the word"
    return True, checked, ""


def suite_leibniz(cfg):
    n = cfg.n
    rng = random.Random(cfg.seed + 2)
    perms = all_permutations(n)
    checked = 0
    for w in rng.sample(perms, min(len(perms), 6)) + [perms[-1]]:
        P = random_poly(rng, n, 3, nterms=4)
        Q = random_poly(rng, n, 3, nterms=4)
        if ops.leibniz_expand(w, P, Q) != ops.twisted_T(w, P * Q):
            return False, checked, f"Leibniz rule fails for {w}"
        checked += 1
    return True, checked, ""


def suite_recurrence(cfg):
    n = cfg.n
    basket = ops.equality_basket(n)
    perms = all_permutations(n)
    rng = random.Random(cfg.seed + 3)
    triples = [(v, w, i) for v in perms for w in perms for i in range(1, n)
               if v.left_mul_simple(i).length() > v.length()]
    if n >= 4:
        triples = rng.sample(triples, min(len(triples), 150))
    for v, w, i in triples:
        siv = v.left_mul_simple(i)
        alpha, beta = v.inverse()(i), v.inverse()(i + 1)
        lhs = ops.twisted_skew_naive(w, v)
        rhs = ops.twisted_skew_naive(w.left_mul_simple(i), siv) + ops.twisted_skew_naive(w, siv).then((alpha, beta))
        if not ops.operators_agree(lhs, rhs, basket):
            return False, 0, f"recurrence fails at v={v}, w={w}, i={i}"
    return True, len(triples), ""


def suite_chain_witnesses(cfg):
    n = cfg.n
    perms = all_permutations(n)
    checked = 0
    for v in perms:
        for w in perms:
            for k in range(1, n):
                for kind, fn in (("E", a_set), ("H", b_set)):
                    wit = fn(v, w, k)
                    chains = brute_force_chains(v, w, k, kind)
                    key = 1 if kind == "E" else 0
                    normal = {tuple(sorted(c, key=lambda t: t[key])) for c in chains}
                    if len(normal) > 1:
                        return False, checked, f"non-unique {kind} chain for {v},{w},{k}"
                    if (wit is None) != (not normal):
                        return False, checked, f"{kind} witness existence wrong for {v},{w},{k}"
                    if wit is not None and normal != {wit.transpositions}:
                        return False, checked, f"{kind} witness differs for {v},{w},{k}"
                    if kind == "E" and wit is not None:
                        fixed = {a for a in range(1, k + 1) if v(a) == w(a)}
                        if set(range(1, k + 1)) - wit.support != fixed:
                            return False, checked, f"fixed letters mismatch for {v},{w},{k}"
                    checked += 1
    return True, checked, ""


def suite_tdel_eh(cfg):
    n = cfg.n
    perms = all_permutations(n)
    checked = 0
    for v in perms:
        for w in perms:
            op = ops.twisted_skew_positive(w, v)
            for k in range(1, n):
                for m in range(0, n + 1):
                    e = elementary(m, range(1, k + 1), n)
                    h = homogeneous(m, range(1, k + 1), n)
                    if ops.apply(op, e) != tdel_on_elementary(v, w, m, k):
                        return False, checked, f"e-action wrong at v={v} w={w} m={m} k={k}"
                    if ops.apply(op, h) != tdel_on_homogeneous(v, w, m, k):
                        return False, checked, f"h-action wrong at v={v} w={w} m={m} k={k}"
                    checked += 2
    return True, checked, ""


def suite_schubert(cfg):
    checked = 0
    for w in all_permutations(cfg.n):
        if schubert(w) != schubert_via_pipedreams(w):
            return False, checked, f"pipe dreams disagree at {w}"
        if double_schubert(w) != double_schubert_via_pipedreams(w):
            return False, checked, f"double pipe dreams disagree at {w}"
        if double_schubert(w).set_y_zero() != schubert(w):
            return False, checked, f"y=0 specialization fails at {w}"
        checked += 3
    return True, checked, ""


def suite_twisted(cfg):
    checked = 0
    for w in all_permutations(cfg.n):
        t = twisted_schubert(w)
        if t != twisted_schubert_via_chains(w):
            return False, checked, f"chain formula disagrees at {w}"
        if not is_monomial_nonnegative(t):
            return False, checked, f"negative coefficient at {w}"
        if min_degree_part(t) != schubert(w):
            return False, checked, f"minimum degree part is not S_w at {w}"
        dt = double_twisted_schubert(w)
        if dt != double_twisted_schubert_via_chains(w):
            return False, checked, f"double chain formula disagrees at {w}"
        if dt.set_y_zero() != t:
            return False, checked, f"y=0 of double twisted fails at {w}"
        if min_degree_part(dt) != double_schubert(w):
            return False, checked, f"minimum degree part of double twisted fails at {w}"
        checked += 6
    return True, checked, ""


def _pairs(cfg):
    perms = all_permutations(cfg.n)
    pairs = [(v, w) for v in perms for w in perms]
    if cfg.n >= 4:
        pairs = random.Random(cfg.seed + 4).sample(pairs, min(len(pairs), cfg.sampled_pairs))
    return pairs


def suite_localization(cfg):
    n = cfg.n
    checked = 0
    for v, w in _pairs(cfg):
        if localize_formula(v, w).product() != localize(v, w):
            return False, checked, f"localization formula fails at v={v}, w={w}"
        checked += 1
    for v in all_permutations(n):
        for w in all_permutations(n):
            for i in range(1, n):
                a, b = MultiPoly.y(w(i), n), MultiPoly.y(w(i + 1), n)
                lhs = (b - a + 1) * localize(v, w.right_mul_simple(i))
                rhs = (b - a) * localize(v.right_mul_simple(i), w) + localize(v, w)
                if lhs != rhs:
                    return False, checked, f"localization recurrence fails at {v},{w},{i}"
                checked += 1
        if n > 3:
            break
    return True, checked, ""


def suite_billey(cfg):
    checked = 0
    for v, w in _pairs(cfg):
        b = billey(v, w)
        if b != substitute_x_by_y(double_schubert(v), w):
            return False, checked, f"Billey formula fails at v={v}, w={w}"
        if b != localize(v, w).homogeneous_part(v.length()):
            return False, checked, f"Billey is not the degree-l(v) part of the localization at {v},{w}"
        checked += 1
    return True, checked, ""


def suite_pieri(cfg):
    """v in S_3 (or smaller) inside S_{n+2}; an ambient that is too small must be
    reported, and the case is then rechecked one size up."""
    n_small = min(cfg.n, 3)
    N0 = n_small + 2
    checked = 0
    for v in all_permutations(n_small):
        for k in range(1, min(2, N0 - 1) + 1):
            for m in range(0, 4):
                for kind, fn, sym in (("E", pieri_e, elementary), ("H", pieri_h, homogeneous)):
                    N = N0
                    try:
                        terms = fn(v, m, k, N)
                    except ValueError:
                        full = expand_schubert(schubert(v.embed(N)) * sym(m, range(1, k + 1), N))
                        if all(w.trim().n <= N for w in full):
                            return False, checked, f"spurious 'too small' for {kind} v={v} m={m} k={k}"
                        N += 1
                        terms = fn(v, m, k, N)
                    prod = schubert(v.embed(N)) * sym(m, range(1, k + 1), N)
                    if expand_schubert(prod, N) != {w: 1 for w in terms}:
                        return False, checked, f"Pieri {kind} fails at v={v}, m={m}, k={k}"
                    if m >= 1 and pieri_chains(v, m, k, N, kind) != terms:
                        return False, checked, f"Pieri {kind} chain phrasing differs at v={v}, m={m}, k={k}"
                    checked += 1
    return True, checked, ""


def suite_bijection(cfg):
    checked = 0
    for w in all_permutations(cfg.n):
        pds = reduced_pipe_dreams(w)
        chains = min_degree_chains(w)
        if len(pds) != len(chains):
            return False, checked, f"cardinality mismatch at {w}"
        images = set()
        for pd in pds:
            ch = chain_from_pipe_dream(pd)
            if pipe_dream_from_chain(ch) != pd:
                return False, checked, f"round trip fails at {w}"
            if chain_weight(ch) != pipe_dream_weight(pd):
                return False, checked, f"weights differ at {w}"
            images.add(ch.perms)
        if images != {ch.perms for ch in chains}:
            return False, checked, f"image is not the set of minimum-degree chains at {w}"
        checked += len(pds)
    return True, checked, ""


SUITES = {
    "permutations": suite_permutations,
    "relations": suite_relations,
    "coxeter": suite_coxeter,
    "skew-oracle": suite_skew_oracle,
    "leibniz": suite_leibniz,
    "recurrence": suite_recurrence,
    "chain-witnesses": suite_chain_witnesses,
    "tdel-e-h": suite_tdel_eh,
    "schubert": suite_schubert,
    "twisted": suite_twisted,
    "localization": suite_localization,
    "billey": suite_billey,
    "pieri": suite_pieri,
    "bijection": suite_bijection,
}


def _run_one(args):
    name, cfg = args
    try:
        return name, SUITES[name](cfg)
    except Exception as exc:  # a crash counts as a failed suite
        return name, (False, 0, f"{type(exc).__name__}: {exc}")


def run_suites(cfg: VerifyConfig, names=None, workers: int | None = None) -> list[tuple[str, tuple]]:
    names = list(SUITES) if names is None else list(names)
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    jobs = [(name, cfg) for name in names]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(job) for job in jobs]
