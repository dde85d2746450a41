"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line with its measured time
and limit.  Run standalone with ``python tests/test_acceptance.py`` or under
pytest (the lines are printed past output capture).
"""

from __future__ import annotations

import functools
import itertools
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import random_type, scramble, standard_rows  # noqa: E402

from zpzp2.analysis import brute_force_kernel_basis, is_gray_linear, kernel, rank  # noqa: E402
from zpzp2.cli import main as cli_main  # noqa: E402
from zpzp2.constructions import (  # noqa: E402
    achievability_table,
    construct_kernel_code,
    construct_pair_code,
    construct_rank_code,
    kernel_range,
    rank_range,
    witness_matrix,
)
from zpzp2.gray import carry_batch, gray_batch, hom_distance, phi  # noqa: E402
from zpzp2.mixed_code import (  # noqa: E402
    AdditiveCode,
    CodeType,
    GeneratorMatrix,
    dual,
    inner_product_batch,
    standardize,
)
from zpzp2.words import MixedWord  # noqa: E402

GOLDEN = Path(__file__).parent / "golden" / "achievable_2_14_2_6_1.csv"
RANK_T = CodeType(2, 10, 2, 4, 1)
KERNEL_T = CodeType(2, 9, 2, 5, 1)
PAIR_T = CodeType(2, 14, 2, 6, 1)
SCALED = CodeType(2, 6, 1, 3, 1)

_capsys = None


def _emit(line: str) -> None:
    if _capsys is not None:
        with _capsys.disabled():
            print(line)
    else:
        print(line)


def _report(n: int, title: str, ok: bool, elapsed: float, limit: float | None, detail: str = "") -> None:
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    extra = f"; {detail}" if detail else ""
    bound = f", limit {limit:g}s" if limit is not None else ""
    _emit(f"[{status}] criterion {n}: {title} ({elapsed:.2f}s{bound}{extra})")
    assert ok, f"criterion {n} failed{extra}"
    assert within, f"criterion {n} exceeded {limit}s: {elapsed:.2f}s"


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def _random_words(rng, p, alpha, beta, n):
    return np.concatenate([rng.integers(0, p, (n, alpha)), rng.integers(0, p * p, (n, beta))], axis=1)


def test_c1_gray_identities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    ok, checked = True, 0
    for p in (3, 5, 7):
        shapes = [(int(a), int(b)) for a, b in zip(rng.integers(0, 5, 1000), rng.integers(0, 5, 1000))]
        shapes = [(a, b if a + b else 1) for a, b in shapes]
        for (alpha, beta), count in zip(*np.unique(shapes, axis=0, return_counts=True)):
            alpha, beta, count = int(alpha), int(beta), int(count)
            u = _random_words(rng, p, alpha, beta, count)
            v = _random_words(rng, p, alpha, beta, count)
            mods = np.array([p] * alpha + [p * p] * beta)
            s = (u + v) % mods
            pPp = carry_batch(u, v, p, alpha)
            P = (u[:, alpha:] % p + v[:, alpha:] % p >= p).astype(np.int64)
            pP = np.zeros_like(pPp)
            pP[:, alpha:] = p * P
            lhs = gray_batch(s, p, alpha)
            base = gray_batch(u, p, alpha) + gray_batch(v, p, alpha)
            ok &= np.array_equal(lhs, (base + gray_batch(pP, p, alpha)) % p)
            ok &= np.array_equal(lhs, (base + (p - 1) * gray_batch(pPp, p, alpha)) % p)
            ok &= np.array_equal(P, (p - 1) * (pPp[:, alpha:] // p) % p)
            checked += count
    _report(1, f"Gray additivity and P = (p-1)P' on {checked} pairs, p in {{3,5,7}}",
            ok and checked == 3000, time.perf_counter() - t0, 1.0)


def test_c2_isometry():
    t0 = time.perf_counter()
    ok, pairs = True, 0
    for p in (3, 5):
        blocks = {t: phi(t, p) for t in range(p * p)}
        for a, b in itertools.product(range(p * p), repeat=2):
            ok &= hom_distance((a,), (b,), p) == sum(x != y for x, y in zip(blocks[a], blocks[b]))
            pairs += 1
    _report(2, f"homogeneous distance = Hamming distance of images on all {pairs} pairs",
            ok, time.perf_counter() - t0, 1.0)


def test_c3_rank_witnesses():
    t0 = time.perf_counter()
    got = {}
    for r in rank_range(RANK_T):
        c = AdditiveCode(construct_rank_code(RANK_T, r))
        got[r] = (rank(c, "span").rank, rank(c, "bruteforce").rank, c.type)
    ok = list(got) == list(range(10, 16)) and all(s == b == r and t == RANK_T for r, (s, b, t) in got.items())
    detail = " ".join(f"r={r}:{s}/{b}" for r, (s, b, _) in got.items())
    _report(3, "type (2,10;2,4;1) ranks 10..15, span and brute force", ok, time.perf_counter() - t0, 30.0, detail)


def _kernel_witness(k_bar: int) -> AdditiveCode:
    S = np.zeros((5, 3), dtype=np.int64)
    S[:k_bar] = 2
    return AdditiveCode(witness_matrix(3, KERNEL_T, S))


def test_c4_kernel_witnesses():
    t0 = time.perf_counter()
    coset = {12 - kb: kernel(_kernel_witness(kb), "coset").kernel_dim for kb in range(6)}
    ok_a = all(k == v for k, v in coset.items()) and sorted(coset) == list(range(7, 13))
    brute = {}
    for p in (3, 5):
        for k_bar in range(4):
            k = SCALED.log_size - k_bar
            c = AdditiveCode(construct_kernel_code(p, SCALED, k))
            brute[(p, k)] = (len(brute_force_kernel_basis(c)), kernel(c).kernel_dim)
    ok_b = all(b == cs == k for (p, k), (b, cs) in brute.items())
    detail = "coset " + ",".join(map(str, coset.values())) + "; brute " + ",".join(
        f"p{p}k{k}={b}" for (p, k), (b, _) in brute.items())
    _report(4, "type (2,9;2,5;1) kernels 12..7 by cosets, (2,6;1,3;1) by brute force for p=3,5",
            ok_a and ok_b, time.perf_counter() - t0, 120.0, detail)


@functools.lru_cache(maxsize=None)
def _grid_run():
    t0 = time.perf_counter()
    table = achievability_table(PAIR_T, verify=True)
    return table, time.perf_counter() - t0


def test_c5_achievability_grid(tmp_path):
    t0 = time.perf_counter()
    out = tmp_path / "achievable_2_14_2_6_1.csv"
    argv = ["table", "--p", "3", "--alpha", "2", "--beta", "14", "--gamma", "2", "--delta", "6", "--kappa", "1",
            "--verify", "-o", str(out)]
    code = cli_main(argv)
    elapsed = time.perf_counter() - t0
    ok = code == 0 and out.read_text() == GOLDEN.read_text()
    _report(5, "table --verify for (2,14;2,6;1) matches the golden CSV", ok, elapsed, 600.0,
            f"exit {code}")


def test_c6_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(606)
    mismatches, n, nonlinear, sizes = [], 0, 0, []
    while n < 50:
        t = random_type(rng, max_alpha=3, max_beta=5, max_log=8)
        M, _ = scramble(rng, 3, t, standard_rows(rng, 3, t))
        c = AdditiveCode(GeneratorMatrix.from_rows(3, t.alpha, t.beta, M.tolist()))
        rs, rb = rank(c, "span").rank, rank(c, "bruteforce").rank
        kc, kb = kernel(c, "coset").kernel_dim, len(brute_force_kernel_basis(c))
        if rs != rb or kc != kb:
            mismatches.append((str(t), rs, rb, kc, kb))
        nonlinear += kc < t.log_size
        sizes.append(t.log_size)
        n += 1
    detail = f"{nonlinear} nonlinear, |C| up to 3^{max(sizes)}"
    if mismatches:
        detail += f"; mismatches {mismatches}"
    _report(6, "span rank = brute rank and coset kernel = brute kernel on 50 random p=3 codes",
            not mismatches, time.perf_counter() - t0, 300.0, detail)


def test_c7_duality():
    t0 = time.perf_counter()
    rng = np.random.default_rng(707)
    bad, n = [], 0
    while n < 30:
        p = int(rng.choice([3, 5]))
        alpha, beta = int(rng.integers(0, 4)), int(rng.integers(1, 4))
        if alpha + 2 * beta > 10 or p ** (alpha + 2 * beta) > 5**7:
            continue
        rows = _random_words(rng, p, alpha, beta, int(rng.integers(1, 4)))
        rows = rows[np.any(rows, axis=1)]
        if not len(rows):
            continue
        c = AdditiveCode(GeneratorMatrix.spanning(p, alpha, beta, [MixedWord.from_flat(p, alpha, r) for r in rows]))
        d = dual(c)
        a, b, g, dl, k = c.type.astuple()
        formula = (a, b, a + g - 2 * k, b - g - dl + k, a - k)
        ip = inner_product_batch(c.words().astype(np.int64), d.words().astype(np.int64), p, alpha)
        ok = (not ip.any() and c.size * d.size == p ** (alpha + 2 * beta) and d.type.astuple() == formula)
        if not ok:
            bad.append(str(c.type))
        n += 1
    _report(7, "30 random codes: orthogonality, |C||C_perp| = p^(alpha+2beta), dual type formulas",
            not bad, time.perf_counter() - t0, 120.0, f"bad {bad}" if bad else "")


def test_c8_linearity_coupling():
    t0 = time.perf_counter()
    bad, count = [], 0

    def check(c, r, k, label):
        nonlocal count
        t = c.type
        lin = is_gray_linear(c)
        if not (lin == (k == t.log_size) == (r == t.log_size)):
            bad.append(label)
        count += 1

    for r in rank_range(RANK_T):
        c = AdditiveCode(construct_rank_code(RANK_T, r))
        check(c, r, kernel(c).kernel_dim, f"rank r={r}")
    for k_bar in range(6):
        c = _kernel_witness(k_bar)
        check(c, rank(c, "span").rank, 12 - k_bar, f"kernel kbar={k_bar}")
    for p in (3, 5):
        for k in kernel_range(SCALED):
            c = AdditiveCode(construct_kernel_code(p, SCALED, k))
            check(c, rank(c).rank, k, f"p={p} k={k}")
    table, _ = _grid_run()
    for (r, k), got in table.verified.items():
        c = AdditiveCode(construct_pair_code(PAIR_T, r, k))
        check(c, *got, f"table ({r},{k})")
    _report(8, f"is_gray_linear <=> k_bar=0 <=> r_bar=0 on {count} witnesses", not bad,
            time.perf_counter() - t0, None, f"bad {bad}" if bad else "")


def test_c9_standardization():
    t0 = time.perf_counter()
    rng = np.random.default_rng(909)
    bad = []
    for i in range(30):
        p = 3 if i % 2 else 5
        t = random_type(rng, max_alpha=3, max_beta=5, max_log=8 if p == 3 else 5)
        M, perm = scramble(rng, p, t, standard_rows(rng, p, t))
        gm = GeneratorMatrix.from_rows(p, t.alpha, t.beta, M.tolist())
        sf = standardize(gm)
        original = AdditiveCode(gm).words()[:, list(sf.column_permutation)]
        same = {tuple(r) for r in original.tolist()} == AdditiveCode(sf.matrix).word_set()
        if sf.type != t or not same:
            bad.append(str(t))
    _report(9, "30 scrambled standard forms: type recovered, permuted codeword sets equal", not bad,
            time.perf_counter() - t0, 60.0, f"bad {bad}" if bad else "")


if __name__ == "__main__":
    import tempfile

    failures = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_c"):
            continue
        try:
            if "tmp_path" in fn.__code__.co_varnames[: fn.__code__.co_argcount]:
                with tempfile.TemporaryDirectory() as d:
                    fn(Path(d))
            else:
                fn()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
