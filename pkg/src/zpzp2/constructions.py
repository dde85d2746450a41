"""Witness codes with prescribed rank, kernel dimension, or both.

All witnesses share the generator shape (columns: X | Y)::

    I_kappa  0 | 0     0           0
    0        0 | 0     p I_{g-k}   0
    0        0 | S     0           I_delta

with ``S`` a ``delta x (beta - (gamma - kappa) - delta)`` block over Z_{p^2}
chosen per target.  Rank and pair constructions are for p = 3 only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .analysis import kernel, rank
from .mixed_code import AdditiveCode, CodeType, GeneratorMatrix
from .ring_arith import check_prime


class InadmissibleTarget(ValueError):
    """The requested rank / kernel dimension is not achievable for the type."""


def s_width(t: CodeType) -> int:
    """Width ``beta - (gamma - kappa) - delta`` of the free block S."""
    return t.beta - (t.gamma - t.kappa) - t.delta


def rank_upper_bound(t: CodeType) -> int:
    return min(t.beta + t.delta + t.kappa, t.gamma + t.delta + comb(t.delta + 1, 2) + comb(t.delta + 2, 3))


def rank_range(t: CodeType) -> range:
    """Achievable ranks of Z_3 Z_9-linear codes of type ``t``."""
    return range(t.log_size, rank_upper_bound(t) + 1)


def kernel_range(t: CodeType) -> range:
    """Kernel dimensions ``gamma + delta .. gamma + 2 delta`` (any odd p)."""
    return range(t.gamma + t.delta, t.log_size + 1)


def pair_rank_bound(k_bar: int) -> int:
    """Largest ``r_bar`` allowed by ``k_bar`` (before the width limit)."""
    return comb(k_bar, 2) + comb(k_bar + 2, 3)


def pair_range(t: CodeType, k: int) -> range:
    """Ranks achievable together with kernel dimension ``k`` (p = 3)."""
    if k not in kernel_range(t):
        raise InadmissibleTarget(f"kernel dimension {k} outside {_fmt(kernel_range(t))} for type {t}")
    k_bar = t.log_size - k
    if k_bar == 0:
        return range(t.log_size, t.log_size + 1)
    top = min(s_width(t), pair_rank_bound(k_bar))
    return range(t.log_size + 1, t.log_size + top + 1)


def _fmt(r: range) -> str:
    return f"{{{r.start},...,{r.stop - 1}}}" if len(r) else "{}"


@dataclass(frozen=True)
class ColumnDictionary:
    """Column blocks over Z_9 for ``size`` order-9 rows.

    ``A = 2 I``; ``B`` has columns ``h_k + h_l``; ``C = 2 B``; ``D`` has
    columns ``h_k + 2 h_l``; ``E`` has columns ``h_x + h_y + h_z``.  Index
    pairs and triples run in lexicographic order.  With ``primed=True`` the
    first column of ``C`` is replaced by the all-2 column.
    """

    size: int
    primed: bool = False
    A_bar: np.ndarray = field(init=False, repr=False)
    B_bar: np.ndarray = field(init=False, repr=False)
    C_bar: np.ndarray = field(init=False, repr=False)
    D_bar: np.ndarray = field(init=False, repr=False)
    E_bar: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        d = self.size
        h = np.eye(d, dtype=np.int64)
        pairs = list(itertools.combinations(range(d), 2))
        triples = list(itertools.combinations(range(d), 3))

        def cols(vectors) -> np.ndarray:
            return np.array(vectors, dtype=np.int64).reshape(len(vectors), d).T

        B = cols([h[k] + h[l] for k, l in pairs])
        C = 2 * B
        if self.primed and C.shape[1]:
            C[:, 0] = 2
        object.__setattr__(self, "A_bar", 2 * h)
        object.__setattr__(self, "B_bar", B)
        object.__setattr__(self, "C_bar", C)
        object.__setattr__(self, "D_bar", cols([h[k] + 2 * h[l] for k, l in pairs]))
        object.__setattr__(self, "E_bar", cols([h[x] + h[y] + h[z] for x, y, z in triples]))

    @property
    def M(self) -> np.ndarray:
        return np.hstack([self.A_bar, self.B_bar, self.C_bar, self.D_bar, self.E_bar])

    def pair_columns(self) -> np.ndarray:
        """All-2 column, then A, B, the rest of C, D, E."""
        d = self.size
        first = np.full((d, 1), 2, dtype=np.int64)
        return np.hstack([first, self.A_bar, self.B_bar, self.C_bar[:, 1:], self.D_bar, self.E_bar])


def witness_matrix(p: int, t: CodeType, S: np.ndarray) -> GeneratorMatrix:
    """The common witness shape with free block ``S`` (``delta x s_width``)."""
    check_prime(p)
    s = s_width(t)
    S = np.asarray(S, dtype=np.int64).reshape(t.delta, s)
    gk = t.gamma - t.kappa
    rows = []
    for i in range(t.kappa):
        r = [0] * (t.alpha + t.beta)
        r[i] = 1
        rows.append(r)
    for i in range(gk):
        r = [0] * (t.alpha + t.beta)
        r[t.alpha + s + i] = p
        rows.append(r)
    for j in range(t.delta):
        r = [0] * t.alpha + S[j].tolist() + [0] * gk + [0] * t.delta
        r[t.alpha + s + gk + j] = 1
        rows.append(r)
    return GeneratorMatrix.from_rows(p, t.alpha, t.beta, rows)


def _pad(cols: np.ndarray, height: int, width: int) -> np.ndarray:
    out = np.zeros((height, width), dtype=np.int64)
    out[: cols.shape[0], : cols.shape[1]] = cols
    return out


def rank_block(t: CodeType, r: int) -> np.ndarray:
    if r not in rank_range(t):
        raise InadmissibleTarget(f"rank {r} outside {_fmt(rank_range(t))} for type {t}")
    r_bar = r - t.log_size
    M = ColumnDictionary(t.delta).M
    return _pad(M[:, :r_bar], t.delta, s_width(t))


def construct_rank_code(t: CodeType, r: int) -> GeneratorMatrix:
    """Z_3 Z_9 code of type ``t`` whose Gray image has rank ``r``."""
    return witness_matrix(3, t, rank_block(t, r))


def kernel_block(p: int, t: CodeType, k: int, single_column: bool = False) -> np.ndarray:
    if k not in kernel_range(t):
        raise InadmissibleTarget(f"kernel dimension {k} outside {_fmt(kernel_range(t))} for type {t}")
    k_bar = t.log_size - k
    s = s_width(t)
    if k_bar >= 1 and s < 1:
        raise InadmissibleTarget(
            f"k_bar={k_bar} needs beta - (gamma - kappa) - delta >= 1, but it is {s} for type {t}"
        )
    S = np.zeros((t.delta, s), dtype=np.int64)
    if single_column:
        S[:k_bar, :1] = p - 1
    else:
        S[:k_bar, :] = p - 1
    return S


def construct_kernel_code(p: int, t: CodeType, k: int, single_column: bool = False) -> GeneratorMatrix:
    """Code of type ``t`` whose Gray image has kernel dimension ``k``.

    The first ``k_bar`` rows of S are filled with p - 1; ``single_column``
    fills only the first column.
    """
    return witness_matrix(p, t, kernel_block(p, t, k, single_column))


def pair_block(t: CodeType, r: int, k: int) -> np.ndarray:
    admissible = pair_range(t, k)
    k_bar = t.log_size - k
    if r not in admissible:
        r_bar = r - t.log_size
        if k_bar == 0:
            why = "k_bar = 0 forces r = gamma + 2 delta"
        elif r_bar < 1:
            why = "k_bar >= 1 forces r_bar >= 1"
        elif r_bar > pair_rank_bound(k_bar):
            why = f"r_bar={r_bar} exceeds C(k_bar,2)+C(k_bar+2,3)={pair_rank_bound(k_bar)}"
        else:
            why = f"r_bar={r_bar} exceeds beta-(gamma-kappa)-delta={s_width(t)}"
        raise InadmissibleTarget(f"(r, k) = ({r}, {k}) is not achievable for type {t}: {why}")
    s = s_width(t)
    S = np.zeros((t.delta, s), dtype=np.int64)
    if k_bar:
        cols = ColumnDictionary(k_bar, primed=True).pair_columns()
        S[:k_bar, :] = _pad(cols[:, : r - t.log_size], k_bar, s)
    return S


def construct_pair_code(t: CodeType, r: int, k: int) -> GeneratorMatrix:
    """Z_3 Z_9 code of type ``t`` with rank ``r`` and kernel dimension ``k``."""
    return witness_matrix(3, t, pair_block(t, r, k))


@dataclass
class AchievabilityTable:
    type: CodeType
    ks: list[int]
    rs: list[int]
    cells: dict[tuple[int, int], bool]
    verified: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def to_csv(self) -> str:
        lines = ["k\\r," + ",".join(map(str, self.rs))]
        for k in self.ks:
            lines.append(",".join([str(k)] + ["1" if self.cells[(r, k)] else "0" for r in self.rs]))
        return "\n".join(lines) + "\n"


def achievability_table(t: CodeType, verify: bool = False, cap: int | None = None) -> AchievabilityTable:
    """Grid of achievable ``(rank, kernel)`` pairs for Z_3 Z_9 codes of type ``t``.

    Rows are kernel dimensions in descending order, columns ranks ascending.
    With ``verify``, each achievable cell's witness is built and analyzed
    (rank by span elimination, kernel by the coset method); a mismatch raises.
    """
    ks = list(reversed(kernel_range(t)))
    rs = list(rank_range(t))
    cells = {}
    for k in ks:
        ok = set(pair_range(t, k))
        for r in rs:
            cells[(r, k)] = r in ok
    table = AchievabilityTable(t, ks, rs, cells)
    if verify:
        kwargs = {} if cap is None else {"cap": cap}
        for (r, k), ok in sorted(cells.items()):
            if not ok:
                continue
            code = AdditiveCode(construct_pair_code(t, r, k), **kwargs)
            got = (rank(code, "span").rank, kernel(code, "coset").kernel_dim)
            table.verified[(r, k)] = got
            if got != (r, k) or code.type != t:
                raise AssertionError(f"witness for (r, k) = ({r}, {k}) analyzed to {got}, type {code.type}")
    return table
