"""The lightning bolt formula and its z-deformed refinements.

For k >= 2 and M an r x (2k-1) matrix with |M| = k-1, summing stat over
OP(delta_{k,i}; M) with the weights prod_{j != i} T^(j) / (T^(j) - T^(i))
gives T_cap t^{sum (i-1) alpha_i} q^{sum C(M_ij, 2)} LB(M). The z-deformed
fillings turn the same sum into an identity in z_1, ..., z_{2k-1}, which is
then cut down to the k x k region R-bar_k and the k x (k-1) rectangle R_k.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from collections.abc import Iterator, Sequence
from fractions import Fraction

import structlog

from macscifi.algebra.interpolation import lagrange_numerators, lagrange_sum, vandermonde
from macscifi.algebra.laurent import LaurentPoly
from macscifi.algebra.qanalog import qpow
from macscifi.combinatorics.matrices import (
    Matrix,
    as_matrix,
    binomial_pairs_exponent,
    fibonacci_matrices,
    lb_at_set,
    lb_laurent,
    rsum,
    subtract,
    total,
)
from macscifi.combinatorics.partitions import intersect, t_weight_laurent
from macscifi.exceptions import IndexOutOfRangeError, SizeMismatchError
from macscifi.macdonald.diagram import Diagram, FilledDiagram, descents, inversions
from macscifi.macdonald.staircase import (
    corner_removal,
    deformed_diagram,
    deformed_diagram_z,
    z_name,
)
from macscifi.macdonald.tuples import (
    CellTuple,
    inverse_stat_bar_sum,
    laurent_filling,
    op_tuples_of_type,
    pinv_exponent,
    stat_bar_laurent,
    type_sum,
)
from macscifi.settings.config import DEFAULT_SAMPLE_BITS, DEFAULT_SEED, DEFAULT_TRIALS

logger = structlog.get_logger(__name__)


def z_laurent(j: int) -> LaurentPoly:
    return LaurentPoly.variable(z_name(j))


def _monomial(q: int, z: dict[int, int]) -> LaurentPoly:
    exps = {z_name(j): e for j, e in z.items() if e}
    if q:
        exps["q"] = q
    return LaurentPoly.from_exponents(exps)


def _check_k(k: int) -> None:
    if k < 2:
        raise IndexOutOfRangeError(f"the lightning bolt identities need k >= 2, got {k}")


def pad_columns(matrix: Sequence[Sequence[int]], width: int) -> Matrix:
    m = as_matrix(matrix)
    if m and len(m[0]) > width:
        raise SizeMismatchError(f"matrix has {len(m[0])} columns, at most {width} allowed")
    return tuple(row + (0,) * (width - len(row)) for row in m)


def admissible(k: int, matrix: Sequence[Sequence[int]]) -> Matrix:
    """M padded to 2k-1 columns.

    Raises:
        SizeMismatchError: if M is wider than 2k-1 or |M| != k-1.
    """
    _check_k(k)
    m = pad_columns(matrix, 2 * k - 1)
    if total(m) != k - 1:
        raise SizeMismatchError(f"|M| must be k-1 = {k - 1}, got {total(m)}")
    return m


def eta(k: int, i: int, j: int) -> int:
    """eta_{k,i} sends z_1, ..., z_{k-1} to z_1, ..., z_{i-1}, z_{i+1}, ..., z_k."""
    if not 1 <= j <= k - 1:
        raise IndexOutOfRangeError(f"eta_{{{k},{i}}} acts on z_1..z_{k - 1}, got z_{j}")
    return j if j < i else j + 1


def _target(m: Matrix) -> LaurentPoly:
    """q^{sum C(M_ij, 2)} LB(M)."""
    return qpow(binomial_pairs_exponent(m)) * lb_laurent(m)


def lightning_bolt_rhs(k: int, matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    m = admissible(k, matrix)
    cap = t_weight_laurent(intersect(*(corner_removal(k, i) for i in range(1, k + 1))))
    bounce = LaurentPoly.monomial(t=sum(i * a for i, a in enumerate(rsum(m))))
    return cap * bounce * _target(m)


def _t_points(k: int) -> list[LaurentPoly]:
    return [t_weight_laurent(corner_removal(k, i)) for i in range(1, k + 1)]


def lightning_bolt_lhs(
    k: int, matrix: Sequence[Sequence[int]], route: str = "sigma"
) -> tuple[LaurentPoly, LaurentPoly]:
    """(numerator, denominator) of the T-weighted sum of stat over OP(delta_{k,i}; M)."""
    m = admissible(k, matrix)
    values = [type_sum(deformed_diagram(k, i), m, route=route) for i in range(1, k + 1)]
    return lagrange_sum(_t_points(k), values, scaled=True)


def lightning_bolt_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """The lightning bolt formula, with stat computed through sigma and through stat-bar."""
    m = admissible(k, matrix)
    numerator, denominator = lightning_bolt_lhs(k, m, route="sigma")
    complement, _ = lightning_bolt_lhs(k, m, route="complement")
    if numerator != complement:
        logger.warning("lightning_routes_disagree", k=k, matrix=m)
        return False
    result = numerator == lightning_bolt_rhs(k, m) * denominator
    if not result:
        logger.warning("lightning_bolt_failed", k=k, matrix=m)
    return result


def z_points(k: int) -> list[LaurentPoly]:
    return [z_laurent(j) for j in range(1, k + 1)]


def z_form_rhs(k: int, matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    """q^{(4k^3-6k^2-k)/3 + sum C} z_k prod z_{2k-i}^{k-alpha_i}
    / (z_{2k-1} prod z_i^{2k-2i-1}) LB(M)."""
    m = admissible(k, matrix)
    alpha = rsum(m)
    exps: Counter[int] = Counter({k: 1, 2 * k - 1: -1})
    for i in range(1, k):
        exps[2 * k - i] += k - alpha[i - 1]
        exps[i] -= 2 * k - 2 * i - 1
    shift = (4 * k**3 - 6 * k**2 - k) // 3
    return _monomial(shift, dict(exps)) * _target(m)


def rephrased_rhs(k: int, matrix: Sequence[Sequence[int]]) -> LaurentPoly:
    """q^{sum C} LB(M) / (q^{k(k-1)} prod_{i<k} z_{2k-i}^{alpha_i})."""
    m = admissible(k, matrix)
    alpha = rsum(m)
    return _monomial(-k * (k - 1), {2 * k - i: -alpha[i - 1] for i in range(1, k)}) * _target(m)


def z_form_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    m = admissible(k, matrix)
    values = [type_sum(deformed_diagram_z(k, i), m) for i in range(1, k + 1)]
    numerator, denominator = lagrange_sum(z_points(k), values, scaled=True)
    result = numerator == z_form_rhs(k, m) * denominator
    if not result:
        logger.warning("z_form_failed", k=k, matrix=m)
    return result


def _sample_point(k: int, rng: random.Random, sample_bits: int) -> dict[str, Fraction]:
    pool = 1 << max(sample_bits, 16)
    zs: list[int] = []
    while len(zs) < 2 * k - 1:
        value = rng.randrange(1, pool + 1)
        if value not in zs:
            zs.append(value)
    point = {z_name(j): Fraction(value) for j, value in enumerate(zs, start=1)}
    point["q"] = Fraction(rng.randrange(2, pool + 1))
    return point


def _numeric_type_sum(
    filled: FilledDiagram, matrix: Matrix, point: dict[str, Fraction]
) -> Fraction:
    diagram = filled.diagram
    fill = {cell: value.evaluate(point) for cell, value in laurent_filling(filled).items()}
    q = point["q"]
    value = Fraction(0)
    for cells in op_tuples_of_type(diagram, matrix):
        word = cells.sigma_inverse()
        term = q ** inversions(diagram, word)
        for cell in descents(diagram, word):
            term *= fill[cell]
        value += term
    return value


def z_form_check_randomized(
    k: int,
    matrix: Sequence[Sequence[int]],
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    sample_bits: int = DEFAULT_SAMPLE_BITS,
) -> bool:
    """The z-deformed formula at random rational points; exact arithmetic at each point."""
    m = admissible(k, matrix)
    rng = random.Random(seed)
    logger.info("z_form_sampling", k=k, seed=seed, trials=trials)
    for trial in range(trials):
        point = _sample_point(k, rng, sample_bits)
        zs = [point[z_name(j)] for j in range(1, k + 1)]
        lhs = Fraction(0)
        for i in range(k):
            weight = Fraction(1)
            for j in range(k):
                if j != i:
                    weight *= zs[j] / (zs[j] - zs[i])
            lhs += weight * _numeric_type_sum(deformed_diagram_z(k, i + 1), m, point)
        if lhs != z_form_rhs(k, m).evaluate(point):
            logger.warning("z_form_sample_failed", k=k, matrix=m, seed=seed, trial=trial)
            return False
    return True


def rephrased_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """sum_i prod 1/(z_j - z_i) sum over OP(delta_{k,i}; M) of 1/stat-bar."""
    m = admissible(k, matrix)
    values = [inverse_stat_bar_sum(deformed_diagram_z(k, i), m) for i in range(1, k + 1)]
    numerator, denominator = lagrange_sum(z_points(k), values)
    result = numerator == rephrased_rhs(k, m) * denominator
    if not result:
        logger.warning("rephrased_failed", k=k, matrix=m)
    return result


def reduced_staircase(k: int, i: int) -> FilledDiagram:
    """R-bar_k: the first k rows of the z-deformed diagram delta_{k,i}."""
    return deformed_diagram_z(k, i).restrict(rows=k)


def reduced_rectangle(k: int) -> Diagram:
    """R_k: k rows and k-1 columns."""
    _check_k(k)
    return Diagram(((1, k),) * (k - 1))


def _narrow(k: int, m: Matrix) -> Matrix | None:
    """M cut to its first k-1 columns, or None when a later column is nonzero."""
    if any(row[j] for row in m for j in range(k - 1, len(row))):
        return None
    return tuple(row[: k - 1] for row in m)


def reduced_tuples(diagram: Diagram, matrix: Sequence[Sequence[int]]) -> Iterator[CellTuple]:
    """OP^red(D; M)."""
    for cells in op_tuples_of_type(diagram, matrix):
        if cells.is_reduced():
            yield cells


def rephrased2_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """The rephrased identity over reduced tuples of R-bar_k; vacuous when M reaches column k."""
    m = admissible(k, matrix)
    narrow = _narrow(k, m)
    if narrow is None:
        return True
    values = [
        inverse_stat_bar_sum(reduced_staircase(k, i), narrow, reduced=True)
        for i in range(1, k + 1)
    ]
    numerator, denominator = lagrange_sum(z_points(k), values)
    result = numerator == rephrased_rhs(k, m) * denominator
    if not result:
        logger.warning("rephrased2_failed", k=k, matrix=m)
    return result


def rectangle_sum(k: int, i: int, matrix: Matrix) -> LaurentPoly:
    """sum over OP^red(R_k; M) of eta_{k,i}(prod z_j^{c_j}) pinv(L)."""
    value = LaurentPoly()
    for cells in reduced_tuples(reduced_rectangle(k), matrix):
        exps = {eta(k, i, j): c for j, c in enumerate(cells.c_vector(), start=1)}
        value = value + _monomial(pinv_exponent(cells), exps)
    return value


def _nonnegative(m: Matrix) -> bool:
    return all(x >= 0 for row in m for x in row)


def rephrased3_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """The rephrased identity regrouped by Fibonacci matrices over R_k."""
    m = admissible(k, matrix)
    narrow = _narrow(k, m)
    if narrow is None:
        return True
    points = z_points(k)
    weights = lagrange_numerators(points)
    numerator = LaurentPoly()
    for pattern in fibonacci_matrices(len(narrow), k - 1):
        rest = subtract(narrow, pattern)
        if not _nonnegative(rest):
            continue
        ones = total(pattern)
        shift = qpow(lb_at_set(narrow, pattern) - ones)
        for i in range(1, k + 1):
            inner = rectangle_sum(k, i, rest)
            if inner:
                numerator = numerator + shift * weights[i - 1] * z_laurent(i) ** ones * inner
    result = numerator == _target(m) * vandermonde(points)
    if not result:
        logger.warning("rephrased3_failed", k=k, matrix=m)
    return result


def lightning_bolt_z_check(
    k: int,
    matrix: Sequence[Sequence[int]],
    mode: str = "symbolic",
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    sample_bits: int = DEFAULT_SAMPLE_BITS,
) -> bool:
    """The z-deformed formula together with each of its rephrasings.

    In randomized mode only the z-deformed formula itself is sampled.
    """
    if mode == "randomized":
        return z_form_check_randomized(k, matrix, trials, seed, sample_bits)
    if mode != "symbolic":
        raise ValueError(f"unknown z mode {mode!r}")
    return (
        z_form_check(k, matrix)
        and rephrased_check(k, matrix)
        and rephrased2_check(k, matrix)
        and rephrased3_check(k, matrix)
    )


def stat_bar_closed_form(k: int, i: int, cells: CellTuple) -> LaurentPoly:
    """1/stat-bar of a reduced L on R-bar_k:
    z_i^{c_k} eta(prod_{j<k} z_j^{c_j}) pinv(L) / (q^{k|M|} prod z_{2k-j}^{alpha_j})."""
    c = cells.c_vector()
    used = len(cells.used)
    exps: Counter[int] = Counter({i: c[k - 1]})
    for j in range(1, k):
        exps[eta(k, i, j)] += c[j - 1]
        exps[2 * k - j] -= sum(1 for row, _ in cells.used if row == j)
    return _monomial(pinv_exponent(cells) - k * used, dict(exps))


def stat_bar_closed_form_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    m = pad_columns(matrix, k - 1)
    for i in range(1, k + 1):
        filled = reduced_staircase(k, i)
        fill = laurent_filling(filled)
        for cells in reduced_tuples(filled.diagram, m):
            if stat_bar_laurent(fill, cells) ** -1 != stat_bar_closed_form(k, i, cells):
                logger.warning("stat_bar_closed_form_failed", k=k, i=i, cells=cells.to_json())
                return False
    return True


def fib_split(k: int, cells: CellTuple) -> tuple[Matrix, CellTuple]:
    """E with E_{a,j} = 1 iff (j, k) lies in A_a, and L restricted to R_k."""
    pattern = tuple(
        tuple(int((j, k) in block) for j in range(1, k)) for block in cells.blocks
    )
    return pattern, cells.restrict(reduced_rectangle(k))


def fib_reduction_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """pinv on R-bar_k = q^{LB(M;E) - |E|} pinv on R_k, regrouping OP^red(R-bar_k; M) by E."""
    _check_k(k)
    m = pad_columns(matrix, k - 1)
    fib = set(fibonacci_matrices(len(m), k - 1)) if m else set()
    counts: Counter[Matrix] = Counter()
    for cells in reduced_tuples(reduced_staircase(k, 1).diagram, m):
        pattern, restricted = fib_split(k, cells)
        rest = subtract(m, pattern)
        ok = (
            pattern in fib
            and restricted.is_reduced()
            and restricted.type_matrix() == pad_columns(rest, k)
            and pinv_exponent(cells)
            == lb_at_set(m, pattern) - total(pattern) + pinv_exponent(restricted)
        )
        if not ok:
            logger.warning("fib_reduction_failed", k=k, cells=cells.to_json())
            return False
        counts[pattern] += 1
    for pattern in fib:
        rest = subtract(m, pattern)
        expected = (
            sum(1 for _ in reduced_tuples(reduced_rectangle(k), rest)) if _nonnegative(rest) else 0
        )
        if counts[pattern] != expected:
            logger.warning("fib_regrouping_failed", k=k, pattern=pattern)
            return False
    return True


def symmetry_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """sum over OP^red(R_k; M) of prod z_j^{c_j} pinv(L) is symmetric in z_1, ..., z_{k-1}."""
    _check_k(k)
    m = pad_columns(matrix, k - 1)
    value = rectangle_sum(k, k, m)
    for a in range(1, k - 1):
        swapped = value.substitute({z_name(a): z_laurent(a + 1), z_name(a + 1): z_laurent(a)})
        if swapped != value:
            logger.warning("rectangle_sum_not_symmetric", k=k, matrix=m, swap=(a, a + 1))
            return False
    return True


def gamma_vanishing_check(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """For each gamma with |M| - |gamma| < k-1, the R-bar_k sum restricted to gamma vanishes."""
    _check_k(k)
    m = pad_columns(matrix, k - 1)
    size = total(m)
    grouped: dict[tuple[int, ...], list[LaurentPoly]] = defaultdict(
        lambda: [LaurentPoly() for _ in range(k)]
    )
    for i in range(1, k + 1):
        filled = reduced_staircase(k, i)
        fill = laurent_filling(filled)
        for cells in op_tuples_of_type(filled.diagram, m):
            gamma = cells.gamma_vector()
            if size - sum(gamma) < k - 1:
                grouped[gamma][i - 1] = grouped[gamma][i - 1] + stat_bar_laurent(fill, cells) ** -1
    for gamma, values in grouped.items():
        numerator, _ = lagrange_sum(z_points(k), values)
        if numerator:
            logger.warning("gamma_sum_nonzero", k=k, matrix=m, gamma=gamma)
            return False
    return True


def leading_gap(k: int, m: Matrix) -> bool:
    """Some alpha_l = 0 with l <= k-1 and alpha_1 + ... + alpha_{l-1} < k-1."""
    alpha = rsum(m)
    return any(alpha[ell] == 0 and sum(alpha[:ell]) < k - 1 for ell in range(k - 1))


def lightning_bolt_vanishing_checks(k: int, matrix: Sequence[Sequence[int]]) -> bool:
    """Both vanishing statements wherever they apply to M."""
    m = admissible(k, matrix)
    narrow = _narrow(k, m)
    if narrow is not None and not gamma_vanishing_check(k, narrow):
        return False
    if leading_gap(k, m):
        values = [inverse_stat_bar_sum(deformed_diagram_z(k, i), m) for i in range(1, k + 1)]
        numerator, _ = lagrange_sum(z_points(k), values)
        if numerator:
            logger.warning("leading_gap_sum_nonzero", k=k, matrix=m)
            return False
    return True
