"""Correction blocks, the three matrix conditions, and combination certificates.

For the Hadamard construction the block of weight-split l pairs each row
(e | f) with correction rows

    left_correction  = beta * f H^T      (entries bounded by beta*(k-l)),
    right_correction = alpha * e H       (entries bounded by alpha*l),

and the three conditions verified here are

    (a) every correction entry has absolute value at most 1/2,
    (b) (e + left_correction) A = f + right_correction, exactly, per row,
    (c) every correction row splits into an explicit nonnegative combination
        of cube-vertex rows that re-sums, together with the subspace rows of
        (I | A) and a slack on the homogenizing coordinate, to the target
        row (1, e | f).

The expansion in (c) uses two cube vertices of weight beta/2 per support
index of f and two of weight alpha/2 per support index of e, so the
coefficient sum in block l is (k-l)*beta + l*alpha = 1/2 - (k-l)*(alpha-beta),
attaining 1/2 exactly when alpha = beta (d = 4k^2) or l = k.

Exhaustive sweeps run on every row; blocks larger than a row cap are verified
on a deterministic pseudorandom sample (always including the first and last
row of the block) plus the structural identities that hold independently of
the row count.  Per-row checks run in scaled integer arithmetic (for
alpha = p/q the matrix equation clears denominators at q*d, the certificate
re-summation at 2*p*q*d), so they are exact without any Fraction overhead.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction

from .blocks import SignedSupportRow, block_rows
from .construction import Construction
from .exact import Matrix
from .hadamard import first_nonorthogonal_columns
from .sampling import SplitMix64, block_sample_seed


# -- streamed correction blocks ----------------------------------------------


@dataclass(frozen=True)
class CorrectionRow:
    index: int
    left: SignedSupportRow
    right: SignedSupportRow
    left_correction: tuple
    right_correction: tuple


class CertificateBlock:
    """Streamed corrections for one block; tracks the running max entry."""

    def __init__(self, con: Construction, l: int):
        self.construction = con
        self.l = l
        self.stream = block_rows(con.d, con.k, l)
        self.count = self.stream.count
        self.max_abs_entry = Fraction(0)

    def __iter__(self):
        con = self.construction
        alpha, beta = con.params.alpha, con.params.beta
        h = con.hadamard
        for index, (left, right) in enumerate(self.stream):
            m_hat = _signed_column_sum(h.columns, right)
            n_hat = _signed_column_sum(h.signs, left)
            left_corr = tuple(beta * v for v in m_hat)
            right_corr = tuple(alpha * v for v in n_hat)
            worst = max(
                max((abs(v) for v in left_corr), default=Fraction(0)),
                max((abs(v) for v in right_corr), default=Fraction(0)),
            )
            if worst > self.max_abs_entry:
                self.max_abs_entry = worst
            yield CorrectionRow(index, left, right, left_corr, right_corr)


def certificate_block(con: Construction, l: int) -> CertificateBlock:
    """Correction rows for block l, streamed in block order."""
    return CertificateBlock(con, l)


def _signed_column_sum(vectors, row: SignedSupportRow) -> list:
    """Sum of sign-weighted vectors[i] over the row's support, as ints."""
    width = len(vectors[0]) if vectors else row.length
    out = [0] * width
    for i, s in zip(row.support, row.signs):
        vec = vectors[i]
        if s > 0:
            for c in range(width):
                out[c] += vec[c]
        else:
            for c in range(width):
                out[c] -= vec[c]
    return out


# -- combination certificates -------------------------------------------------


@dataclass(frozen=True)
class CombinationCertificate:
    """Explicit nonnegative combination reproducing a target row (1, e | f).

    mu_terms pairs each weight mu_i >= 0 with a full +-1 row delta_i; nus are
    the multipliers on the rows of (I | A); eps >= 0 multiplies the row
    (1, 0, ..., 0).  verify() re-sums everything exactly.
    """

    block: int
    target: tuple          # length 1 + m, leading entry 1
    mu_terms: tuple        # ((mu, delta), ...), delta in {+-1}^m
    nus: tuple             # length d
    eps: Fraction

    @property
    def coefficient_sum(self) -> Fraction:
        return sum((mu for mu, _ in self.mu_terms), Fraction(0))

    def verify(self, a: Matrix) -> None:
        """Exact re-summation; raises ValueError on any defect."""
        d, n = a.rows, a.cols
        m = d + n
        if len(self.target) != 1 + m or self.target[0] != 1:
            raise ValueError("certificate target must be (1, e) of length 1+m")
        if len(self.nus) != d:
            raise ValueError(f"expected {d} subspace multipliers")
        total = self.coefficient_sum
        if total > Fraction(1, 2):
            raise ValueError(f"coefficient sum {total} exceeds 1/2")
        if self.eps < 0:
            raise ValueError(f"slack {self.eps} is negative")

        acc = [Fraction(0)] * (1 + m)
        shift = [Fraction(0)] * m
        for mu, delta in self.mu_terms:
            if mu < 0:
                raise ValueError(f"negative combination weight {mu}")
            if len(delta) != m or any(x not in (1, -1) for x in delta):
                raise ValueError("delta rows must be +-1 vectors of length m")
            acc[0] += 2 * mu
            for j, x in enumerate(delta):
                acc[1 + j] -= mu * x
                shift[j] += mu * x
        for j, nu in enumerate(self.nus):
            if nu != self.target[1 + j] + shift[j]:
                raise ValueError(
                    f"multiplier {j} is {nu}, expected target + shift "
                    f"{self.target[1 + j] + shift[j]}"
                )
            acc[1 + j] += nu
            arow = a.row(j)
            for c in range(n):
                acc[1 + d + c] += nu * arow[c]
        acc[0] += self.eps
        if tuple(acc) != self.target:
            raise ValueError("combination does not re-sum to its target row")


def expand_combination(
    con: Construction, left: SignedSupportRow, right: SignedSupportRow
) -> CombinationCertificate:
    """Expand one block row into its explicit combination certificate.

    Each support index i of the right part contributes the two cube vertices
    (tau_i v_i | +-1) with weight beta/2; each support index j of the left
    part contributes (+-1 | sigma_j w_j) with weight alpha/2.  The resulting
    certificate is verified by exact re-summation before it is returned.
    """
    d, k = con.d, con.k
    if left.length != d or right.length != d:
        raise ValueError("row widths do not match the construction")
    if left.weight + right.weight != k:
        raise ValueError(
            f"row weights {left.weight}+{right.weight} do not sum to k={k}"
        )
    for row in (left, right):
        if any(s not in (1, -1) for s in row.signs):
            raise ValueError("row signs must be +-1")
    l = left.weight
    alpha, beta = con.params.alpha, con.params.beta
    h = con.hadamard
    ones = (1,) * d
    neg_ones = (-1,) * d

    mu_terms = []
    for i, s in zip(right.support, right.signs):
        col = tuple(s * x for x in h.column_signs(i))
        mu_terms.append((beta / 2, col + ones))
        mu_terms.append((beta / 2, col + neg_ones))
    for j, s in zip(left.support, left.signs):
        row = tuple(s * x for x in h.row_signs(j))
        mu_terms.append((alpha / 2, ones + row))
        mu_terms.append((alpha / 2, neg_ones + row))

    e_dense = left.dense()
    shift_left = [Fraction(0)] * d
    for mu, delta in mu_terms:
        for j in range(d):
            shift_left[j] += mu * delta[j]
    nus = tuple(e_dense[j] + shift_left[j] for j in range(d))
    total = sum((mu for mu, _ in mu_terms), Fraction(0))
    eps = 1 - 2 * total
    target = (Fraction(1),) + tuple(e_dense) + tuple(right.dense())

    cert = CombinationCertificate(
        block=l, target=target, mu_terms=tuple(mu_terms), nus=nus, eps=eps
    )
    cert.verify(con.A)
    return cert


def expected_coefficient_sum(con: Construction, l: int) -> Fraction:
    """Closed form for the block-l coefficient sum: (k-l)*beta + l*alpha."""
    k = con.k
    return (k - l) * con.params.beta + l * con.params.alpha


# -- the scaled-integer row check ---------------------------------------------


def _check_row_scaled(h_rows, h_cols, d, k, p, q, left, right):
    """All-integer verification of one block row, for alpha = p/q.

    With beta = 1/(alpha*d) = q/(p*d), every check below clears denominators:
    the matrix equation is scaled by q*d, the certificate re-summation by
    2*p*q*d.  Returns (entry_ok, eq_ok, cert_ok, max_m_hat, max_n_hat) where
    m_hat = f H^T and n_hat = e H are the unscaled integer correction rows
    (left_correction = beta*m_hat, right_correction = alpha*n_hat).
    """
    n_hat = _signed_column_sum(h_rows, left)
    m_hat = _signed_column_sum(h_cols, right)
    max_m = max((abs(v) for v in m_hat), default=0)
    max_n = max((abs(v) for v in n_hat), default=0)

    # (a): beta*max_m <= 1/2 and alpha*max_n <= 1/2
    entry_ok = 2 * q * max_m <= p * d and 2 * p * max_n <= q

    # (b): (e + beta*m_hat) A == f + alpha*n_hat, scaled by q*d
    pd = p * d
    e_hat = [q * v for v in m_hat]
    for j, s in zip(left.support, left.signs):
        e_hat[j] += s * pd
    eh = [sum(a * b for a, b in zip(e_hat, col)) for col in h_cols]
    rhs = [pd * v for v in n_hat]
    qd = q * d
    for i, s in zip(right.support, right.signs):
        rhs[i] += s * qd
    eq_ok = eh == rhs

    # (c): re-sum the combination certificate, scaled by sc = 2pqd.
    # Expansion weights scale to q^2 per right-support term and p^2*d per
    # left-support term; the all-ones halves of each term pair cancel, so the
    # summed table shift is (2q^2 m_hat | 2p^2 d n_hat), and the multiplier
    # row becomes 2q * e_hat, whose product with A reuses eh.
    l = left.weight
    musum2 = 4 * (k - l) * q * q + 4 * l * p * p * d       # 2 * sum of mu-hat
    eps_hat = 2 * p * q * d - musum2
    cert_ok = eps_hat >= 0
    if cert_ok:
        sc = 2 * p * q * d
        shift_right = [2 * p * p * d * v for v in n_hat]
        lhs = [2 * p * eh[c] - shift_right[c] for c in range(d)]
        target_right = [0] * d
        for i, s in zip(right.support, right.signs):
            target_right[i] = sc * s
        cert_ok = lhs == target_right
    return entry_ok, eq_ok, cert_ok, max_m, max_n


# -- structural identities ------------------------------------------------------


@dataclass(frozen=True)
class StructuralReport:
    """Row-count independent identities behind the per-row matrix equation."""

    hadamard_gram_ok: bool
    alpha_beta_product_ok: bool

    @property
    def passed(self) -> bool:
        return self.hadamard_gram_ok and self.alpha_beta_product_ok


def structural_identities(con: Construction) -> StructuralReport:
    """Verify H^T H = d*I and alpha*beta*d = 1 exactly.

    Together these give left_correction @ A = f and right_correction = e @ A
    for every block row by plain algebra, whatever the block sizes.
    """
    gram_ok = first_nonorthogonal_columns(con.hadamard.signs) is None
    product_ok = con.params.alpha * con.params.beta * con.d == 1
    return StructuralReport(
        hadamard_gram_ok=gram_ok, alpha_beta_product_ok=product_ok
    )


# -- the conditions sweep --------------------------------------------------------


@dataclass(frozen=True)
class BlockConditionReport:
    l: int
    rows_total: int
    rows_checked: int
    sampled: bool
    max_abs_left: Fraction
    max_abs_right: Fraction
    coefficient_sum: Fraction
    coefficient_sum_expected: Fraction
    entry_bound_ok: bool
    equation_ok: bool
    certificate_ok: bool
    first_failure: tuple | None  # (row_index, reason)

    @property
    def max_abs_entry(self) -> Fraction:
        return max(self.max_abs_left, self.max_abs_right)

    @property
    def passed(self) -> bool:
        return (
            self.entry_bound_ok
            and self.equation_ok
            and self.certificate_ok
            and self.coefficient_sum == self.coefficient_sum_expected
        )


@dataclass(frozen=True)
class ConditionsReport:
    d: int
    k: int
    alpha: Fraction
    beta: Fraction
    mode: str
    seed: int
    sample_rows: int
    blocks: tuple
    structural: StructuralReport

    @property
    def max_abs_entry(self) -> Fraction:
        return max(b.max_abs_entry for b in self.blocks)

    @property
    def condition_a(self) -> bool:
        return all(b.entry_bound_ok for b in self.blocks)

    @property
    def condition_b(self) -> bool:
        return all(b.equation_ok for b in self.blocks) and self.structural.passed

    @property
    def condition_c(self) -> bool:
        return all(
            b.certificate_ok and b.coefficient_sum == b.coefficient_sum_expected
            for b in self.blocks
        )

    @property
    def passed(self) -> bool:
        return self.condition_a and self.condition_b and self.condition_c

    @property
    def failures(self) -> tuple:
        return tuple(
            (b.l,) + b.first_failure for b in self.blocks if b.first_failure
        )


def _scan_rows(h_rows, h_cols, d, k, p, q, pairs):
    """Run the row check over (index, (left, right)) pairs.

    Stops at the first failing row.  Returns
    (checked, max_m_hat, max_n_hat, bound_ok, eq_ok, cert_ok, first_failure).
    """
    checked = 0
    max_m = max_n = 0
    bound_ok = eq_ok = cert_ok = True
    first_failure = None
    for index, (left, right) in pairs:
        b_ok, e_ok, c_ok, row_m, row_n = _check_row_scaled(
            h_rows, h_cols, d, k, p, q, left, right
        )
        checked += 1
        if row_m > max_m:
            max_m = row_m
        if row_n > max_n:
            max_n = row_n
        if not (b_ok and e_ok and c_ok):
            bound_ok &= b_ok
            eq_ok &= e_ok
            cert_ok &= c_ok
            reason = (
                "entry bound exceeded" if not b_ok
                else "matrix equation failed" if not e_ok
                else "combination certificate failed"
            )
            first_failure = (index, reason)
            break
    return checked, max_m, max_n, bound_ok, eq_ok, cert_ok, first_failure


_SCAN_STATE = None


def _scan_init(h_rows, h_cols, d, k, p, q):
    global _SCAN_STATE
    _SCAN_STATE = (h_rows, h_cols, d, k, p, q)


def _scan_worker(task):
    l, indices = task
    h_rows, h_cols, d, k, p, q = _SCAN_STATE
    stream = block_rows(d, k, l)
    return _scan_rows(
        h_rows, h_cols, d, k, p, q, ((i, stream.row(i)) for i in indices)
    )


def _merge_scans(parts):
    checked = 0
    max_m = max_n = 0
    bound_ok = eq_ok = cert_ok = True
    failures = []
    for c, mm, mn, b_ok, e_ok, c_ok, failure in parts:
        checked += c
        max_m = max(max_m, mm)
        max_n = max(max_n, mn)
        bound_ok &= b_ok
        eq_ok &= e_ok
        cert_ok &= c_ok
        if failure is not None:
            failures.append(failure)
    first_failure = min(failures) if failures else None
    return checked, max_m, max_n, bound_ok, eq_ok, cert_ok, first_failure


def verify_conditions(
    con: Construction,
    mode: str = "auto",
    row_cap: int = 1_000_000,
    sample_rows: int = 100_000,
    seed: int = 0,
    jobs: int = 1,
) -> ConditionsReport:
    """Check conditions (a), (b), (c) block by block.

    mode "auto" runs each block exhaustively when it has at most row_cap rows
    and on a sample of sample_rows rows otherwise; "exhaustive" and "sample"
    force one behavior for every block (exhaustive raises if a block exceeds
    the cap).  A sampled block always also checks its first and last row, and
    the sweep aborts a block at its first failing row, which is reported with
    its index.  With jobs > 1 each block's rows are split across worker
    processes; verdicts and maxima are independent of the job count.
    """
    if mode not in ("auto", "exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    d, k = con.d, con.k
    h_rows = con.hadamard.signs
    h_cols = con.hadamard.columns
    alpha, beta = con.params.alpha, con.params.beta
    p, q = alpha.numerator, alpha.denominator

    block_reports = []
    for l in range(k + 1):
        stream = block_rows(d, k, l)
        total = stream.count
        if mode == "exhaustive" and total > row_cap:
            raise ValueError(
                f"block l={l} has {total} rows, above the cap {row_cap}; "
                "run in sampled mode"
            )
        exhaustive = mode == "exhaustive" or (mode == "auto" and total <= row_cap)

        if exhaustive:
            indices = None
        else:
            gen = SplitMix64(block_sample_seed(seed, d, k, l))
            indices = [0, total - 1] if total > 1 else [0]
            indices += [gen.below(total) for _ in range(sample_rows)]

        if jobs > 1:
            if indices is None:
                indices = list(range(total))
            chunk = max(1, len(indices) // (jobs * 4))
            tasks = [
                (l, indices[i : i + chunk])
                for i in range(0, len(indices), chunk)
            ]
            ctx = multiprocessing.get_context()
            with ctx.Pool(
                processes=jobs,
                initializer=_scan_init,
                initargs=(h_rows, h_cols, d, k, p, q),
            ) as pool:
                parts = pool.map(_scan_worker, tasks)
            scan = _merge_scans(parts)
        elif indices is None:
            scan = _scan_rows(h_rows, h_cols, d, k, p, q, enumerate(stream))
        else:
            scan = _scan_rows(
                h_rows, h_cols, d, k, p, q,
                ((i, stream.row(i)) for i in indices),
            )
        checked, max_m, max_n, bound_ok, eq_ok, cert_ok, first_failure = scan

        musum = Fraction(4 * (k - l) * q * q + 4 * l * p * p * d, 4 * p * q * d)
        block_reports.append(
            BlockConditionReport(
                l=l,
                rows_total=total,
                rows_checked=checked,
                sampled=not exhaustive,
                max_abs_left=beta * max_m,
                max_abs_right=alpha * max_n,
                coefficient_sum=musum,
                coefficient_sum_expected=(k - l) * beta + l * alpha,
                entry_bound_ok=bound_ok,
                equation_ok=eq_ok,
                certificate_ok=cert_ok,
                first_failure=first_failure,
            )
        )

    return ConditionsReport(
        d=d,
        k=k,
        alpha=alpha,
        beta=beta,
        mode=mode,
        seed=seed,
        sample_rows=sample_rows,
        blocks=tuple(block_reports),
        structural=structural_identities(con),
    )


# -- general pairs (A, correction rule) -----------------------------------------


def cube_combination(x) -> list:
    """Write x (|entries| <= some s) as sum of mu_i * delta_i, delta in {+-1}^m.

    Staircase decomposition: sorting |x| in decreasing order a_1 >= ... >= a_m
    and letting u_p flip the signs of the tail positions gives weights
    (a_p - a_{p+1})/2 and (a_1 + a_m)/2, so the weights sum to exactly
    ||x||_inf.  Returns [] for the zero vector.
    """
    m = len(x)
    x = [Fraction(v) for v in x]
    if all(v == 0 for v in x):
        return []
    order = sorted(range(m), key=lambda j: (-abs(x[j]), j))
    mags = [abs(x[j]) for j in order]
    signs = [1 if x[j] >= 0 else -1 for j in order]
    terms = []
    for p in range(m):
        lam = (mags[p] - mags[p + 1]) / 2 if p < m - 1 else (mags[0] + mags[-1]) / 2
        if lam == 0:
            continue
        vertex = [0] * m
        for q, j in enumerate(order):
            vertex[j] = signs[q] if q <= p else -signs[q]
        terms.append((lam, tuple(vertex)))
    return terms


@dataclass(frozen=True)
class GeneralBlockReport:
    l: int
    rows_total: int
    rows_checked: int
    sampled: bool
    max_abs_entry: Fraction
    entry_bound_ok: bool
    equation_ok: bool
    certificate_ok: bool
    first_failure: tuple | None


@dataclass(frozen=True)
class GeneralReport:
    d: int
    n: int
    k: int
    blocks: tuple

    @property
    def passed(self) -> bool:
        return all(
            b.entry_bound_ok and b.equation_ok and b.certificate_ok
            for b in self.blocks
        )

    @property
    def failures(self) -> tuple:
        return tuple(
            (b.l,) + b.first_failure for b in self.blocks if b.first_failure
        )


def hadamard_correction_rule(a: Matrix):
    """Correction rule for A = alpha*H: f |-> beta f H^T, e |-> e A.

    Requires a square A whose entries all share one absolute value alpha > 0
    and whose sign pattern is a Hadamard matrix.
    """
    d, n = a.rows, a.cols
    if d != n:
        raise ValueError("the Hadamard correction rule needs a square A")
    alpha = abs(a.entry(0, 0))
    if alpha == 0 or any(abs(v) != alpha for row in a.data for v in row):
        raise ValueError("entries of A must all have the same absolute value")
    signs = tuple(
        tuple(1 if v > 0 else -1 for v in row) for row in a.data
    )
    if first_nonorthogonal_columns(signs) is not None:
        raise ValueError("the sign pattern of A is not a Hadamard matrix")
    beta = Fraction(1) / (alpha * d)
    cols = tuple(zip(*signs))

    def rule(left: SignedSupportRow, right: SignedSupportRow):
        m_row = tuple(beta * v for v in _signed_column_sum(cols, right))
        n_row = tuple(alpha * v for v in _signed_column_sum(signs, left))
        return m_row, n_row

    return rule


def verify_general(
    a: Matrix,
    k: int,
    correction_rule=None,
    row_cap: int = 20_000,
    sample_rows: int = 1_000,
    seed: int = 0,
) -> GeneralReport:
    """Check conditions (a), (b), (c) for a user-supplied pair (A, rule).

    The rule maps a block row (left, right) to exact correction rows of
    widths (d, n); it defaults to the Hadamard rule derived from A when A is
    square.  Condition (c) uses the generic staircase expansion, whose
    coefficient sum is the max-norm of the correction row, so (c) holds
    exactly when (a) does; the certificate is still re-summed in full.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    d, n = a.rows, a.cols
    rule = correction_rule if correction_rule is not None else hadamard_correction_rule(a)
    half = Fraction(1, 2)

    reports = []
    for l in range(k + 1):
        stream = block_rows(d, k, l, n=n)
        total = stream.count
        exhaustive = total <= row_cap
        rows = (
            enumerate(stream)
            if exhaustive
            else stream.sample(sample_rows, seed)
        )
        checked = 0
        max_abs = Fraction(0)
        bound_ok = eq_ok = cert_ok = True
        first_failure = None
        for index, (left, right) in rows:
            m_row, n_row = rule(left, right)
            if len(m_row) != d or len(n_row) != n:
                raise ValueError("correction rule returned wrong widths")
            checked += 1
            worst = max(
                max((abs(v) for v in m_row), default=Fraction(0)),
                max((abs(v) for v in n_row), default=Fraction(0)),
            )
            if worst > max_abs:
                max_abs = worst
            row_bound_ok = worst <= half
            e_dense = left.dense()
            lhs = [Fraction(0)] * n
            for j in range(d):
                coeff = e_dense[j] + m_row[j]
                if coeff:
                    arow = a.row(j)
                    for c in range(n):
                        lhs[c] += coeff * arow[c]
            f_dense = right.dense()
            row_eq_ok = all(lhs[c] == f_dense[c] + n_row[c] for c in range(n))
            row_cert_ok = True
            if row_bound_ok:
                terms = cube_combination(tuple(m_row) + tuple(n_row))
                shift = [Fraction(0)] * d
                for mu, delta in terms:
                    for j in range(d):
                        shift[j] += mu * delta[j]
                nus = tuple(e_dense[j] + shift[j] for j in range(d))
                total_mu = sum((mu for mu, _ in terms), Fraction(0))
                cert = CombinationCertificate(
                    block=l,
                    target=(Fraction(1),) + tuple(e_dense) + tuple(f_dense),
                    mu_terms=tuple(terms),
                    nus=nus,
                    eps=1 - 2 * total_mu,
                )
                try:
                    cert.verify(a)
                except ValueError:
                    row_cert_ok = False
            else:
                row_cert_ok = False
            if not (row_bound_ok and row_eq_ok and row_cert_ok):
                bound_ok &= row_bound_ok
                eq_ok &= row_eq_ok
                cert_ok &= row_cert_ok
                reason = (
                    "entry bound exceeded" if not row_bound_ok
                    else "matrix equation failed" if not row_eq_ok
                    else "combination certificate failed"
                )
                first_failure = (index, reason)
                break
        reports.append(
            GeneralBlockReport(
                l=l,
                rows_total=total,
                rows_checked=checked,
                sampled=not exhaustive,
                max_abs_entry=max_abs,
                entry_bound_ok=bound_ok,
                equation_ok=eq_ok,
                certificate_ok=cert_ok,
                first_failure=first_failure,
            )
        )
    return GeneralReport(d=d, n=n, k=k, blocks=tuple(reports))
