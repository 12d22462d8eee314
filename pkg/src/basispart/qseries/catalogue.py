"""Both sides of every catalogued generating-function identity, and a checker.

Identity ids carry the equation numbers they are known by (``eq5.3``,
``eq8.2-printed``, ...).  Where one side is a census, the census is the
ground truth; it is computed by enumeration and so needs the order to stay
within the enumeration limit.  Sides keep the orientation of the displayed
identity.

Indexed identities (``k`` or ``j``) check a single index when it is bound
and every index whose summand reaches q^order otherwise.  Bindings for z, b,
zeta and a substitute integers into both sides before comparing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from ..errors import BasisPartError, OrderLimitError, PreconditionError
from ..partitions import _check_limit, count_at_most_k_parts, partitions_of
from . import formulas as F
from .poly import VARIABLES, ParamPolynomial, a, b, z, zeta
from .series import Series

MAX_ORDER = 80

# printed forms that are known to disagree with the census
DOCUMENTED_MISMATCHES = frozenset({"eq8.2-printed", "eq8.3-printed", "eq9.3-printed", "eq9.4-printed"})


class UnknownIdentity(BasisPartError, KeyError):
    def __init__(self, ident):
        super().__init__(ident)
        self.ident = ident

    def __str__(self):
        return f"unknown identity id {self.ident!r}"


# census series, built by enumeration ------------------------------------------


def _series(order: int, coeff: Callable[[int], ParamPolynomial]) -> Series:
    return Series(order, [coeff(n) for n in range(order + 1)])


def _poly(entries) -> ParamPolynomial:
    total = ParamPolynomial.const(0)
    for mono, c in entries:
        total = total + mono * c
    return total


@lru_cache(maxsize=None)
def _basis_census_series(order: int, k: Optional[int], mark_z: bool, mark_a: bool, signed: bool) -> Series:
    from ..basis import basis_census

    def coeff(n):
        entries = basis_census(n, limit=n).entries
        return _poly(
            ((z ** s if mark_z else ParamPolynomial.const(1)) * (a ** kk if mark_a else 1), c * ((-1) ** s if signed else 1))
            for (kk, s), c in entries.items()
            if k is None or kk == k
        )

    return _series(order, coeff)


@lru_cache(maxsize=None)
def _fixed_signature_census(order: int, j: Optional[int]) -> Series:
    from ..basis import basis_census

    def coeff(n):
        entries = basis_census(n, limit=n).entries
        return _poly((z ** s if j is None else ParamPolynomial.const(1), c) for (_, s), c in entries.items() if j is None or s == j)

    return _series(order, coeff)


def _durfee_decomposition_series(order: int, k: int) -> Series:
    # square, then <= k rows on the right and rows of length <= k below
    counts = []
    for n in range(order + 1):
        rest = n - k * k
        if rest < 0:
            counts.append(0)
            continue
        counts.append(sum(count_at_most_k_parts(m, k) * count_at_most_k_parts(rest - m, k) for m in range(rest + 1)))
    return Series(order, counts)


def _rr_census(order: int, k: int) -> Series:
    from ..primary import rr_partitions_of

    return Series(order, [len(rr_partitions_of(n, k, limit=n)) for n in range(order + 1)])


@lru_cache(maxsize=None)
def _complete_census_series(order: int, with_z: bool) -> Series:
    from ..complete import complete_census

    def coeff(n):
        c = complete_census(n, limit=n)
        if with_z:
            return _poly((z ** s, m) for s, m in c.by_signature.items())
        return ParamPolynomial.const(c.total)

    return _series(order, coeff)


@lru_cache(maxsize=None)
def _pod_basis_series(order: int, refined: bool) -> Series:
    from ..pod import pod_census

    def coeff(n):
        c = pod_census(n, limit=n, check=False)
        if refined:
            return _poly((z ** s * b ** o, m) for (s, o), m in c.basis.items())
        return ParamPolynomial.const(c.basis_total)

    return _series(order, coeff)


@lru_cache(maxsize=None)
def _pod_basis_case_census(order: int, k: int, corner_one: bool) -> Series:
    from ..pod import pod_census

    return Series(order, [pod_census(n, limit=n, check=False).by_square.get((k, corner_one), 0) for n in range(order + 1)])


@lru_cache(maxsize=None)
def _pod_minimal_series(order: int, refined: bool) -> Series:
    from ..pod import pod_census

    def coeff(n):
        c = pod_census(n, limit=n, check=False)
        if refined:
            return _poly((zeta ** e, m) for e, m in c.minimal.items())
        return ParamPolynomial.const(c.minimal_total)

    return _series(order, coeff)


@lru_cache(maxsize=None)
def _special_weight_series(order: int, corrected: bool, with_z: bool) -> Series:
    from ..pod import corrected_gap_count, is_special, literal_gap_count

    count = corrected_gap_count if corrected else literal_gap_count
    base = (1 + z) if with_z else ParamPolynomial.const(2)

    def coeff(n):
        total = ParamPolynomial.const(0)
        for s in partitions_of(n, distinct=True, limit=n):
            if is_special(s):
                total = total + base ** count(s)
        return total

    return _series(order, coeff)


# catalogue ----------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    ident: str
    description: str
    left: Callable[[int, Optional[int]], Series]
    right: Callable[[int, Optional[int]], Series]
    index: Optional[str] = None
    # smallest q-exponent reached by the summand with index i
    valuation: Callable[[int], int] = lambda i: 0
    first_index: int = 0
    census_side: Optional[str] = None

    def indices(self, order: int) -> List[int]:
        out = []
        i = self.first_index
        while self.valuation(i) <= order:
            out.append(i)
            i += 1
        return out


def _need_index(f):
    def wrapped(order, idx):
        if idx is None:
            raise PreconditionError("this side needs an index binding")
        return f(order, idx)

    return wrapped


_SQ = lambda k: k * k  # noqa: E731


def _catalogue() -> Dict[str, Identity]:
    ids = [
        Identity(
            "eq2.1",
            "partitions with a k x k Durfee square: q^(k^2)/(q;q)_k^2",
            _need_index(_durfee_decomposition_series),
            _need_index(lambda N, k: F.durfee_square_gf(N, k)),
            index="k",
            valuation=_SQ,
        ),
        Identity(
            "eq2.2",
            "Durfee-square series equals the basis series divided by (q^2;q^2)_k",
            _need_index(lambda N, k: F.durfee_square_gf(N, k)),
            _need_index(lambda N, k: F.durfee_square_from_basis_gf(N, k)),
            index="k",
            valuation=_SQ,
        ),
        Identity(
            "eq2.3",
            "basis partitions with Durfee side k: q^(k^2)(-q;q)_k/(q;q)_k",
            _need_index(lambda N, k: _basis_census_series(N, k, False, False, False)),
            _need_index(lambda N, k: F.basis_gf(N, k)),
            index="k",
            valuation=_SQ,
            census_side="left",
        ),
        Identity(
            "eq2.5",
            "Rogers-Ramanujan partitions into exactly k parts: q^(k^2)/(q;q)_k",
            _need_index(_rr_census),
            _need_index(lambda N, k: F.rogers_ramanujan_gf(N, k)),
            index="k",
            valuation=_SQ,
            census_side="left",
        ),
        Identity(
            "eq5.2",
            "basis partitions by Durfee side and signature: q^(k^2)(-zq;q)_k/(q;q)_k",
            _need_index(lambda N, k: _basis_census_series(N, k, True, False, False)),
            _need_index(lambda N, k: F.signature_gf(N, k)),
            index="k",
            valuation=_SQ,
            census_side="left",
        ),
        Identity(
            "eq5.3",
            "signature series at z = -1 collapses to sum q^(k^2)",
            lambda N, _: F.signature_gf(N).substitute(z=-1),
            lambda N, _: F.partial_theta(N),
        ),
        Identity(
            "eq5.3-census",
            "even minus odd signature counts of basis partitions equal sum q^(k^2)",
            lambda N, _: _basis_census_series(N, None, False, False, True),
            lambda N, _: F.partial_theta(N),
            census_side="left",
        ),
        Identity(
            "eq7.1",
            "sum_k q^(k^2)(-zq)_k/(q)_k against basis partitions by signature",
            lambda N, _: F.signature_gf(N),
            lambda N, _: _fixed_signature_census(N, None),
            census_side="right",
        ),
        Identity(
            "eq7.2",
            "sum_k q^(k^2)(-zq)_k/(q)_k equals sum_j z^j q^((3j^2+j)/2)/(q)_j sum_i q^(i^2+2ij)/(q)_i",
            lambda N, _: F.signature_gf(N),
            lambda N, _: F.fixed_signature_gf(N),
        ),
        Identity(
            "eq7.2-binomial",
            "sum_k q^(k^2)(-zq)_k/(q)_k equals its q-binomial expansion",
            lambda N, _: F.signature_gf(N),
            lambda N, _: F.signature_binomial_form(N),
        ),
        Identity(
            "eq7.3",
            "basis partitions of signature j: q^((3j^2+j)/2)/(q)_j sum_i q^(i^2+2ij)/(q)_i",
            _need_index(lambda N, j: _fixed_signature_census(N, j)),
            _need_index(lambda N, j: F.fixed_signature_gf(N, j)),
            index="j",
            valuation=lambda j: (3 * j * j + j) // 2,
            census_side="left",
        ),
        Identity(
            "eq8.2-printed",
            "complete basis partitions against the printed series",
            lambda N, _: _complete_census_series(N, False),
            lambda N, _: F.complete_gf(N, corrected=False),
            census_side="left",
        ),
        Identity(
            "eq8.2-corrected",
            "complete basis partitions against the series with the (q;q)_(k-1) denominators",
            lambda N, _: _complete_census_series(N, False),
            lambda N, _: F.complete_gf(N, corrected=True),
            census_side="left",
        ),
        Identity(
            "eq8.3-printed",
            "complete basis partitions by signature against the printed series",
            lambda N, _: _complete_census_series(N, True),
            lambda N, _: F.complete_gf(N, corrected=False, with_z=True),
            census_side="left",
        ),
        Identity(
            "eq8.3-corrected",
            "complete basis partitions by signature against the corrected series",
            lambda N, _: _complete_census_series(N, True),
            lambda N, _: F.complete_gf(N, corrected=True, with_z=True),
            census_side="left",
        ),
        Identity(
            "eq9.3-printed",
            "basis partitions with distinct odd parts against 2^(gaps > 4) over special partitions",
            lambda N, _: _pod_basis_series(N, False).substitute(z=1, b=1),
            lambda N, _: _special_weight_series(N, False, False),
            census_side="left",
        ),
        Identity(
            "eq9.3-corrected",
            "basis partitions with distinct odd parts against 2^(slidable classes) over special partitions",
            lambda N, _: _pod_basis_series(N, False),
            lambda N, _: _special_weight_series(N, True, False),
            census_side="left",
        ),
        Identity(
            "eq9.4-printed",
            "basis partitions by signature against (1+z)^(gaps > 4) over special partitions",
            lambda N, _: _pod_basis_series(N, True).substitute(b=1),
            lambda N, _: _special_weight_series(N, False, True),
            census_side="left",
        ),
        Identity(
            "eq9.4-corrected",
            "basis partitions by signature against (1+z)^(slidable classes) over special partitions",
            lambda N, _: _pod_basis_series(N, True).substitute(b=1),
            lambda N, _: _special_weight_series(N, True, True),
            census_side="left",
        ),
        Identity(
            "eq9.5",
            "basis partitions with an all-2 k x k square",
            _need_index(lambda N, k: _pod_basis_case_census(N, k, False)),
            _need_index(lambda N, k: F.pod_basis_case_gf(N, k, corner_one=False)),
            index="k",
            valuation=lambda k: 2 * k * k,
            census_side="left",
        ),
        Identity(
            "eq9.6",
            "basis partitions with a k x k square whose corner is 1",
            _need_index(lambda N, k: _pod_basis_case_census(N, k, True)),
            _need_index(lambda N, k: F.pod_basis_case_gf(N, k, corner_one=True)),
            index="k",
            valuation=lambda k: 2 * k * k - 1,
            first_index=1,
            census_side="left",
        ),
        Identity(
            "eq9.7",
            "basis partitions with distinct odd parts",
            lambda N, _: _pod_basis_series(N, False),
            lambda N, _: F.pod_basis_gf(N),
            census_side="left",
        ),
        Identity(
            "eq9.8",
            "basis partitions with distinct odd parts by signature (z) and odd parts (b)",
            lambda N, _: F.pod_basis_gf(N, refined=True),
            lambda N, _: _pod_basis_series(N, True),
            census_side="right",
        ),
        Identity(
            "eq9.9",
            "minimal basis partitions",
            lambda N, _: _pod_minimal_series(N, False),
            lambda N, _: F.pod_minimal_gf(N),
            census_side="left",
        ),
        Identity(
            "eq9.10",
            "minimal basis partitions by l-signature (zeta)",
            lambda N, _: _pod_minimal_series(N, True),
            lambda N, _: F.pod_minimal_gf(N, refined=True),
            census_side="left",
        ),
        Identity(
            "eq9.11",
            "refined basis series at z = -1",
            lambda N, _: F.pod_basis_gf(N, refined=True).substitute(z=-1),
            lambda N, _: F.pod_parity_collapse(N),
        ),
        Identity(
            "eq9.14",
            "refined minimal series at zeta = -1",
            lambda N, _: F.pod_minimal_gf(N, refined=True).substitute(zeta=-1),
            lambda N, _: F.minimal_parity_collapse(N),
        ),
        Identity(
            "eq9.17",
            "G(a,z;q) = sum_k a^k q^(k^2)(-zq)_k/(q)_k against basis partitions by side (a) and signature (z)",
            lambda N, _: F.signature_gf(N, mark_side=True),
            lambda N, _: _basis_census_series(N, None, True, True, False),
            census_side="right",
        ),
    ]
    return {i.ident: i for i in ids}


CATALOGUE: Mapping[str, Identity] = _catalogue()


def _natural_key(ident: str):
    return [int(x) if x.isdigit() else x for x in re.split(r"(\d+)", ident)]


def identity_ids() -> List[str]:
    """Catalogue ids in natural order (eq9.3 before eq9.10)."""
    return sorted(CATALOGUE, key=_natural_key)


def get_identity(ident: str) -> Identity:
    try:
        return CATALOGUE[ident]
    except KeyError:
        raise UnknownIdentity(ident) from None


def _split_bindings(identity: Identity, bindings: Optional[Mapping[str, int]]):
    bindings = dict(bindings or {})
    idx = None
    if identity.index is not None and identity.index in bindings:
        idx = int(bindings.pop(identity.index))
    unknown = [name for name in bindings if name not in VARIABLES]
    if unknown:
        raise PreconditionError(f"{identity.ident} does not take bindings {unknown}")
    return idx, {name: int(v) for name, v in bindings.items()}


def _check_order(order: int, identity: Identity, limit: Optional[int]) -> None:
    if order < 0:
        raise PreconditionError("order must be non-negative")
    if order > MAX_ORDER:
        raise OrderLimitError(order, MAX_ORDER)
    if identity.census_side is not None:
        _check_limit(order, limit)


def build_side(ident: str, side: str, order: int, bindings: Optional[Mapping[str, int]] = None,
               limit: Optional[int] = None) -> Series:
    """One side of an identity to q^order, with index and parameter bindings applied."""
    identity = get_identity(ident)
    if side not in ("left", "right"):
        raise PreconditionError(f"side must be left or right, not {side!r}")
    _check_order(order, identity, limit)
    idx, values = _split_bindings(identity, bindings)
    if identity.index is not None and idx is None:
        raise PreconditionError(f"{ident} needs the index {identity.index} bound")
    builder = identity.left if side == "left" else identity.right
    s = builder(order, idx)
    return s.substitute(**values) if values else s


@dataclass(frozen=True)
class IdentityReport:
    ident: str
    order: int
    verdict: str  # "equal" or "mismatch"
    mismatch: Optional[Tuple[int, ParamPolynomial, ParamPolynomial]] = None
    bindings: Mapping[str, int] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"

    @property
    def documented(self) -> bool:
        return self.ident in DOCUMENTED_MISMATCHES

    def to_json(self) -> dict:
        out = {"id": self.ident, "order": self.order, "verdict": self.verdict}
        if self.bindings:
            out["bindings"] = dict(sorted(self.bindings.items()))
        if self.mismatch is not None:
            n, left, right = self.mismatch
            out["mismatch"] = {"exponent": n, "left": left.to_json(), "right": right.to_json()}
        return out

    def __str__(self):
        where = "".join(f" {k}={v}" for k, v in sorted(self.bindings.items()))
        if self.equal:
            return f"{self.ident}{where}: equal to q^{self.order}"
        n, left, right = self.mismatch
        return f"{self.ident}{where}: first mismatch at q^{n} (left {left}, right {right})"


def check_identity(ident: str, order: int, bindings: Optional[Mapping[str, int]] = None,
                   limit: Optional[int] = None) -> IdentityReport:
    """Compare both sides coefficient by coefficient up to q^order.

    An unbound index runs over every value whose summand reaches q^order;
    the report names the first index that mismatches.
    """
    identity = get_identity(ident)
    _check_order(order, identity, limit)
    idx, values = _split_bindings(identity, bindings)
    if identity.index is None:
        candidates = [None]
    elif idx is not None:
        candidates = [idx]
    else:
        candidates = identity.indices(order)
    for i in candidates:
        left = identity.left(order, i)
        right = identity.right(order, i)
        if values:
            left, right = left.substitute(**values), right.substitute(**values)
        bound = dict(values)
        if i is not None:
            bound[identity.index] = i
        mm = left.first_mismatch(right)
        if mm is not None:
            return IdentityReport(ident, order, "mismatch", mm, bound)
    bound = dict(values)
    if idx is not None:
        bound[identity.index] = idx
    return IdentityReport(ident, order, "equal", None, bound)


# specialization lattice ----------------------------------------------------------


@dataclass(frozen=True)
class LatticeCheck:
    name: str
    mismatch: Optional[Tuple[int, ParamPolynomial, ParamPolynomial]] = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def __str__(self):
        if self.ok:
            return f"{self.name}: ok"
        n, left, right = self.mismatch
        return f"{self.name}: first mismatch at q^{n} (left {left}, right {right})"


def _negative_coefficient(s: Series) -> Optional[Tuple[int, ParamPolynomial, ParamPolynomial]]:
    ones = s.substitute(**{name: 1 for name in VARIABLES})
    for n, c in enumerate(ones.integer_coefficients()):
        if c < 0:
            return n, ParamPolynomial.const(c), ParamPolynomial.const(0)
    return None


def specialization_lattice(order: int = 50, max_k: int = 6, limit: Optional[int] = None) -> List[LatticeCheck]:
    """Consistency checks between specializations of the catalogued series.

    Also checks that every census side has non-negative coefficients once all
    parameters are set to 1.
    """
    if order > MAX_ORDER:
        raise OrderLimitError(order, MAX_ORDER)
    _check_limit(order, limit)
    N = order
    checks = []

    def add(name, left, right):
        checks.append(LatticeCheck(name, left.first_mismatch(right)))

    for k in range(max_k + 1):
        refined = F.signature_gf(N, k)
        add(f"eq5.2 k={k} at z=1 vs eq2.3", refined.substitute(z=1), F.basis_gf(N, k))
        add(f"eq5.2 k={k} at z=0 vs eq2.5", refined.substitute(z=0), F.rogers_ramanujan_gf(N, k))
    add("eq9.17 at a=1 vs eq5.2 summed over k", F.signature_gf(N, mark_side=True).substitute(a=1), F.signature_gf(N))
    add("eq9.8 at z=-1 vs eq9.11", F.pod_basis_gf(N, refined=True).substitute(z=-1), F.pod_parity_collapse(N))
    add("eq9.10 at zeta=-1 vs eq9.14", F.pod_minimal_gf(N, refined=True).substitute(zeta=-1),
        F.minimal_parity_collapse(N))
    add("eq8.3-corrected at z=1 vs eq8.2-corrected", F.complete_gf(N, with_z=True).substitute(z=1), F.complete_gf(N))
    add("eq7.1 vs eq7.2 double sum", F.signature_gf(N), F.fixed_signature_gf(N))

    for ident in identity_ids():
        identity = CATALOGUE[ident]
        if identity.census_side is None:
            continue
        builder = identity.left if identity.census_side == "left" else identity.right
        for i in identity.indices(N) if identity.index else [None]:
            name = f"{ident} census non-negative" + (f" {identity.index}={i}" if i is not None else "")
            checks.append(LatticeCheck(name, _negative_coefficient(builder(N, i))))
    return checks
