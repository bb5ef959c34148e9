"""Verdicts for each congruence and identity, plus prime sweeps and reports.

A verdict reduces both sides of a congruence to canonical residues. When a
side has a denominator sharing a factor with the modulus the congruence is
undefined: its residue is ``None`` and the verdict fails with a note.
Exact identities (grid and cube-root sums) use modulus 0 and store the raw
values in the residue fields.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import __version__
from .bernoulli import BernoulliCache, bernoulli_number, bernoulli_polynomial
from .exact import NonInvertibleDenominatorError, RationalLike, binomial, rational_mod
from .primes import PrimeRange, factorial_mod, is_prime
from .primesums import (
    cube_root_sum,
    cube_root_sum_closed,
    grid_sum,
    grid_sum_closed,
    partial_fermat_sum,
    t_sum,
)


class TheoremId(enum.Enum):
    # Declaration order is the report order.
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    EQ_UN = "eq_un"
    EQ_THREE_MINUS_P = "eq_three_minus_p"
    GLAISHER_P2 = "glaisher_p2"
    SUN_P3 = "sun_p3"
    WOLSTENHOLME_P3 = "wolstenholme_p3"
    GRID_IDENTITY = "grid_identity"
    CUBE_ROOT_IDENTITY = "cube_root_identity"

    @property
    def order(self) -> int:
        return _ORDER[self]

    @property
    def takes_r(self) -> bool:
        return self is TheoremId.THEOREM1


_ORDER = {t: i for i, t in enumerate(TheoremId)}


class RPolicy(enum.Enum):
    ALL_VALID_R = "all"
    R1_ONLY = "r1"


@dataclass(frozen=True)
class Verdict:
    theorem: TheoremId
    p: int
    modulus: int
    lhs_residue: int | None
    rhs_residue: int | None
    passed: bool
    r: int | None = None
    note: str = ""

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.theorem.order, self.p, 0 if self.r is None else self.r)

    def as_row(self) -> dict[str, str]:
        return {
            "theorem": self.theorem.value,
            "p": str(self.p),
            "r": "" if self.r is None else str(self.r),
            "modulus": str(self.modulus),
            "lhs_residue": "" if self.lhs_residue is None else str(self.lhs_residue),
            "rhs_residue": "" if self.rhs_residue is None else str(self.rhs_residue),
            "pass": "true" if self.passed else "false",
            "note": self.note,
        }

    def as_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "p": self.p,
            "r": self.r,
            "modulus": self.modulus,
            "lhs_residue": self.lhs_residue,
            "rhs_residue": self.rhs_residue,
            "pass": self.passed,
            "note": self.note,
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "Verdict":
        def opt(s: str) -> int | None:
            return None if s == "" else int(s)

        return cls(
            theorem=TheoremId(row["theorem"]),
            p=int(row["p"]),
            r=opt(row["r"]),
            modulus=int(row["modulus"]),
            lhs_residue=opt(row["lhs_residue"]),
            rhs_residue=opt(row["rhs_residue"]),
            passed=row["pass"] == "true",
            note=row["note"],
        )

    def describe(self) -> str:
        r = f" r={self.r}" if self.r is not None else ""
        status = "pass" if self.passed else "FAIL"
        lhs = "undefined" if self.lhs_residue is None else self.lhs_residue
        rhs = "undefined" if self.rhs_residue is None else self.rhs_residue
        if self.modulus == 0:
            rel = f"{lhs} {'=' if self.passed else '!='} {rhs} (exact)"
        else:
            rel = f"{lhs} {'≡' if self.passed else '≢'} {rhs} mod {self.modulus}"
        text = f"{self.theorem.value} p={self.p}{r}: {rel} -> {status}"
        if self.note:
            text += f" [{self.note}]"
        return text


def _residue(x: RationalLike, m: int, side: str, notes: list[str]) -> int | None:
    try:
        return rational_mod(x, m).value
    except NonInvertibleDenominatorError as exc:
        notes.append(f"{side} undefined: {exc}")
        return None


def _congruence_verdict(
    theorem: TheoremId,
    p: int,
    lhs: RationalLike,
    rhs: RationalLike,
    modulus: int,
    r: int | None = None,
    notes: Iterable[str] = (),
) -> Verdict:
    notes = list(notes)
    a = _residue(lhs, modulus, "lhs", notes)
    b = _residue(rhs, modulus, "rhs", notes)
    passed = a is not None and b is not None and a == b
    return Verdict(theorem, p, modulus, a, b, passed, r, "; ".join(notes))


def _require_prime(p: int, minimum: int = 2) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p < minimum:
        raise ValueError(f"p must be >= {minimum}, got {p}")


def theorem1_rhs(p: int, r: int, cache: BernoulliCache | None = None) -> Fraction:
    bern = bernoulli_polynomial(p + 1, r, cache) - bernoulli_number(p + 1, cache)
    return bern / (p * (p + 1)) + Fraction((r - 1 - p) * (p - r), 2 * p)


def verify_theorem1(
    p: int, r: int, cache: BernoulliCache | None = None, explore_p2: bool = False
) -> Verdict:
    _require_prime(p, 3)
    if not 1 <= r <= p - 1:
        raise ValueError(f"r must lie in [1, {p - 1}], got {r}")
    lhs = partial_fermat_sum(p, r)
    rhs = theorem1_rhs(p, r, cache)
    notes = []
    if explore_p2:
        m2 = p * p
        a = _residue(lhs, m2, "lhs mod p^2", notes)
        b = _residue(rhs, m2, "rhs mod p^2", notes)
        if a is not None and b is not None:
            notes.append(f"mod p^2: lhs={a} rhs={b}")
    return _congruence_verdict(TheoremId.THEOREM1, p, lhs, rhs, p, r, notes)


def verify_eq_un(p: int) -> Verdict:
    _require_prime(p, 3)
    return _congruence_verdict(TheoremId.EQ_UN, p, t_sum(p), Fraction(p + 1, 2), p)


def verify_eq_three_minus_p(p: int) -> Verdict:
    _require_prime(p, 3)
    return _congruence_verdict(
        TheoremId.EQ_THREE_MINUS_P, p, partial_fermat_sum(p, 2), Fraction(3 - p, 2), p
    )


def theorem2_lhs(p: int, cache: BernoulliCache | None = None) -> Fraction:
    n = p + 1
    total = (
        bernoulli_polynomial(n, p + 1, cache)
        + bernoulli_polynomial(n, p, cache)
        - 2 * bernoulli_number(n, cache)
    )
    return total / (p * (p + 1))


def verify_theorem2(p: int, cache: BernoulliCache | None = None) -> Verdict:
    _require_prime(p, 3)
    return _congruence_verdict(
        TheoremId.THEOREM2, p, theorem2_lhs(p, cache), p ** (p - 1), p
    )


def verify_glaisher(p: int, cache: BernoulliCache | None = None) -> Verdict:
    _require_prime(p, 3)
    m = p * p
    lhs = factorial_mod(p - 1, m).value
    rhs = p * bernoulli_number(p - 1, cache) - p
    return _congruence_verdict(TheoremId.GLAISHER_P2, p, lhs, rhs, m)


def sun_rhs(p: int, cache: BernoulliCache | None = None) -> Fraction:
    a = p * bernoulli_number(p - 1, cache) / (p - 1)
    b = p * bernoulli_number(2 * p - 2, cache) / (2 * (p - 1))
    return -a + b - a * a / 2


def verify_sun_p3(p: int, cache: BernoulliCache | None = None) -> Verdict:
    _require_prime(p, 5)
    m = p**3
    lhs = factorial_mod(p - 1, m).value
    return _congruence_verdict(TheoremId.SUN_P3, p, lhs, sun_rhs(p, cache), m)


def verify_wolstenholme(p: int) -> Verdict:
    """Any prime is accepted; below 5 the expected failure is noted."""
    _require_prime(p)
    notes = ["hypothesis p >= 5 not met"] if p < 5 else []
    return _congruence_verdict(
        TheoremId.WOLSTENHOLME_P3, p, binomial(2 * p - 1, p - 1), 1, p**3, notes=notes
    )


def verify_identity(kind: TheoremId | str, p: int) -> Verdict:
    kind = TheoremId(kind)
    _require_prime(p, 3)
    if kind is TheoremId.GRID_IDENTITY:
        brute, closed = grid_sum(p), grid_sum_closed(p)
    elif kind is TheoremId.CUBE_ROOT_IDENTITY:
        brute, closed = cube_root_sum(p), cube_root_sum_closed(p)
    else:
        raise ValueError(f"{kind.value} is not an exact identity")
    return Verdict(kind, p, 0, brute, closed, brute == closed)


def verify(
    theorem: TheoremId | str,
    p: int,
    r: int | None = None,
    cache: BernoulliCache | None = None,
    explore_p2: bool = False,
) -> Verdict:
    """Dispatch to the verifier for ``theorem``."""
    theorem = TheoremId(theorem)
    if theorem.takes_r:
        if r is None:
            raise ValueError("theorem1 needs r")
        return verify_theorem1(p, r, cache, explore_p2)
    if r is not None:
        raise ValueError(f"{theorem.value} takes no r")
    if theorem is TheoremId.THEOREM2:
        return verify_theorem2(p, cache)
    if theorem is TheoremId.EQ_UN:
        return verify_eq_un(p)
    if theorem is TheoremId.EQ_THREE_MINUS_P:
        return verify_eq_three_minus_p(p)
    if theorem is TheoremId.GLAISHER_P2:
        return verify_glaisher(p, cache)
    if theorem is TheoremId.SUN_P3:
        return verify_sun_p3(p, cache)
    if theorem is TheoremId.WOLSTENHOLME_P3:
        return verify_wolstenholme(p)
    return verify_identity(theorem, p)


_MIN_PRIME = {
    TheoremId.SUN_P3: 5,
    TheoremId.WOLSTENHOLME_P3: 5,
}


def applicable(theorem: TheoremId, p: int) -> bool:
    """Whether a sweep should include ``p`` for ``theorem``."""
    return p >= _MIN_PRIME.get(theorem, 3) and p % 2 == 1


def sweep_cells(
    theorems: Iterable[TheoremId | str], prime_range: PrimeRange, r_policy: RPolicy | str
) -> list[tuple[TheoremId, int, int | None]]:
    r_policy = RPolicy(r_policy)
    ordered = sorted({TheoremId(t) for t in theorems}, key=lambda t: t.order)
    primes = list(prime_range)
    cells = []
    for theorem in ordered:
        for p in primes:
            if not applicable(theorem, p):
                continue
            if theorem.takes_r:
                rs = range(1, p) if r_policy is RPolicy.ALL_VALID_R else (1,)
                cells.extend((theorem, p, r) for r in rs)
            else:
                cells.append((theorem, p, None))
    return cells


def _run_cell(cell, explore_p2: bool = False) -> Verdict:
    theorem, p, r = cell
    return verify(theorem, p, r, explore_p2=explore_p2)


def _run_cell_explore(cell) -> Verdict:
    return _run_cell(cell, True)


@dataclass(frozen=True)
class SweepReport:
    verdicts: tuple[Verdict, ...]
    metadata: dict = field(default_factory=dict)

    CSV_COLUMNS = ("theorem", "p", "r", "modulus", "lhs_residue", "rhs_residue", "pass", "note")

    @property
    def failures(self) -> int:
        return sum(not v.passed for v in self.verdicts)

    def __len__(self) -> int:
        return len(self.verdicts)

    def summary(self) -> str:
        return f"{len(self.verdicts)} verdicts, {self.failures} failures"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for v in self.verdicts:
            writer.writerow(v.as_row())
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {"metadata": self.metadata, "verdicts": [v.as_json() for v in self.verdicts]}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_csv(cls, text: str, metadata: dict | None = None) -> "SweepReport":
        rows = csv.DictReader(io.StringIO(text))
        return cls(tuple(Verdict.from_row(row) for row in rows), metadata or {})


def sweep(
    theorems: Iterable[TheoremId | str],
    prime_range: PrimeRange,
    r_policy: RPolicy | str = RPolicy.ALL_VALID_R,
    *,
    workers: int = 1,
    explore_p2: bool = False,
    timestamp: str | None = None,
) -> SweepReport:
    """Verify every applicable (theorem, p, r) cell in ``prime_range``.

    Primes that do not meet a theorem's hypotheses are skipped, not errors.
    With ``workers > 1`` cells run in separate processes, each with its own
    Bernoulli cache; the verdict order is the same either way.
    """
    r_policy = RPolicy(r_policy)
    theorems = list(theorems)
    cells = sweep_cells(theorems, prime_range, r_policy)
    run = _run_cell_explore if explore_p2 else _run_cell
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(run, cells, chunksize=max(1, len(cells) // (4 * workers))))
    else:
        verdicts = [run(cell) for cell in cells]
    verdicts.sort(key=lambda v: v.sort_key)
    metadata = {
        "tool": "primecong",
        "version": __version__,
        "theorems": [t.value for t in sorted({TheoremId(t) for t in theorems}, key=lambda t: t.order)],
        "pmin": prime_range.lower,
        "pmax": prime_range.upper,
        "r_policy": r_policy.value,
    }
    if timestamp is not None:
        metadata["timestamp"] = timestamp
    return SweepReport(tuple(verdicts), metadata)
