"""Criterion-versus-oracle comparison over a grid of ``(n, field, delta)``."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .blocktheory import BlockPartition, char0_blocks, charp_blocks, nonintegral_blocks
from .diagoracle.center import oracle_cell_blocks, oracle_max_n
from .diagoracle.fields import Field, PrimeField, QuadraticExtensionField, RationalField


@dataclass(frozen=True)
class Case:
    kind: str  # "charp", "char0" or "ext"
    n: int
    p: int | None
    delta: Any

    @property
    def key(self) -> str:
        if self.kind == "char0":
            return f"char0:n={self.n}:delta={self.delta}"
        if self.kind == "ext":
            a, b = self.delta
            return f"ext:n={self.n}:p={self.p}:delta={a}+{b}x"
        return f"charp:n={self.n}:p={self.p}:delta={self.delta}"

    def field(self) -> Field:
        if self.kind == "char0":
            return RationalField()
        if self.kind == "ext":
            return QuadraticExtensionField(self.p)
        return PrimeField(self.p)

    def criterion(self) -> BlockPartition:
        if self.kind == "char0":
            return char0_blocks(self.n, self.delta)
        if self.kind == "ext":
            a, b = self.delta
            if b % self.p == 0:
                return charp_blocks(self.n, self.p, a)
            return nonintegral_blocks(self.n, self.p)
        return charp_blocks(self.n, self.p, self.delta)


@dataclass
class VerifyConfig:
    n_max: int = 3
    primes: tuple[int, ...] = (2, 3, 5)
    char0: bool = True
    ext: bool = False
    single: Case | None = None
    oracle_max_n: int | None = None

    def cases(self) -> list[Case]:
        if self.single is not None:
            return [self.single]
        out = []
        for n in range(1, self.n_max + 1):
            for p in self.primes:
                out += [Case("charp", n, p, d) for d in range(1, p)]
        if self.char0:
            for n in range(1, self.n_max + 1):
                out += [Case("char0", n, None, d) for d in list(range(1, 2 * n)) + [-1]]
        if self.ext:
            for n in range(1, self.n_max + 1):
                out.append(Case("ext", n, 2, (0, 1)))
        return out

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "primes": list(self.primes),
            "char0": self.char0,
            "ext": self.ext,
            "single": None if self.single is None else asdict(self.single) | {"delta": _json_delta(self.single.delta)},
            "oracle_max_n": oracle_max_n(self.oracle_max_n),
        }


def _json_delta(d: Any) -> Any:
    return list(d) if isinstance(d, tuple) else d


def run_verification(config: VerifyConfig, with_timings: bool = True, progress: Callable[[str], None] | None = None) -> dict:
    criterion: dict[str, Any] = {}
    oracle: dict[str, Any] = {}
    timings: dict[str, float] = {}
    mismatches: list[str] = []
    start = time.perf_counter()
    for case in config.cases():
        t0 = time.perf_counter()
        crit = case.criterion()
        F = case.field()
        delta = F.coerce(case.delta)
        orc = oracle_cell_blocks(case.n, delta, F, config.oracle_max_n)
        criterion[case.key] = crit.to_json()
        oracle[case.key] = orc.to_json()
        timings[case.key] = round(time.perf_counter() - t0, 4)
        if crit != orc:
            mismatches.append(case.key)
        if progress:
            progress(f"{case.key}: {'ok' if crit == orc else 'MISMATCH'}")
    timings["total"] = round(time.perf_counter() - start, 4)
    return {
        "config": config.to_json(),
        "criterion_blocks": criterion,
        "oracle_blocks": oracle,
        "match": not mismatches,
        "mismatches": mismatches,
        "timings": timings if with_timings else None,
    }
