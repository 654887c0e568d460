"""Verification harness: replays the reference enumeration counts and the
closed-form identities, with a time budget for the expensive cells.

Each check becomes one record; the report serializes as TSV with columns
family, shape, n, k, m, expected, actual, source, status, seconds.  A cell
whose estimated cost exceeds the remaining budget is skipped loudly rather
than run.  Costs are estimated from the cell's known expected count and a
rate measured by a small probe enumeration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .asm import count_chained_asm
from .boards import BoardSpec, Shape, circular, linear, max_rooks
from .counting import count_max, count_placements_formula
from .placements import count_placements_brute

# (shape, n, k) -> reference count of chained alternating sign matrices
TABLE_CELLS: tuple[tuple[BoardSpec, int], ...] = tuple(
    (BoardSpec(shape, n, k), expected)
    for shape, rows in (
        (
            Shape.LINEAR,
            {
                1: (1, 2, 7, 42, 429, 7436),
                2: (2, 17, 504, 53932),
                3: (1, 4, 49),
                4: (3, 159, 98028),
                5: (1, 8),
                6: (4, 1129),
                7: (1, 16),
                8: (5, 7151),
            },
        ),
        (
            Shape.CIRCULAR,
            {
                1: (1, 2, 20, 40, 3430, 6860),
                2: (2, 10, 140, 5544),
                3: (3, 14, 3861),
                4: (2, 42, 7436),
                5: (5, 82),
                6: (2, 214),
                7: (7, 478),
                8: (2, 1186),
                9: (9, 2786),
            },
        ),
    )
    for k, counts in rows.items()
    for n, expected in enumerate(counts, start=1)
)

_SAFETY = 5.0


@dataclass(frozen=True)
class VerificationRecord:
    family: str
    shape: str
    n: int
    k: int
    m: int
    expected: int
    actual: int | None
    source: str
    status: str
    seconds: float

    def row(self) -> str:
        actual = "-" if self.actual is None else str(self.actual)
        return "\t".join(
            [
                self.family,
                self.shape,
                str(self.n),
                str(self.k),
                str(self.m),
                str(self.expected),
                actual,
                self.source,
                self.status,
                f"{self.seconds:.3f}",
            ]
        )


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[VerificationRecord, ...]

    HEADER = "family\tshape\tn\tk\tm\texpected\tactual\tsource\tstatus\tseconds"

    def to_tsv(self) -> str:
        return "\n".join([self.HEADER, *(r.row() for r in self.records)]) + "\n"

    @property
    def failures(self) -> tuple[VerificationRecord, ...]:
        return tuple(r for r in self.records if r.status == "fail")

    @property
    def skipped(self) -> tuple[VerificationRecord, ...]:
        return tuple(r for r in self.records if r.status == "skip")


def _probe_rate() -> float:
    """Chained ASMs enumerated per second, measured on a small cell."""
    start = time.perf_counter()
    count_chained_asm(circular(2, 6))
    elapsed = max(time.perf_counter() - start, 1e-6)
    return 214 / elapsed


def verify_tables(
    max_n: int | None = None,
    max_k: int | None = None,
    budget_seconds: float = 30.0,
) -> VerificationReport:
    records = []
    deadline = time.perf_counter() + budget_seconds
    rate = _probe_rate()

    for board, expected in TABLE_CELLS:
        if (max_n is not None and board.n > max_n) or (max_k is not None and board.k > max_k):
            continue
        m = max_rooks(board)
        estimate = expected / rate * _SAFETY
        if estimate > deadline - time.perf_counter():
            records.append(
                VerificationRecord(
                    "chained-asm", board.shape.value, board.n, board.k, m,
                    expected, None, "paper-table", "skip", 0.0,
                )
            )
            continue
        start = time.perf_counter()
        actual = count_chained_asm(board)
        seconds = time.perf_counter() - start
        records.append(
            VerificationRecord(
                "chained-asm", board.shape.value, board.n, board.k, m,
                expected, actual, "paper-table",
                "pass" if actual == expected else "fail", seconds,
            )
        )

    for shape in (linear, circular):
        for n in range(1, 5):
            for k in range(1, 7):
                board = shape(n, k)
                m = max_rooks(board)
                want = count_max(board)
                start = time.perf_counter()
                got = count_placements_formula(board, m)
                seconds = time.perf_counter() - start
                records.append(
                    VerificationRecord(
                        "max-placements", board.shape.value, n, k, m,
                        want, got, "closed-form",
                        "pass" if got == want else "fail", seconds,
                    )
                )

    for shape in (linear, circular):
        for n in range(1, 3):
            for k in range(1, 4):
                board = shape(n, k)
                m = max_rooks(board)
                start = time.perf_counter()
                brute = count_placements_brute(board, m)
                seconds = time.perf_counter() - start
                formula = count_placements_formula(board, m)
                records.append(
                    VerificationRecord(
                        "placements", board.shape.value, n, k, m,
                        brute, formula, "brute-force",
                        "pass" if formula == brute else "fail", seconds,
                    )
                )

    return VerificationReport(tuple(records))


__all__ = ["VerificationRecord", "VerificationReport", "verify_tables", "TABLE_CELLS"]
