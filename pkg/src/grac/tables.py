"""Reference tables recomputed from scratch and compared against pinned values.

Five reports:

    I   three explicit classical strategies on the full 7-question set
        (totals and per-question rows, exact)
    II  classical optima per cardinality plus the plain RAC column (exact)
    Q   one-qubit optima per cardinality vs closed forms (1e-5)
    III critical depolarizing noise per cardinality (1e-4)
    IV  entanglement-assisted values per cardinality (1e-4); the open
        quadruple needs local dimension 4 to reach its 3/4

Representative sets are the lexicographically smallest of each cardinality
(and of each 4-question class); optima are orbit invariants, so any
representative reproduces the table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .channels import critical_depolarizing
from .classical import (
    ClassicalStrategy,
    classical_optimum,
    evaluate_classical,
    identity_decoding,
    majority_encoding,
    per_label_wins,
    rac_optimum,
)
from .eacc import eacc_seesaw
from .mubs import BooleanFn, FunctionSet, full_mubs
from .quantum import seesaw

TABLE_IDS = ("I", "II", "Q", "III", "IV")

_REPRESENTATIVES = {
    ("k=2", None): (1, 2),
    ("k=3", None): (1, 2, 3),
    ("k=4", "xor-closed"): (1, 2, 4, 7),
    ("k=4", "open"): (1, 2, 3, 4),
    ("k=5", None): (1, 2, 3, 4, 5),
    ("k=6", None): (1, 2, 3, 4, 5, 6),
    ("k=7", None): (1, 2, 3, 4, 5, 6, 7),
}


def representative_set(k: int, quad_class: str | None = None) -> FunctionSet:
    """Lex-smallest width-3 question set of a given cardinality (and class for k=4)."""
    if k == 4 and quad_class not in ("xor-closed", "open"):
        raise ValueError("cardinality 4 needs quad_class 'xor-closed' or 'open'")
    if k != 4 and quad_class is not None:
        raise ValueError("quad_class only applies to cardinality 4")
    key = (f"k={k}", quad_class)
    if key not in _REPRESENTATIVES:
        raise ValueError(f"no representative for cardinality {k}")
    return FunctionSet.from_ints(3, _REPRESENTATIVES[key])


@dataclass(frozen=True)
class TableRow:
    label: str
    computed: float
    reference: float
    delta: float
    detail: str = ""


@dataclass(frozen=True)
class TableReport:
    table_id: str
    tolerance: float
    rows: tuple[TableRow, ...]

    @property
    def max_delta(self) -> float:
        return max((abs(r.delta) for r in self.rows), default=0.0)

    def row_passed(self, row: TableRow) -> bool:
        return abs(row.delta) <= self.tolerance

    @property
    def passed(self) -> bool:
        return all(self.row_passed(r) for r in self.rows)


def _row(label: str, computed: float, reference: float, detail: str = "") -> TableRow:
    return TableRow(label, float(computed), float(reference), float(computed - reference), detail)


# ---------------------------------------------------------------------------
# Table I: explicit strategies on the full set

_TABLE_I_LABEL_ORDER = (4, 2, 1, 6, 5, 3, 7)  # presentation order: x1, x2, x3, ...

_TABLE_I_STRATEGIES = {
    "majority + identity": (232, (), {4: 6, 2: 6, 1: 6, 6: 4, 5: 4, 3: 4, 7: 2}, Fraction(32, 56)),
    "majority + identity, flip on 111": (
        232,
        (7,),
        {4: 6, 2: 6, 1: 6, 6: 4, 5: 4, 3: 4, 7: 6},
        Fraction(36, 56),
    ),
    "x1 and not(x2 and x3), flips on 010,001,111": (
        112,
        (2, 1, 7),
        {4: 7, 2: 5, 1: 5, 6: 5, 5: 5, 3: 5, 7: 5},
        Fraction(37, 56),
    ),
}


def table_one() -> TableReport:
    fset = full_mubs(3)
    rows = []
    for name, (enc_table, flips, label_refs, total_ref) in _TABLE_I_STRATEGIES.items():
        strat = ClassicalStrategy(
            BooleanFn(3, enc_table), identity_decoding(fset, invert=flips)
        )
        total = evaluate_classical(strat, fset)
        rows.append(
            _row(f"{name}: total", total.value, float(total_ref), detail=str(total))
        )
        wins = per_label_wins(strat, fset)
        for r in _TABLE_I_LABEL_ORDER:
            rows.append(
                _row(
                    f"{name}: label {format(r, '03b')}",
                    wins[r].value,
                    label_refs[r] / 8.0,
                    detail=str(wins[r]),
                )
            )
    return TableReport("I", 0.0, tuple(rows))


# ---------------------------------------------------------------------------
# Table II: classical optima and the RAC column

_TABLE_II_RAC = {
    2: Fraction(3, 4),
    3: Fraction(3, 4),
    4: Fraction(11, 16),
    5: Fraction(11, 16),
    6: Fraction(21, 32),
    7: Fraction(21, 32),
}

_TABLE_II_GRAC = {
    ("k=2", None): Fraction(3, 4),
    ("k=3", None): Fraction(3, 4),
    ("k=4", "xor-closed"): Fraction(3, 4),
    ("k=4", "open"): Fraction(11, 16),
    ("k=5", None): Fraction(7, 10),
    ("k=6", None): Fraction(2, 3),
    ("k=7", None): Fraction(37, 56),
}


def table_two() -> TableReport:
    rows = []
    for k, ref in _TABLE_II_RAC.items():
        val = rac_optimum(k)
        delta = 0.0 if val.as_fraction() == ref else val.value - float(ref)
        rows.append(TableRow(f"RAC k={k}", val.value, float(ref), delta, str(val)))
    for (kname, qclass), ref in _TABLE_II_GRAC.items():
        k = int(kname.split("=")[1])
        fset = representative_set(k, qclass)
        val = classical_optimum(fset)[0]
        delta = 0.0 if val.as_fraction() == ref else val.value - float(ref)
        cname = f" ({qclass})" if qclass else ""
        rows.append(TableRow(f"GRAC {kname}{cname}", val.value, float(ref), delta, str(val)))
    return TableReport("II", 0.0, tuple(rows))


# ---------------------------------------------------------------------------
# Table Q: one-qubit optima vs closed forms

def _closed_form(k: int) -> float:
    return 0.5 * (1.0 + 1.0 / math.sqrt(k))


_OPEN_QUAD_VALUE = 0.5 * (1.0 + (math.sqrt(2.0) + math.sqrt(6.0)) / 8.0)

_TABLE_Q_GRAC = {
    ("k=2", None): _closed_form(2),
    ("k=3", None): _closed_form(3),
    ("k=4", "xor-closed"): 0.75,
    ("k=4", "open"): _OPEN_QUAD_VALUE,
    ("k=5", None): _closed_form(5),
    ("k=6", None): _closed_form(6),
    ("k=7", None): _closed_form(7),
}


def table_q(seed: int = 0, restarts: int = 16) -> TableReport:
    rows = []
    for (kname, qclass), ref in _TABLE_Q_GRAC.items():
        k = int(kname.split("=")[1])
        fset = representative_set(k, qclass)
        report = seesaw(fset, restarts=restarts, seed=seed)
        cname = f" ({qclass})" if qclass else ""
        rows.append(_row(f"GRAC {kname}{cname}", report.value, ref))
    return TableReport("Q", 1e-5, tuple(rows))


# ---------------------------------------------------------------------------
# Table III: critical depolarizing noise

_TABLE_III = {
    ("k=2", None): 0.29289,
    ("k=3", None): 0.13396,
    ("k=4", "open"): 0.22354,
    ("k=5", None): 0.10555,
    ("k=6", None): 0.18349,
    ("k=7", None): 0.14957,
}


def table_three(seed: int = 0, restarts: int = 16) -> TableReport:
    rows = []
    for (kname, qclass), ref in _TABLE_III.items():
        k = int(kname.split("=")[1])
        fset = representative_set(k, qclass)
        lam = critical_depolarizing(fset, restarts=restarts, seed=seed)
        cname = f" ({qclass})" if qclass else ""
        rows.append(_row(f"lambda_crit {kname}{cname}", lam, ref))
    return TableReport("III", 1e-4, tuple(rows))


# ---------------------------------------------------------------------------
# Table IV: entanglement-assisted values

_TABLE_IV_D2 = {
    ("k=2", None): _closed_form(2),
    ("k=3", None): _closed_form(3),
    ("k=4", "xor-closed"): 0.75,
    ("k=5", None): _closed_form(5),
    ("k=6", None): _closed_form(6),
    ("k=7", None): _closed_form(7),
}


def table_four(seed: int = 0, restarts: int = 8, open_quad_restarts: int = 64) -> TableReport:
    rows = []
    for (kname, qclass), ref in _TABLE_IV_D2.items():
        k = int(kname.split("=")[1])
        fset = representative_set(k, qclass)
        value, _ = eacc_seesaw(fset, local_dim=2, restarts=restarts, seed=seed)
        cname = f" ({qclass})" if qclass else ""
        rows.append(_row(f"EACC {kname}{cname}, local dim 2", value, ref))
    open_quad = representative_set(4, "open")
    value, _ = eacc_seesaw(open_quad, local_dim=4, restarts=open_quad_restarts, seed=seed)
    rows.append(_row("EACC k=4 (open), local dim 4", value, 0.75))
    return TableReport("IV", 1e-4, tuple(rows))


def reproduce_tables(which=TABLE_IDS, seed: int = 0) -> list[TableReport]:
    """Recompute the requested tables; invalid ids raise ValueError."""
    builders = {
        "I": lambda: table_one(),
        "II": lambda: table_two(),
        "Q": lambda: table_q(seed=seed),
        "III": lambda: table_three(seed=seed),
        "IV": lambda: table_four(seed=seed),
    }
    for t in which:
        if t not in builders:
            raise ValueError(f"unknown table id {t!r}; valid ids: {TABLE_IDS}")
    return [builders[t]() for t in which]
