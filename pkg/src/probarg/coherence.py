"""Coherence checking and exact probability-bound propagation.

An Assessment constrains the probabilities of conditional objects; coherence
is decided by the recursive zero-layer procedure: solve a mass-assignment
system over the constituents, move the entries whose conditioning events are
forced to probability zero to a deeper layer restricted to the constituents
where some such conditioning event holds, and repeat. Each layer strictly
shrinks the active constituent set (a constituent satisfying no surviving
antecedent would carry positive mass into a forced-zero conditioning event),
so the recursion terminates.

Everything on the decision path is exact rational arithmetic: whether a
conclusion interval equals [0, 1] (probabilistic non-informativeness) is a
yes/no question, not a tolerance question.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .events import (
    ConditionalObject,
    constituents,
    eval_classical,
)
from .linprog import EQ, GE, solve_lp

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Exact conversion; accepts Fraction, int, or strings like '9/10', '0.9'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r} on the exact decision path")
    return Fraction(value)


@dataclass(frozen=True)
class AssessmentEntry:
    obj: ConditionalObject
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if not (ZERO <= self.lo <= self.hi <= ONE):
            raise ValueError(f"invalid probability interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Assessment:
    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            "entries",
            tuple(
                e if isinstance(e, AssessmentEntry) else AssessmentEntry(*e)
                for e in self.entries
            ),
        )

    def atoms(self) -> frozenset:
        out = frozenset()
        for e in self.entries:
            out |= e.obj.atoms()
        return out

    def extended(self, obj, lo, hi) -> "Assessment":
        return Assessment(self.entries + (AssessmentEntry(obj, lo, hi),))


@dataclass(frozen=True)
class Bounds:
    lo: Fraction
    hi: Fraction
    attained_lo: bool = True
    attained_hi: bool = True

    def __post_init__(self):
        if not (ZERO <= self.lo <= self.hi <= ONE):
            raise ValueError(f"invalid bounds [{self.lo}, {self.hi}]")

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Coherent:
    witness: tuple  # level-0 masses, indexed like constituents(atomset)
    atomset: tuple


@dataclass(frozen=True)
class Incoherent:
    level: int
    description: str


class IncoherentPremises(ValueError):
    def __init__(self, certificate: Incoherent):
        super().__init__(f"premises incoherent: {certificate.description}")
        self.certificate = certificate


class ResponseCategory(enum.Enum):
    HOLDS = "holds"
    DOES_NOT_HOLD = "does_not_hold"
    NON_INFORMATIVE = "non_informative"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ClassificationConfig:
    """Numeric reading of the verbal layer.

    theta is the value of "quite sure"; tau_high / tau_low are the decision
    thresholds the conclusion interval is compared against.
    """

    theta: Fraction = Fraction(9, 10)
    tau_high: Fraction = Fraction(1, 2)
    tau_low: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "theta", as_fraction(self.theta))
        object.__setattr__(self, "tau_high", as_fraction(self.tau_high))
        object.__setattr__(self, "tau_low", as_fraction(self.tau_low))
        if not (Fraction(1, 2) < self.theta <= ONE):
            raise ValueError("theta must be in (1/2, 1]")
        if not (ZERO <= self.tau_low <= self.tau_high <= ONE):
            raise ValueError("need 0 <= tau_low <= tau_high <= 1")


# --- layer systems -----------------------------------------------------------


def _entry_indices(entry, world_list):
    """Constituent indices where the antecedent (m) resp. its conjunction
    with the consequent (e) hold."""
    m_idx = [
        j for j, v in enumerate(world_list) if eval_classical(entry.obj.antecedent, v)
    ]
    e_idx = [j for j in m_idx if eval_classical(entry.obj.consequent, world_list[j])]
    return m_idx, e_idx


def _layer_rows(entries, world_list, extra_rows=()):
    """Constraint rows of one layer: masses sum to 1 plus, per entry,
    lo*m <= e <= hi*m rewritten as two homogeneous inequalities."""
    n = len(world_list)
    rows = [([ONE] * n, EQ, ONE)]
    for entry in entries:
        m_idx, e_idx = _entry_indices(entry, world_list)
        lo_row = [ZERO] * n
        hi_row = [ZERO] * n
        for j in m_idx:
            lo_row[j] -= entry.lo
            hi_row[j] += entry.hi
        for j in e_idx:
            lo_row[j] += ONE
            hi_row[j] -= ONE
        rows.append((lo_row, GE, ZERO))
        rows.append((hi_row, GE, ZERO))
    rows.extend(extra_rows)
    return rows


def _mass_row(obj, world_list):
    row = [ZERO] * len(world_list)
    for j, v in enumerate(world_list):
        if eval_classical(obj.antecedent, v):
            row[j] = ONE
    return row


def _forced_zero(entries, world_list, extra_rows=()):
    """Indices of entries whose conditioning event has zero mass in every
    solution of the layer system.

    Iterative fixpoint: maximize the summed antecedent mass over the current
    candidate set; a maximum of zero proves every candidate forced (the
    masses are nonnegative), otherwise drop the candidates that came out
    positive and retry. A single max-sum solve would not do: a vertex
    optimum can park an individual antecedent at zero even though another
    solution gives it positive mass.
    """
    candidates = list(range(len(entries)))
    rows = _layer_rows(entries, world_list, extra_rows)
    while candidates:
        objective = [ZERO] * len(world_list)
        for i in candidates:
            m_idx, _ = _entry_indices(entries[i], world_list)
            for j in m_idx:
                objective[j] += ONE
        res = solve_lp(objective, rows, maximize=True)
        if res.status != "optimal":
            raise RuntimeError(f"layer system unexpectedly {res.status}")
        if res.value == 0:
            return candidates
        kept = []
        for i in candidates:
            m_idx, _ = _entry_indices(entries[i], world_list)
            if sum(res.solution[j] for j in m_idx) == 0:
                kept.append(i)
        candidates = kept
    return []


def _restrict_worlds(world_list, antecedents):
    return [
        v for v in world_list if any(eval_classical(a, v) for a in antecedents)
    ]


def check_coherence(a: Assessment, atomset):
    """Decide coherence of an assessment over the declared atoms.

    Returns Coherent with a level-0 mass witness (chosen with maximal
    antecedent support) or Incoherent with the failing layer.
    """
    atomset = tuple(atomset)
    missing = a.atoms() - set(atomset)
    if missing:
        raise ValueError(f"undeclared atoms in assessment: {sorted(missing)}")
    world_list = constituents(atomset)
    entries = list(a.entries)
    witness = None
    level = 0
    while True:
        rows = _layer_rows(entries, world_list)
        support = [ZERO] * len(world_list)
        for entry in entries:
            m_idx, _ = _entry_indices(entry, world_list)
            for j in m_idx:
                support[j] += ONE
        res = solve_lp(support, rows, maximize=True)
        if res.status == "infeasible":
            desc = (
                f"level-{level} system over {len(world_list)} constituents is "
                f"unsolvable for entries: "
                + "; ".join(
                    f"p({e.obj}) in [{e.lo}, {e.hi}]" for e in entries
                )
            )
            return Incoherent(level, desc)
        if witness is None:
            witness = tuple(res.solution)
        forced = _forced_zero(entries, world_list)
        if not forced:
            return Coherent(witness, atomset)
        entries = [entries[i] for i in forced]
        world_list = _restrict_worlds(
            world_list, [e.obj.antecedent for e in entries]
        )
        level += 1


def structural_bounds(q: ConditionalObject):
    """[0,0] / [1,1] fast path for logically settled conditionals, else None."""
    names = sorted(q.atoms())
    worlds = constituents(names) if names else [{}]
    m_worlds = [v for v in worlds if eval_classical(q.antecedent, v)]
    # antecedent is satisfiable by construction, so m_worlds is nonempty
    truths = [eval_classical(q.consequent, v) for v in m_worlds]
    if not any(truths):
        return Bounds(ZERO, ZERO)
    if all(truths):
        return Bounds(ONE, ONE)
    return None


def _fractional_bounds(entries, world_list, q):
    """Exact min/max of e_q / m_q over the layer region with m_q > 0.

    Charnes-Cooper: scale masses so the antecedent of q carries total mass 1;
    the entry constraints are homogeneous so they survive the scaling, the
    normalization row is dropped, and the objective becomes linear. The
    objective is e_q(mu) <= m_q(mu) = 1, so both programs are bounded and
    their optima are attained by genuine mass vectors.
    """
    n = len(world_list)
    rows = [
        row for row in _layer_rows(entries, world_list) if row[1] == GE
    ]
    m_row = _mass_row(q, world_list)
    rows.append((m_row, EQ, ONE))
    e_row = [ZERO] * n
    for j, v in enumerate(world_list):
        if eval_classical(q.antecedent, v) and eval_classical(q.consequent, v):
            e_row[j] = ONE
    lo = solve_lp(e_row, rows, maximize=False)
    hi = solve_lp(e_row, rows, maximize=True)
    assert lo.status == "optimal" and hi.status == "optimal"
    return lo.value, hi.value


def propagate(a: Assessment, q: ConditionalObject, atomset) -> Bounds:
    """Exact coherent interval for p(q) given a coherent assessment.

    Level-0 bounds come from the linear-fractional program; whenever the
    antecedent of q may (or must) carry zero mass, the zero-layer where it
    becomes positive is searched as well, constrained by the premises that
    are forced to zero alongside it, and the results are joined.
    """
    verdict = check_coherence(a, atomset)
    if isinstance(verdict, Incoherent):
        raise IncoherentPremises(verdict)
    sb = structural_bounds(q)
    if sb is not None:
        return sb
    atomset = tuple(atomset)
    missing = q.atoms() - set(atomset)
    if missing:
        raise ValueError(f"undeclared atoms in query: {sorted(missing)}")
    world_list = constituents(atomset)
    return _propagate_layer(list(a.entries), world_list, q)


def _propagate_layer(entries, world_list, q) -> Bounds:
    rows = _layer_rows(entries, world_list)
    m_row = _mass_row(q, world_list)
    max_m = solve_lp(m_row, rows, maximize=True)
    if max_m.status != "optimal":
        raise RuntimeError(f"layer system unexpectedly {max_m.status}")
    if max_m.value > 0:
        lo, hi = _fractional_bounds(entries, world_list, q)
        min_m = solve_lp(m_row, rows, maximize=False)
        if min_m.value > 0:
            return Bounds(lo, hi)
        # m_q = 0 stays feasible: values settled only at the deeper layer
        # where q's antecedent turns positive remain coherent too.
        pinned = [(m_row, EQ, ZERO)]
        forced = _forced_zero(entries, world_list, extra_rows=pinned)
        deeper = _descend(entries, forced, world_list, q)
        return Bounds(min(lo, deeper.lo), max(hi, deeper.hi))
    forced = _forced_zero(entries, world_list)
    return _descend(entries, forced, world_list, q)


def _descend(entries, forced, world_list, q) -> Bounds:
    sub_entries = [entries[i] for i in forced]
    sub_worlds = _restrict_worlds(
        world_list, [q.antecedent] + [e.obj.antecedent for e in sub_entries]
    )
    # q's antecedent is satisfiable, so the restriction is nonempty; it is
    # also strictly smaller than world_list (otherwise the pinned masses
    # could not sum to one), which bounds the recursion depth.
    return _propagate_layer(sub_entries, sub_worlds, q)


def classify(b: Bounds, cfg: ClassificationConfig = ClassificationConfig()) -> ResponseCategory:
    """Map a conclusion interval to the forced-choice answer space.

    [0,1] is the non-informative case. Otherwise the interval midpoint is
    compared against the thresholds: an interval leaning above tau_high
    counts as holding, one leaning below tau_low as not holding, anything
    else stays indeterminate.
    """
    if b.lo == ZERO and b.hi == ONE:
        return ResponseCategory.NON_INFORMATIVE
    mid2 = b.lo + b.hi
    if mid2 > 2 * cfg.tau_high:
        return ResponseCategory.HOLDS
    if mid2 < 2 * cfg.tau_low:
        return ResponseCategory.DOES_NOT_HOLD
    return ResponseCategory.INDETERMINATE
