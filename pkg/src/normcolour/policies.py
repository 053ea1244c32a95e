"""Policy heuristics that score colour classes.

A policy evaluates a colour class by how often its members win pairwise
preference comparisons against the norms they conflict with:

* lex posterior — the earlier-declared norm wins a comparison (the textbook
  reading prefers the newer norm; ``prefer_recent`` flips the direction);
* lex superior — the norm from the stronger authority wins;
* lex specialis — a norm whose antecedents are a strict subset of the
  other's wins, and incomparable antecedent sets are a tie;
* weak-order — an explicit rank map, higher rank wins (generalises the
  three above);
* max-class — ignores preferences entirely and scores class size.

GROSS scoring counts wins only; NET subtracts losses. Ties contribute
nothing either way. Any callable ``(graph, colouring, colour) -> float``
can stand in for a policy wherever one is accepted, so bespoke heuristics
(trust models, etc.) plug in without touching this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Mapping, Union

from .colouring import Colouring
from .errors import UnknownColour, UnknownNormId
from .graph import ConflictGraph, NormId

WeakOrdering = Mapping[NormId, int]


class ScoreMode(Enum):
    GROSS = "gross"
    NET = "net"


class PolicyKind(Enum):
    LEX_POSTERIOR = "lex-posterior"
    LEX_SUPERIOR = "lex-superior"
    LEX_SPECIALIS = "lex-specialis"
    WEAK_ORDER = "weak-order"
    MAX_CLASS = "max-class"


@dataclass(frozen=True)
class Policy:
    kind: PolicyKind
    mode: ScoreMode = ScoreMode.NET
    ranks: WeakOrdering | None = None
    # Direction switch for lex posterior only: False follows the formula as
    # defined (earlier declaration wins), True prefers the newer norm.
    prefer_recent: bool = False

    def __post_init__(self) -> None:
        if self.kind is PolicyKind.WEAK_ORDER and self.ranks is None:
            raise ValueError("weak-order policy requires a rank map")

    @classmethod
    def lex_posterior(
        cls, mode: ScoreMode = ScoreMode.NET, *, prefer_recent: bool = False
    ) -> "Policy":
        return cls(PolicyKind.LEX_POSTERIOR, mode, prefer_recent=prefer_recent)

    @classmethod
    def lex_superior(cls, mode: ScoreMode = ScoreMode.NET) -> "Policy":
        return cls(PolicyKind.LEX_SUPERIOR, mode)

    @classmethod
    def lex_specialis(cls, mode: ScoreMode = ScoreMode.NET) -> "Policy":
        return cls(PolicyKind.LEX_SPECIALIS, mode)

    @classmethod
    def weak_order(cls, ranks: WeakOrdering, mode: ScoreMode = ScoreMode.NET) -> "Policy":
        return cls(PolicyKind.WEAK_ORDER, mode, ranks=dict(ranks))

    @classmethod
    def max_class(cls) -> "Policy":
        return cls(PolicyKind.MAX_CLASS)

    def prefers(self, g: ConflictGraph, a: NormId, b: NormId) -> bool:
        """Strict preference of a over b under this policy."""
        if self.kind is PolicyKind.LEX_POSTERIOR:
            ta, tb = g.norm(a).declared_at, g.norm(b).declared_at
            return ta > tb if self.prefer_recent else ta < tb
        if self.kind is PolicyKind.LEX_SUPERIOR:
            return g.norm(a).authority_rank > g.norm(b).authority_rank
        if self.kind is PolicyKind.LEX_SPECIALIS:
            return g.norm(a).antecedents < g.norm(b).antecedents
        if self.kind is PolicyKind.WEAK_ORDER:
            return _rank(self.ranks, a) > _rank(self.ranks, b)
        raise ValueError(f"{self.kind.value} is not a pairwise-preference policy")


Heuristic = Union[Policy, Callable[[ConflictGraph, Colouring, int], float]]


def _rank(ranks: WeakOrdering | None, v: NormId) -> int:
    assert ranks is not None
    try:
        return ranks[v]
    except KeyError:
        raise UnknownNormId(f"weak ordering assigns no rank to {v!r}") from None


def policy_label(policy: Heuristic) -> str:
    """Short, stable name used in CLI output, documents, and benchmark rows."""
    if isinstance(policy, Policy):
        if policy.kind is PolicyKind.MAX_CLASS:
            return policy.kind.value
        return f"{policy.kind.value}:{policy.mode.value}"
    return getattr(policy, "__name__", "custom")


def score_colour(g: ConflictGraph, phi: Colouring, c: int, policy: Heuristic) -> float:
    """Evaluate colour class c of phi under the given policy.

    Raises UnknownColour when c is outside phi's colour range.
    """
    if not 0 <= c < phi.num_colours:
        raise UnknownColour(f"colour {c} not in 0..{phi.num_colours - 1}")
    if not isinstance(policy, Policy):
        return float(policy(g, phi, c))

    members = [v for v in g.ids if phi.assignment[v] == c]
    if policy.kind is PolicyKind.MAX_CLASS:
        return float(len(members))

    total = 0
    for v in members:
        for w in g.neighbours(v):
            if policy.prefers(g, v, w):
                total += 1
            elif policy.mode is ScoreMode.NET and policy.prefers(g, w, v):
                total -= 1
    return float(total)


def rank_colours(g: ConflictGraph, phi: Colouring, policy: Heuristic) -> list[int]:
    """All colour ids, best score first; ties go to the lower colour id."""
    scores = {c: score_colour(g, phi, c, policy) for c in range(phi.num_colours)}
    return sorted(scores, key=lambda c: (-scores[c], c))


def ordering_from_metadata(
    g: ConflictGraph, kind: PolicyKind, *, prefer_recent: bool = False
) -> dict[NormId, int]:
    """Derive an explicit rank map from norm metadata.

    Lex posterior ranks by negated declaration time (earlier declared =
    higher rank, unless prefer_recent), lex superior by authority rank.
    """
    if kind is PolicyKind.LEX_POSTERIOR:
        sign = 1 if prefer_recent else -1
        return {norm.id: sign * norm.declared_at for norm in g.norms}
    if kind is PolicyKind.LEX_SUPERIOR:
        return {norm.id: norm.authority_rank for norm in g.norms}
    raise ValueError(f"no metadata-derived ordering for {kind.value}")


def score_admitted_set(
    g: ConflictGraph, admitted: Iterable[NormId], ranks: WeakOrdering
) -> int:
    """Net preference score of an admitted set.

    Each admitted norm contributes +1 for every conflicting neighbour it
    outranks and -1 for every one that outranks it; ties contribute 0.
    Over the full vertex set the two signs cancel edge by edge, so the
    total is 0.
    """
    total = 0
    for v in admitted:
        rv = _rank(ranks, v)
        for w in g.neighbours(v):
            rw = _rank(ranks, w)
            if rv > rw:
                total += 1
            elif rw > rv:
                total -= 1
    return total
