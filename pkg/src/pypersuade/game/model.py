"""Core value objects: labels, beliefs, information policies and games."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction

from typing_extensions import Self

from pypersuade.game.errors import BeliefError, GameValidationError, ParameterError, PolicyError

logger = logging.getLogger(__name__)

Row = tuple[Fraction, ...]
Matrix = tuple[Row, ...]


def dot(row: Sequence[Fraction], probs: Sequence[Fraction]) -> Fraction:
    """Exact inner product of a payoff row with a belief."""
    return sum((a * b for a, b in zip(row, probs, strict=True)), Fraction(0))


@dataclass(frozen=True)
class Label:
    """A state or action label with an optional numeric position."""

    name: str
    position: Fraction | None = None

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if not self.name:
            raise GameValidationError("labels must be non-empty strings", "label")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Belief:
    """A point of the simplex over all listed states."""

    probs: Row

    def __post_init__(self) -> None:
        """Coerce entries to fractions and check the simplex constraints."""
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise BeliefError("a belief needs at least one state")
        if any(p < 0 for p in probs):
            raise BeliefError(f"negative probability in {self}")
        if sum(probs) != 1:
            raise BeliefError(f"probabilities of {self} sum to {sum(probs)}, not 1")

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.probs) + ")"

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, index: int) -> Fraction:
        return self.probs[index]

    @classmethod
    def point_mass(cls, dimension: int, state: int) -> Self:
        """Degenerate belief on ``state``."""
        return cls(tuple(Fraction(int(i == state)) for i in range(dimension)))

    @classmethod
    def uniform(cls, support: Iterable[int], dimension: int) -> Self:
        """Uniform belief over ``support``."""
        states = set(support)
        return cls(tuple(Fraction(1, len(states)) if i in states else Fraction(0) for i in range(dimension)))

    @classmethod
    def binary(cls, second: Fraction) -> Self:
        """Two-state belief putting probability ``second`` on the second state."""
        return cls((1 - Fraction(second), Fraction(second)))

    @property
    def support(self) -> frozenset[int]:
        """Indices of the states with positive probability."""
        return frozenset(i for i, p in enumerate(self.probs) if p > 0)

    def mix(self, other: "Belief", weight: Fraction) -> "Belief":
        """Return ``(1 - weight) * self + weight * other``."""
        return Belief(tuple(a + weight * (b - a) for a, b in zip(self.probs, other.probs, strict=True)))


@dataclass(frozen=True)
class ValueInterval:
    """The value correspondence ``V(mu) = [w(mu), v(mu)]`` at one belief."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        """Perform basic validation after initialization."""
        if self.lo > self.hi:
            raise ParameterError(f"empty value interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        """Length of the interval."""
        return self.hi - self.lo


def barycenter(pairs: Sequence[tuple[Belief, Fraction]]) -> Belief:
    """Weighted average of beliefs."""
    dimension = len(pairs[0][0])
    return Belief(
        tuple(sum((w * b[i] for b, w in pairs), Fraction(0)) for i in range(dimension))
    )


@dataclass(frozen=True)
class InformationPolicy:
    """A finitely supported distribution over posterior beliefs.

    The barycenter is computed once, exactly, when the policy is built.
    """

    support: tuple[tuple[Belief, Fraction], ...]
    barycenter: Belief = field(init=False, compare=False)

    def __post_init__(self) -> None:
        """Check weights and distinctness, then cache the barycenter."""
        if not self.support:
            raise PolicyError("an information policy needs at least one support point")
        if any(w <= 0 for _, w in self.support):
            raise PolicyError("support weights must be positive")
        if sum(w for _, w in self.support) != 1:
            raise PolicyError("support weights must sum to 1")
        beliefs = [b for b, _ in self.support]
        if len(set(beliefs)) != len(beliefs):
            raise PolicyError("support beliefs must be distinct")
        if len({len(b) for b in beliefs}) != 1:
            raise PolicyError("support beliefs have different dimensions")
        object.__setattr__(self, "barycenter", barycenter(self.support))

    def __len__(self) -> int:
        return len(self.support)

    @classmethod
    def from_weights(cls, pairs: Iterable[tuple[Belief, Fraction]]) -> Self:
        """Build a policy, merging repeated beliefs and dropping zero weights.

        Args:
            pairs: (belief, weight) pairs, possibly repeating beliefs.

        Returns:
            The merged policy, support ordered by belief.
        """
        merged: dict[Belief, Fraction] = {}
        for belief, weight in pairs:
            merged[belief] = merged.get(belief, Fraction(0)) + Fraction(weight)
        return cls(tuple(sorted((b, w) for b, w in merged.items() if w != 0)))

    @classmethod
    def degenerate(cls, belief: Belief) -> Self:
        """The policy revealing nothing: all mass on ``belief``."""
        return cls(((belief, Fraction(1)),))

    @property
    def beliefs(self) -> list[Belief]:
        """Support beliefs in order."""
        return [b for b, _ in self.support]

    @property
    def weights(self) -> list[Fraction]:
        """Support weights in order."""
        return [w for _, w in self.support]


@dataclass(frozen=True)
class GameSpec:
    """A finite Bayesian persuasion game with exact rational payoffs.

    Payoff matrices are indexed ``[action][state]``.
    """

    states: tuple[Label, ...]
    actions: tuple[Label, ...]
    prior: Belief
    u_sender: Matrix
    u_receiver: Matrix

    def __post_init__(self) -> None:
        """Validate dimensions, labels and positions."""
        object.__setattr__(self, "u_sender", _as_matrix(self.u_sender))
        object.__setattr__(self, "u_receiver", _as_matrix(self.u_receiver))
        if len(self.states) < 2:
            raise GameValidationError("at least two states are required", "states")
        if len(self.actions) < 2:
            raise GameValidationError("at least two actions are required", "actions")
        for name, labels in (("states", self.states), ("actions", self.actions)):
            names = [label.name for label in labels]
            if len(set(names)) != len(names):
                raise GameValidationError("duplicate labels", name)
            positions = [label.position for label in labels]
            if any(p is not None for p in positions):
                if any(p is None for p in positions):
                    raise GameValidationError("positions must be given for all or none", name)
                if len(set(positions)) != len(positions):
                    raise GameValidationError("positions must be distinct", name)
        if len(self.prior) != len(self.states):
            raise GameValidationError(
                f"prior has {len(self.prior)} entries for {len(self.states)} states", "prior"
            )
        for name, matrix in (("u_sender", self.u_sender), ("u_receiver", self.u_receiver)):
            if len(matrix) != len(self.actions) or any(len(r) != len(self.states) for r in matrix):
                raise GameValidationError(
                    f"expected a {len(self.actions)}x{len(self.states)} matrix", name
                )

    def __str__(self) -> str:
        return f"GameSpec({len(self.states)} states, {len(self.actions)} actions)"

    @property
    def n_states(self) -> int:
        """Number of states."""
        return len(self.states)

    @property
    def n_actions(self) -> int:
        """Number of actions."""
        return len(self.actions)

    @property
    def full_mask(self) -> frozenset[int]:
        """All state indices."""
        return frozenset(range(self.n_states))

    @property
    def has_positions(self) -> bool:
        """Whether both states and actions carry numeric positions."""
        return all(label.position is not None for label in (*self.states, *self.actions))

    @property
    def sender_state_independent(self) -> bool:
        """Whether every row of the sender matrix is constant across states."""
        return all(len(set(row)) == 1 for row in self.u_sender)

    def sender_payoff(self, action: int, belief: Belief) -> Fraction:
        """Expected sender payoff of ``action`` at ``belief``."""
        return dot(self.u_sender[action], belief.probs)

    def receiver_payoff(self, action: int, belief: Belief) -> Fraction:
        """Expected receiver payoff of ``action`` at ``belief``."""
        return dot(self.u_receiver[action], belief.probs)

    def check_belief(self, belief: Belief) -> None:
        """Raise :class:`BeliefError` unless ``belief`` lives on this game's simplex."""
        if len(belief) != self.n_states:
            raise BeliefError(f"belief {belief} has {len(belief)} entries for {self.n_states} states")

    def with_prior(self, prior: Belief) -> Self:
        """Copy of the game with another prior."""
        return replace(self, prior=prior)

    def with_receiver(self, u_receiver: Sequence[Sequence[Fraction]]) -> Self:
        """Copy of the game with another receiver matrix."""
        return replace(self, u_receiver=_as_matrix(u_receiver))

    def action_names(self, actions: Iterable[int]) -> list[str]:
        """Names of the given action indices, in index order."""
        return [self.actions[a].name for a in sorted(actions)]


def _as_matrix(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)
