#!/usr/bin/env python3
"""
Influence - Score Types

Absolute and relative scores of a game.

The four absolute scores are the vertex counts each player secures when moving
first (index 1) or second (index 2). INFLUENCE is constant-sum, so the two
Left scores determine the other two.

Author: Influence Contributors
License: MIT
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict

from graph_core.errors import AuditError


@dataclass(frozen=True)
class RelScores:
    """
    Left-score and Right-score of a game.

    Attributes:
        ls (int): Left's margin when Left moves first
        rs (int): Left's margin when Right moves first
    """

    ls: int
    rs: int

    @property
    def incentive(self) -> int:
        return self.ls - self.rs

    def negated(self) -> "RelScores":
        """Scores of the negative game."""
        return RelScores(ls=-self.rs, rs=-self.ls)

    def __add__(self, other: "RelScores") -> "RelScores":
        return RelScores(self.ls + other.ls, self.rs + other.rs)


@dataclass(frozen=True)
class ScoreQuad:
    """
    Absolute scores of a game.

    Attributes:
        s_l1 (int): Left's vertex count when Left moves first
        s_l2 (int): Left's vertex count when Right moves first
        s_r1 (int): Right's vertex count when Right moves first
        s_r2 (int): Right's vertex count when Left moves first
    """

    s_l1: int
    s_l2: int
    s_r1: int
    s_r2: int

    @classmethod
    def from_left(cls, n: int, s_l1: int, s_l2: int) -> "ScoreQuad":
        """Complete a quad from the two Left scores of an n-vertex game."""
        return cls(s_l1=s_l1, s_l2=s_l2, s_r1=n - s_l2, s_r2=n - s_l1)

    @classmethod
    def from_rel(cls, n: int, rel: RelScores) -> "ScoreQuad":
        if (n + rel.ls) % 2 or (n + rel.rs) % 2:
            raise AuditError(f"scores {rel} do not share the parity of n={n}")
        return cls.from_left(n, (n + rel.ls) // 2, (n + rel.rs) // 2)

    @property
    def n(self) -> int:
        return self.s_l1 + self.s_r2

    @property
    def ls(self) -> int:
        return self.s_l1 - self.s_r2

    @property
    def rs(self) -> int:
        return self.s_l2 - self.s_r1

    @property
    def incentive(self) -> int:
        return self.ls - self.rs

    @property
    def rel(self) -> RelScores:
        return RelScores(self.ls, self.rs)

    @property
    def is_nonzugzwang(self) -> bool:
        return self.s_l1 >= self.s_l2 and self.s_r1 >= self.s_r2

    def with_credits(self, credit_l: int, credit_r: int) -> "ScoreQuad":
        """Fold vertices banked outside the game back into the quad."""
        return ScoreQuad.from_left(
            self.n + credit_l + credit_r,
            self.s_l1 + credit_l,
            self.s_l2 + credit_l,
        )

    def check(self) -> None:
        """
        Raise AuditError unless the quad is constant-sum and parity-consistent.
        """
        n = self.n
        if self.s_l2 + self.s_r1 != n:
            raise AuditError(f"quad {self} is not constant-sum")
        if min(self.s_l1, self.s_l2, self.s_r1, self.s_r2) < 0:
            raise AuditError(f"quad {self} has a negative entry")
        if (self.ls - n) % 2 or (self.rs - n) % 2:
            raise AuditError(f"quad {self} breaks the parity of n={n}")

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data.update(n=self.n, ls=self.ls, rs=self.rs, incentive=self.incentive)
        return data


ZERO = ScoreQuad(0, 0, 0, 0)
