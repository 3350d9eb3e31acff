"""Edge labelings, induced colourings and colour profiles."""

from collections import Counter

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.utils.app_errors import AppError, AppErrorCode

from .graph import Graph


class EdgeLabeling(BaseModel):
    """Bijection from edge indices onto 1..q, stored as labels[edge_index]."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[int, ...]

    @field_validator("labels")
    @classmethod
    def check_bijection(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if not v:
            raise AppError(
                errcode=AppErrorCode.E_LABELING_MISMATCH,
                errmesg="A labeling needs at least one edge",
            )
        if sorted(v) != list(range(1, len(v) + 1)):
            raise AppError(
                errcode=AppErrorCode.E_LABELING_MISMATCH,
                errmesg=f"Labels are not a bijection onto 1..{len(v)}",
            )
        return v

    @property
    def q(self) -> int:
        return len(self.labels)

    @classmethod
    def from_labels(cls, labels: list[int] | tuple[int, ...], g: Graph) -> "EdgeLabeling":
        """Labeling for g; the label count must match the edge count."""
        if len(labels) != g.edge_count:
            raise AppError(
                errcode=AppErrorCode.E_LABELING_MISMATCH,
                errmesg=f"Got {len(labels)} labels for {g.edge_count} edges",
            )
        return cls(labels=tuple(labels))

    def label_of(self, edge_index: int) -> int:
        return self.labels[edge_index]

    def edge_with_label(self, label: int) -> int:
        return self.labels.index(label)


class InducedColoring(BaseModel):
    """colors[v] = sum of the labels on edges incident to v."""

    model_config = ConfigDict(frozen=True)

    colors: tuple[int, ...]

    @property
    def distinct(self) -> list[int]:
        return sorted(set(self.colors))

    @property
    def count(self) -> int:
        return len(set(self.colors))

    def multiset(self) -> Counter:
        return Counter(self.colors)


class ColorProfile(BaseModel):
    """Decomposition of a local antimagic labeling into ordered colour classes.

    Classes 1..r each contain a non-pendant vertex (colours increasing); classes
    r+1..t are pendant singletons (colours increasing). Class indices in the public
    helpers are 1-based. `members` is absent for synthetic profiles entered by hand.
    """

    model_config = ConfigDict(frozen=True)

    e: int
    t: int
    r: int
    b: int
    sizes: tuple[int, ...]
    colors: tuple[int, ...]
    pendant_classes: tuple[int, ...] = ()
    members: tuple[tuple[int, ...], ...] | None = None

    @model_validator(mode="after")
    def check_invariants(self) -> "ColorProfile":
        problems: list[str] = []
        if len(self.sizes) != self.t or len(self.colors) != self.t:
            problems.append(f"expected {self.t} classes, got {len(self.sizes)} sizes / {len(self.colors)} colors")
        if not 1 <= self.r <= self.t:
            problems.append(f"r={self.r} outside 1..t={self.t}")
        if problems:
            raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg="; ".join(problems))

        top, tail = self.colors[: self.r], self.colors[self.r :]
        if any(a >= b for a, b in zip(top, top[1:])):
            problems.append(f"non-pendant class colors not increasing: {top}")
        if any(a >= b for a, b in zip(tail, tail[1:])):
            problems.append(f"pendant class colors not increasing: {tail}")
        if any(size != 1 for size in self.sizes[self.r :]):
            problems.append("pendant classes must be singletons")
        if any(c > self.e for c in tail):
            problems.append(f"a pendant color exceeds e={self.e}")
        if any(size < 1 for size in self.sizes):
            problems.append("class sizes must be positive")
        if sum(n * c for n, c in zip(self.sizes, self.colors)) != self.e * (self.e + 1):
            problems.append(f"sum of n_i*c_i differs from e(e+1)={self.e * (self.e + 1)}")
        if any(not 1 <= i <= self.r for i in self.pendant_classes):
            problems.append(f"pendant_classes {self.pendant_classes} outside 1..r")
        if not 0 <= self.b <= sum(self.sizes[: self.r]):
            problems.append(f"b={self.b} out of range")
        if self.b and not self.pendant_classes and self.members is None:
            problems.append("b > 0 needs pendant_classes on a synthetic profile")
        if problems:
            raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg="; ".join(problems))
        return self

    @classmethod
    def from_synthetic(
        cls,
        e: int,
        colors: list[int],
        sizes: list[int],
        r: int,
        b: int = 0,
        pendant_classes: list[int] | None = None,
    ) -> "ColorProfile":
        """Build a profile without an underlying labeling (prediction only)."""
        return cls(
            e=e,
            t=len(colors),
            r=r,
            b=b,
            sizes=tuple(sizes),
            colors=tuple(colors),
            pendant_classes=tuple(pendant_classes or ()),
        )

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)

    @property
    def pendant_count(self) -> int:
        return self.t - self.r + self.b

    @property
    def is_synthetic(self) -> bool:
        return self.members is None

    def class_color(self, i: int) -> int:
        return self.colors[i - 1]

    def class_size(self, i: int) -> int:
        return self.sizes[i - 1]

    def class_members(self, i: int) -> tuple[int, ...]:
        if self.members is None:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg="Synthetic profiles carry no vertex members",
            )
        return self.members[i - 1]

    def class_has_pendant(self, i: int) -> bool:
        return i in self.pendant_classes or i > self.r

    def gap_index(self) -> int | None:
        """Smallest j in 1..r with e < c_j, or None when e >= c_r."""
        for j, color in enumerate(self.colors[: self.r], start=1):
            if self.e < color:
                return j
        return None

    def expand(self) -> Counter:
        """Colour multiset: n_i copies of c_i for every class."""
        return Counter({c: n for c, n in zip(self.colors, self.sizes)})
