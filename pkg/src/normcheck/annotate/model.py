"""Stand-off annotations: typed byte spans with string feature maps."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from normcheck.corpus import Span

GAZETTEER = "Gazetteer"
EXTRACTOR = "Extractor"
RULE_PREFIX = "Rule:"


def rule_source(rule_name: str) -> str:
    return RULE_PREFIX + rule_name


@dataclass(frozen=True)
class Annotation:
    ann_id: int
    span: Span
    ann_type: str
    features: Mapping[str, str] = field(default_factory=lambda: MappingProxyType({}))
    source: str = GAZETTEER

    def __post_init__(self) -> None:
        start, end = self.span
        if not 0 <= start < end:
            raise ValueError(f"annotation span {self.span} is empty or negative")
        if not isinstance(self.features, MappingProxyType):
            object.__setattr__(self, "features", MappingProxyType(dict(self.features)))

    @property
    def start(self) -> int:
        return self.span[0]

    @property
    def end(self) -> int:
        return self.span[1]

    @property
    def rule_name(self) -> str | None:
        if self.source.startswith(RULE_PREFIX):
            return self.source[len(RULE_PREFIX):]
        return None

    def sort_key(self) -> tuple[int, int, str, int]:
        return (self.span[0], self.span[1], self.ann_type, self.ann_id)

    def to_json(self) -> dict[str, object]:
        return {
            "ann_id": self.ann_id,
            "start": self.span[0],
            "end": self.span[1],
            "type": self.ann_type,
            "features": dict(sorted(self.features.items())),
            "source": self.source,
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> Annotation:
        return cls(
            int(payload["ann_id"]),
            (int(payload["start"]), int(payload["end"])),
            str(payload["type"]),
            {str(k): str(v) for k, v in dict(payload.get("features", {})).items()},
            str(payload.get("source", GAZETTEER)),
        )


@dataclass(frozen=True)
class AnnotationSet:
    """Immutable, ordered collection of annotations with unique ids."""

    set_name: str = ""
    annotations: tuple[Annotation, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.annotations, key=Annotation.sort_key))
        ids = {ann.ann_id for ann in ordered}
        if len(ids) != len(ordered):
            raise ValueError(f"annotation set {self.set_name!r} has duplicate ann_ids")
        object.__setattr__(self, "annotations", ordered)

    def __iter__(self) -> Iterator[Annotation]:
        return iter(self.annotations)

    def __len__(self) -> int:
        return len(self.annotations)

    @property
    def next_id(self) -> int:
        return max((ann.ann_id for ann in self.annotations), default=-1) + 1

    def of_type(self, ann_type: str) -> list[Annotation]:
        return [ann for ann in self.annotations if ann.ann_type == ann_type]

    def extended(self, new: Iterable[Annotation]) -> AnnotationSet:
        return AnnotationSet(self.set_name, self.annotations + tuple(new))

    def to_json(self, doc_id: str) -> dict[str, object]:
        return {"doc_id": doc_id, "annotations": [ann.to_json() for ann in self.annotations]}

    @classmethod
    def from_json(cls, payload: Mapping[str, object], set_name: str = "") -> AnnotationSet:
        return cls(set_name, tuple(Annotation.from_json(item) for item in payload["annotations"]))
