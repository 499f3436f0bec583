"""Run configuration and the small/medium/large cap presets."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

FORMATS = ("text", "json", "csv", "dot")

PRESETS: dict[str, dict[str, int]] = {
    "small": {"hasse": 8, "counts": 6, "series": 6, "monoids": 6, "meet": 5, "hochschild": 6, "invariants": 5},
    "medium": {"hasse": 10, "counts": 7, "series": 6, "monoids": 7, "meet": 6, "hochschild": 7, "invariants": 6},
    "large": {"hasse": 12, "counts": 8, "series": 8, "monoids": 7, "meet": 7, "hochschild": 8, "invariants": 6},
}


@dataclass(frozen=True)
class RunConfig:
    caps: dict = field(default_factory=lambda: dict(PRESETS["small"]))
    threads: int = 1
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if any(v < 1 for v in self.caps.values()):
            raise ValueError("caps must be positive")

    @classmethod
    def preset(cls, name: str, **kw) -> "RunConfig":
        if name not in PRESETS:
            raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
        return cls(caps=dict(PRESETS[name]), **kw)

    def cap(self, feature: str) -> int:
        return self.caps[feature]

    def with_format(self, fmt: str) -> "RunConfig":
        return replace(self, format=fmt)
