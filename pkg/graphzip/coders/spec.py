from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum, StrEnum
from itertools import product

from graphzip.exceptions import BitstreamDecodeError, CoderConfigError


class Family(StrEnum):
    IID = "iid"
    TRIANGLE = "triangle"
    COMMON_NEIGHBOR = "common-neighbor"
    FOUR_MOTIF = "four-motif"


class CoderClass(IntEnum):
    """Class 1 codes node by node, class 2 codes a level given its degree."""

    ONE = 1
    TWO = 2


class Mode(StrEnum):
    LEARNED = "learned"
    UNIVERSAL = "universal"


_FAMILY_CODES = {family: code for code, family in enumerate(Family)}
_MODE_CODES = {mode: code for code, mode in enumerate(Mode)}

_FAMILY_ALIASES = {
    "iid": Family.IID,
    "tri": Family.TRIANGLE,
    "triangle": Family.TRIANGLE,
    "cn": Family.COMMON_NEIGHBOR,
    "comnei": Family.COMMON_NEIGHBOR,
    "common-neighbor": Family.COMMON_NEIGHBOR,
    "4motif": Family.FOUR_MOTIF,
    "4-node": Family.FOUR_MOTIF,
    "four-motif": Family.FOUR_MOTIF,
}


@dataclass(frozen=True, slots=True)
class CoderSpec:
    family: Family
    klass: CoderClass
    mode: Mode

    @property
    def coder_id(self) -> int:
        """Header byte: family code in the high nibble, class in the low one."""
        return _FAMILY_CODES[self.family] << 4 | int(self.klass)

    @property
    def mode_id(self) -> int:
        return _MODE_CODES[self.mode]

    @classmethod
    def from_header(cls, coder_id: int, mode_id: int) -> CoderSpec:
        families = list(Family)
        modes = list(Mode)
        family_code, klass = coder_id >> 4, coder_id & 0x0F
        if family_code >= len(families) or klass not in (1, 2):
            raise BitstreamDecodeError(f"unknown coder id 0x{coder_id:02x}")
        if mode_id >= len(modes):
            raise BitstreamDecodeError(f"unknown mode id {mode_id}")
        return cls(families[family_code], CoderClass(klass), modes[mode_id])

    @property
    def label(self) -> str:
        """Column label as used in benchmark tables, e.g. ``triangle/2/universal``."""
        return f"{self.family}/{int(self.klass)}/{self.mode}"

    @classmethod
    def parse(cls, text: str) -> CoderSpec:
        """Parse ``family[/class[/mode]]``; class defaults to 1, mode to universal."""
        parts = [p.strip().lower() for p in text.split("/")]
        if not 1 <= len(parts) <= 3 or not parts[0]:
            raise CoderConfigError(f"invalid coder spec {text!r}")
        family = _FAMILY_ALIASES.get(parts[0])
        if family is None:
            raise CoderConfigError(
                f"unknown coder family {parts[0]!r}; "
                f"expected one of {', '.join(f.value for f in Family)}"
            )
        klass_text = parts[1] if len(parts) > 1 else "1"
        if klass_text not in ("1", "2"):
            raise CoderConfigError(f"coder class must be 1 or 2, got {klass_text!r}")
        mode_text = parts[2] if len(parts) > 2 else Mode.UNIVERSAL.value
        try:
            mode = Mode(mode_text)
        except ValueError:
            raise CoderConfigError(f"unknown coder mode {mode_text!r}") from None
        return cls(family, CoderClass(int(klass_text)), mode)

    def __str__(self) -> str:
        return self.label


def all_specs(mode: Mode = Mode.UNIVERSAL) -> list[CoderSpec]:
    """The eight family x class combinations for *mode*, class 1 first."""
    return [
        CoderSpec(family, klass, mode)
        for klass, family in product(CoderClass, Family)
    ]
