from __future__ import annotations

from typing import TYPE_CHECKING

from graphzip.coders.spec import Family
from graphzip.exceptions import CoderConfigError

if TYPE_CHECKING:
    from graphzip.coders.families import ModelFamily

_family_registry: dict[Family, ModelFamily] = {}


def register_family[F: type[ModelFamily]](cls: F) -> F:
    """Class decorator registering one instance of a model family.

    Example::

        @register_family
        class TriangleFamily(ModelFamily):
            family = Family.TRIANGLE
            ...
    """
    if cls.family in _family_registry:
        raise ValueError(f"family {cls.family!r} is already registered")
    _family_registry[cls.family] = cls()
    return cls


def get_family(family: Family) -> ModelFamily:
    try:
        return _family_registry[family]
    except KeyError:
        raise CoderConfigError(f"no model family registered for {family!r}") from None


def list_families() -> list[Family]:
    return list(_family_registry)
