from __future__ import annotations

import pytest

from graphzip.coders.families import ModelFamily
from graphzip.coders.registry import get_family, list_families, register_family
from graphzip.coders.spec import CoderClass, CoderSpec, Family, Mode, all_specs
from graphzip.exceptions import BitstreamDecodeError, CoderConfigError


class TestCoderSpec:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("iid", CoderSpec(Family.IID, CoderClass.ONE, Mode.UNIVERSAL)),
            ("tri/2", CoderSpec(Family.TRIANGLE, CoderClass.TWO, Mode.UNIVERSAL)),
            (
                "ComNei/1/learned",
                CoderSpec(Family.COMMON_NEIGHBOR, CoderClass.ONE, Mode.LEARNED),
            ),
            ("4motif/2", CoderSpec(Family.FOUR_MOTIF, CoderClass.TWO, Mode.UNIVERSAL)),
        ],
    )
    def test_parse(self, text: str, expected: CoderSpec) -> None:
        assert CoderSpec.parse(text) == expected

    @pytest.mark.parametrize(
        "text", ["", "hub", "iid/3", "iid/1/adaptive", "iid/1/learned/x"]
    )
    def test_parse_rejects(self, text: str) -> None:
        with pytest.raises(CoderConfigError):
            CoderSpec.parse(text)

    def test_label_round_trips_through_parse(self) -> None:
        for spec in all_specs(Mode.LEARNED) + all_specs():
            assert CoderSpec.parse(spec.label) == spec
            assert str(spec) == spec.label

    def test_header_ids_round_trip(self) -> None:
        for spec in all_specs(Mode.LEARNED) + all_specs():
            assert CoderSpec.from_header(spec.coder_id, spec.mode_id) == spec

    @pytest.mark.parametrize(("coder_id", "mode_id"), [(0x03, 0), (0x71, 0), (0x01, 5)])
    def test_unknown_header_ids(self, coder_id: int, mode_id: int) -> None:
        with pytest.raises(BitstreamDecodeError):
            CoderSpec.from_header(coder_id, mode_id)

    def test_all_specs_lists_class_one_first(self) -> None:
        specs = all_specs()
        assert len(specs) == 8
        assert [s.klass for s in specs[:4]] == [CoderClass.ONE] * 4
        assert {s.family for s in specs[4:]} == set(Family)


class TestRegistry:
    def test_every_family_is_registered(self) -> None:
        assert set(list_families()) == set(Family)
        assert get_family(Family.TRIANGLE).family is Family.TRIANGLE

    def test_duplicate_registration(self) -> None:
        class Duplicate(ModelFamily):
            family = Family.IID

            def bucket(self, walker, block):  # type: ignore[no-untyped-def]
                return 0

        with pytest.raises(ValueError, match="already registered"):
            register_family(Duplicate)

    def test_bucket_names(self) -> None:
        assert get_family(Family.TRIANGLE).bucket_name(1) == "p_tri_check"
        assert get_family(Family.COMMON_NEIGHBOR).bucket_name(3) == "p_cn[3]"
