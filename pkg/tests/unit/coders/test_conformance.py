from __future__ import annotations

from graphzip.coders.spec import CoderClass, Family, Mode
from graphzip.testing import CoderTestKit


class TestIidClassOne(CoderTestKit):
    family = Family.IID
    klass = CoderClass.ONE


class TestIidClassTwo(CoderTestKit):
    family = Family.IID
    klass = CoderClass.TWO


class TestTriangleClassOne(CoderTestKit):
    family = Family.TRIANGLE
    klass = CoderClass.ONE


class TestTriangleClassTwo(CoderTestKit):
    family = Family.TRIANGLE
    klass = CoderClass.TWO


class TestCommonNeighborClassOne(CoderTestKit):
    family = Family.COMMON_NEIGHBOR
    klass = CoderClass.ONE


class TestCommonNeighborClassTwo(CoderTestKit):
    family = Family.COMMON_NEIGHBOR
    klass = CoderClass.TWO


class TestFourMotifClassOne(CoderTestKit):
    family = Family.FOUR_MOTIF
    klass = CoderClass.ONE


class TestFourMotifClassTwo(CoderTestKit):
    family = Family.FOUR_MOTIF
    klass = CoderClass.TWO


class TestLearnedIidClassOne(CoderTestKit):
    family = Family.IID
    klass = CoderClass.ONE
    mode = Mode.LEARNED


class TestLearnedIidClassTwo(CoderTestKit):
    family = Family.IID
    klass = CoderClass.TWO
    mode = Mode.LEARNED


class TestLearnedTriangleClassOne(CoderTestKit):
    family = Family.TRIANGLE
    klass = CoderClass.ONE
    mode = Mode.LEARNED


class TestLearnedTriangleClassTwo(CoderTestKit):
    family = Family.TRIANGLE
    klass = CoderClass.TWO
    mode = Mode.LEARNED


class TestLearnedCommonNeighborClassOne(CoderTestKit):
    family = Family.COMMON_NEIGHBOR
    klass = CoderClass.ONE
    mode = Mode.LEARNED


class TestLearnedCommonNeighborClassTwo(CoderTestKit):
    family = Family.COMMON_NEIGHBOR
    klass = CoderClass.TWO
    mode = Mode.LEARNED


class TestLearnedFourMotifClassOne(CoderTestKit):
    family = Family.FOUR_MOTIF
    klass = CoderClass.ONE
    mode = Mode.LEARNED


class TestLearnedFourMotifClassTwo(CoderTestKit):
    family = Family.FOUR_MOTIF
    klass = CoderClass.TWO
    mode = Mode.LEARNED
