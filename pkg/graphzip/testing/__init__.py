from graphzip.testing.coder_test_kit import (
    CoderTestKit,
    OptimalityConformanceTests,
    RoundTripConformanceTests,
    sample_graphs,
    training_graphs,
)

__all__ = [
    "CoderTestKit",
    "OptimalityConformanceTests",
    "RoundTripConformanceTests",
    "sample_graphs",
    "training_graphs",
]
