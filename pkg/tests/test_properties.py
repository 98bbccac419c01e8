"""Standalone fuzz suites over the algebraic invariants (seeded, deterministic)."""

from fuzzers import fuzz_alphabet_additivity, fuzz_dsl_roundtrip, fuzz_pascal


def test_alphabet_additivity_fuzz():
    assert fuzz_alphabet_additivity(pairs=500, order=10) == 500


def test_pascal_fuzz():
    assert fuzz_pascal(cases=10_000) == 10_000


def test_dsl_roundtrip_fuzz():
    assert fuzz_dsl_roundtrip(cases=1000) == 1000
