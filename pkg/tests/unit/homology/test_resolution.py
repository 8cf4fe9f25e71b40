"""Unit tests for resolutions, smoothness probes and Ext."""

from smashcalc.core import FinDimAlgebra
from smashcalc.homology import (
    SmoothnessVerdict,
    bimodule_ext,
    bimodule_resolution,
    ext_bimodule,
    smoothness_probe,
)


class TestSmoothness:
    """Test the smoothness probe."""

    def test_ground_field_is_smooth(self, field):
        """Test that k has a bimodule resolution of length 0."""
        verdict = smoothness_probe(FinDimAlgebra.ground(field))
        assert verdict.smooth
        assert verdict.length == 0
        assert str(verdict) == "Smooth(0)"

    def test_separable_group_algebra(self, kc2):
        """Test that kC2 over Q is projective over its enveloping algebra."""
        verdict = smoothness_probe(kc2.algebra)
        assert verdict.kind == SmoothnessVerdict.SMOOTH
        assert verdict.length == 0

    def test_dual_numbers_periodic(self, dual_numbers):
        """Test that a syzygy of k[x]/(x^2) repeats."""
        verdict = smoothness_probe(dual_numbers, bound=4)
        assert verdict.kind == SmoothnessVerdict.PERIODIC
        assert not verdict.smooth
        assert verdict.to_dict()["period"] is not None


class TestResolution:
    """Test bimodule resolutions."""

    def test_resolution_is_exact(self, dual_numbers):
        """Test d∘d = 0 and exactness on every built stage."""
        res = bimodule_resolution(dual_numbers, 3)
        report = res.check()
        assert report.passed, str(report)
        assert res.term_dims()[0] == 4
        assert not res.complete


class TestExt:
    """Test Ext^*_{A^e}(A, A^e)."""

    def test_self_injective_ext_vanishes(self, dual_numbers):
        """Test that only Ext^0 of k[x]/(x^2) is nonzero."""
        ladder = bimodule_ext(dual_numbers, 2)
        assert ladder.dims == [2, 0, 0]
        assert ladder.concentrated() == 0
        assert ladder.passed

    def test_bar_ladder_agrees(self, sign_action):
        """Test that bar cochains give the same dimensions with an equivariant H-action."""
        ladder = ext_bimodule(sign_action, 2)
        assert ladder.dims == [2, 0, 0]
        assert ladder.passed
        assert ladder.rung(0).index == 1
        assert not ladder.truncated

    def test_ladder_to_dict(self, kc2):
        """Test the serialised ladder."""
        data = bimodule_ext(kc2.algebra, 0).to_dict()
        assert data["dims"] == [2]
        assert data["concentrated_in"] == 0
