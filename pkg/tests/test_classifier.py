import pytest  # NOQA
from pygrandconfluent.AsymptoticClassifier import (
    Behavior, Branch, CaseLabel, RawOdeParams, classify, to_gch_params
)
from pygrandconfluent.QQbarSpectrum import PhysicsParams, QQbarSpectrum
from pygrandconfluent.exceptions import ComplexExponentError, DomainError
from pygrandconfluent.testsuite.SpectrumSuite import CLASSIFIER_FIXTURES


class TestClassifier:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    @pytest.mark.parametrize('raw,label', CLASSIFIER_FIXTURES)
    def test_labels(self, raw, label):
        assert classify(raw).case_label == label

    def test_exponent_branches(self):
        assert RawOdeParams(1.0, 1.0, 0.0, 0.0, -4.0, Branch.PLUS).exponent == 2.0
        assert RawOdeParams(1.0, 1.0, 0.0, 0.0, -4.0, Branch.MINUS).exponent == -2.0

    def test_behaviors(self):
        rst = classify(RawOdeParams(1.0, -1.0, 0.0, 0.0, -1.0, Branch.PLUS))
        assert rst.behavior_at_zero == Behavior.VANISHES
        assert rst.behavior_at_infinity == Behavior.DIVERGENT
        assert rst.polynomial_behavior_at_infinity == Behavior.VANISHES
        bounded = classify(RawOdeParams(1.0, 1.0, 0.0, 0.0, -1.0, Branch.MINUS))
        assert bounded.behavior_at_infinity == Behavior.BOUNDED
        assert bounded.polynomial_behavior_at_zero is None

    def test_physics_is_admissible(self):
        rst = classify(RawOdeParams.from_physics(0.01, 1.0, 0, 6.0))
        assert rst.case_label == CaseLabel.III_B
        assert rst.polynomial_admissible
        assert rst.reasons == []
        assert rst.smallness == pytest.approx(0.01, rel=1e-14)

    def test_inadmissible_reasons(self):
        rst = classify(RawOdeParams(1.0, -1.0, 1.0, 0.0, -1.0, Branch.MINUS))
        assert not rst.polynomial_admissible
        assert len(rst.reasons) == 2

    def test_complex_exponent(self):
        raw = RawOdeParams(1.0, 1.0, 0.0, 0.0, 1.0)
        with pytest.raises(ComplexExponentError):
            classify(raw)

    def test_non_finite(self):
        with pytest.raises(DomainError):
            RawOdeParams(1.0, float('inf'), 0.0, 0.0, 0.0)

    def test_to_gch_params_matches_physics_map(self):
        e_squared = 22.0
        mapped = QQbarSpectrum(PhysicsParams(0.01, 1.0, 1)).map_physics_to_ode(e_squared)
        converted = to_gch_params(RawOdeParams.from_physics(0.01, 1.0, 1, e_squared))
        assert converted.mu == pytest.approx(mapped.mu, rel=1e-15)
        assert converted.eps == pytest.approx(mapped.eps, rel=1e-15)
        assert converted.nu == pytest.approx(mapped.nu, rel=1e-15)
        assert converted.big_omega == pytest.approx(mapped.big_omega, rel=1e-14, abs=1e-14)

    def test_to_gch_params_needs_negative_a1(self):
        with pytest.raises(DomainError):
            to_gch_params(RawOdeParams(1.0, 1.0, 0.0, 0.0, 0.0))

    def test_as_dict(self):
        doc = classify(RawOdeParams(1.0, 0.0, 0.0, 0.0, -1.0)).as_dict()
        assert doc['case_label'] == 'II'
        assert doc['smallness'] is None
        assert doc['polynomial_behavior_at_zero'] is None
