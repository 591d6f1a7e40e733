"""SpectrumSuite checks the energy ladder arithmetic, node counts and the regime classifier fixtures."""
import logging
from typing import List
from pygrandconfluent.AsymptoticClassifier import Branch, CaseLabel, RawOdeParams, classify
from pygrandconfluent.QQbarSpectrum import PhysicsParams, QQbarSpectrum, QuantumNumbers, energy_level
from pygrandconfluent.RecurrenceEngine import RecurrenceEngine
from pygrandconfluent.testsuite.VerificationSuite import CheckRow, VerificationSuite
logger = logging.getLogger('GCH')

LADDER_EXAMPLES = (
    ((1.0, 0, 0, 1), 6.0),
    ((1.0, 1, 1, 2), 22.0),
    ((1.0, 0, 2, 1), 14.0),
)

CLASSIFIER_FIXTURES = (
    (RawOdeParams(1.0, 1.0, 0.0, 0.0, -4.0, Branch.MINUS), CaseLabel.I_A),
    (RawOdeParams(1.0, 1.0, 0.0, 0.0, -1.0, Branch.MINUS), CaseLabel.I_B),
    (RawOdeParams(1.0, 1.0, 0.0, 0.0, -0.25, Branch.MINUS), CaseLabel.I_C),
    (RawOdeParams(1.0, 1.0, 0.0, 0.0, 0.0, Branch.PLUS), CaseLabel.I_D),
    (RawOdeParams(1.0, 1.0, 0.0, 0.0, -1.0, Branch.PLUS), CaseLabel.I_E),
    (RawOdeParams(1.0, 0.0, 0.0, 0.0, -1.0, Branch.PLUS), CaseLabel.II),
    (RawOdeParams(1.0, -1.0, 0.0, 0.0, -1.0, Branch.MINUS), CaseLabel.III_A),
    (RawOdeParams(1.0, -1.0, 0.0, 0.0, 0.0, Branch.PLUS), CaseLabel.III_B),
    (RawOdeParams(1.0, -1.0, 0.0, 0.0, -1.0, Branch.PLUS), CaseLabel.III_C),
)


class SpectrumSuite(VerificationSuite):
    """Exact ladder identities for tension b plus node counts at m = 0.

    Args:
        b (float, optional): String tension coefficient
        max_l (int, optional): Largest orbital momentum
        max_n (int, optional): Largest radial number
        workers (int, optional): Threads
    """

    name = 'spectrum'

    def __init__(self, b: float = 1.0, max_l: int = 2, max_n: int = 4, workers: int = 1):
        super().__init__(workers)
        self.b = b
        self.max_l = max_l
        self.max_n = max_n

    def tasks(self):
        tasks = [self._ladder, self._classifier]
        for l in range(self.max_l + 1):
            for n0 in range(1, self.max_n + 1):
                tasks.append(lambda ll=l, n=n0: self._nodes(ll, n))
        return tasks

    def _ladder(self) -> List[CheckRow]:
        rows = []
        for (b, l, order_i, n_i), expected in LADDER_EXAMPLES:
            rows.append(self.row('energy_level', f'b={b!r} l={l} i={order_i} n={n_i}',
                                 energy_level(b, l, order_i, n_i), expected, 0.0))
        for l in range(self.max_l):
            for order_i in range(3):
                for n_i in range(1, self.max_n + 1):
                    step = energy_level(self.b, l + 1, order_i, n_i) - energy_level(self.b, l, order_i, n_i)
                    rows.append(self.row('regge_slope', f'l={l} i={order_i} n={n_i}', step, 4 * self.b, 0.0))
        for l in range(self.max_l + 1):
            spectrum = QQbarSpectrum(PhysicsParams(0.0, self.b, l))
            for n0 in range(1, self.max_n + 1):
                e_squared = energy_level(self.b, l, 0, n0)
                params = spectrum.map_physics_to_ode(e_squared)
                recovered = spectrum.energy_from_omega(-2 * params.mu * (n0 - 1))
                rows.append(self.row('eigenvalue_route', f'l={l} n0={n0}', recovered, e_squared, 0.0))
                found = RecurrenceEngine(params).detect_termination()
                alpha0 = -1 if found is None or found.alpha0 is None else found.alpha0
                rows.append(self.row('detected_alpha0', f'l={l} n0={n0}', alpha0, n0 - 1, 0.0, relative=False))
        return rows

    def _classifier(self) -> List[CheckRow]:
        rows = []
        for raw, label in CLASSIFIER_FIXTURES:
            result = classify(raw)
            rows.append(self.row('classifier_label', f'{label.value} exponent={raw.exponent!r}',
                                 float(result.case_label == label), 1.0, 0.0, relative=False,
                                 detail=result.case_label.value))
        physics = classify(RawOdeParams.from_physics(0.01, 1.0, 0, energy_level(1.0, 0, 0, 1)))
        rows.append(self.row('physics_admissible', 'm=0.01 b=1.0 l=0', float(physics.polynomial_admissible), 1.0,
                             0.0, relative=False, detail='; '.join(physics.reasons)))
        return rows

    def _nodes(self, l: int, n0: int) -> List[CheckRow]:
        spectrum = QQbarSpectrum(PhysicsParams(0.0, self.b, l))
        count = spectrum.node_count(QuantumNumbers(l, 0, (n0,)))
        return [self.row('node_count', f'l={l} n0={n0}', count, n0 - 1, 0.0, relative=False)]
