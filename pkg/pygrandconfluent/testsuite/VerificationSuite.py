"""VerificationSuite runs independent numerical checks and collects one row per check."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, List
from pygrandconfluent.exceptions import GchError
logger = logging.getLogger('GCH')

Task = Callable[[], List['CheckRow']]


def _finite(value: float):
    return value if math.isfinite(value) else None


class Status(str, Enum):
    """FAIL: two computations of this package disagree. FINDING: a printed closed form disagrees with an oracle."""
    PASS = 'pass'
    FAIL = 'fail'
    FINDING = 'finding'


@dataclass(frozen=True)
class CheckRow:
    """One verified quantity."""
    suite: str
    check: str
    case: str
    value: float
    reference: float
    deviation: float
    tolerance: float
    status: Status
    detail: str = ''

    def as_dict(self) -> dict:
        """ JSON-ready form. """
        return {
            'suite': self.suite,
            'check': self.check,
            'case': self.case,
            'value': _finite(self.value),
            'reference': _finite(self.reference),
            'deviation': _finite(self.deviation),
            'tolerance': self.tolerance,
            'status': self.status.value,
            'detail': self.detail,
        }


def count_status(rows: Iterable[CheckRow]) -> dict:
    """ Number of rows per status. """
    counts = {status.value: 0 for status in Status}
    for row in rows:
        counts[row.status.value] += 1
    return counts


class VerificationSuite:
    """Base for check collections. Subclasses return independent tasks from tasks();
    run() keeps task order, so the report does not depend on the worker count.

    Args:
        workers (int, optional): Threads used to run the tasks
    """

    name = 'base'

    def __init__(self, workers: int = 1):
        if workers < 1:
            raise ValueError(f'workers must be >= 1, got {workers!r}')
        self.workers = workers

    def tasks(self) -> List[Task]:
        """ Independent checks, each returning its rows. """
        raise NotImplementedError

    def run(self) -> List[CheckRow]:
        """ Run every task and flatten the rows in task order. """
        tasks = self.tasks()
        logger.info('Suite %s: %d tasks on %d worker(s)', self.name, len(tasks), self.workers)
        if self.workers == 1:
            chunks = [task() for task in tasks]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                chunks = list(pool.map(lambda task: task(), tasks))
        rows = [row for chunk in chunks for row in chunk]
        for row in rows:
            if row.status == Status.FAIL:
                logger.error('%s/%s %s failed: value=%r reference=%r', row.suite, row.check, row.case,
                             row.value, row.reference)
            elif row.status == Status.FINDING:
                logger.warning('%s/%s %s: printed form deviates by %.3e (tolerance %.3e)', row.suite, row.check,
                               row.case, row.deviation, row.tolerance)
        logger.info('Suite %s: %s', self.name, count_status(rows))
        return rows

    def row(self, check: str, case: str, value: float, reference: float, tolerance: float,
            relative: bool = True, printed: bool = False, detail: str = '') -> CheckRow:
        """ Compare value with reference; a miss is a FINDING when the reference is a printed form.
        Args:
            check (str): Check name
            case (str): Parameter description
            value (float): Computed value
            reference (float): Expected value
            tolerance (float): Accepted deviation
            relative (bool, optional): Deviation relative to |reference| (floored at 1e-300)
            printed (bool, optional): Reference or value comes from a printed closed form
            detail (str, optional): Extra text
        Returns:
            CheckRow: Row
        """
        deviation = abs(value - reference)
        if relative:
            deviation /= max(abs(reference), 1e-300)
        if deviation <= tolerance:
            status = Status.PASS
        else:
            status = Status.FINDING if printed else Status.FAIL
        if math.isnan(deviation):
            status = Status.FAIL
        return CheckRow(self.name, check, case, float(value), float(reference), float(deviation),
                        float(tolerance), status, detail)

    def error_row(self, check: str, case: str, err: GchError, printed: bool = False) -> CheckRow:
        """ Row for a check that raised. """
        status = Status.FINDING if printed else Status.FAIL
        return CheckRow(self.name, check, case, math.nan, math.nan, math.nan, 0.0, status,
                        f'{type(err).__name__}: {err}')
