"""
Запуск наборов законов последовательно или в пуле процессов
"""
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

from enums import CheckStatus, SuiteName
from logger import get_logger
from models.trees import Tree, render
from services.checks.laws import CheckContext, Law, build_laws
from services.enums import MapName
from services.registry import MapRegistry, default_registry


LOGGER = get_logger(__name__)

CHUNK = 16

Corruption = Optional[Tuple[MapName, Optional[Tree]]]
# (номер закона, начало среза, число проверенных случаев, (номер случая, контрпример) или None)
ChunkResult = Tuple[int, int, int, Optional[Tuple[int, str]]]


class LawResult:
    """
    Итог проверки одного закона
    """
    __slots__ = ('name', 'suite', 'cases', 'failures', 'counterexample', 'expected_failure')

    def __init__(self, name: str, suite: SuiteName, cases: int = 0, expected_failure: bool = False):
        self.name = name
        self.suite = suite
        self.cases = cases
        self.failures = 0
        self.counterexample: Optional[str] = None
        self.expected_failure = expected_failure

    @property
    def status(self) -> CheckStatus:
        """
        Для заведомо нарушаемого закона нарушение - ожидаемый исход (xfail), его отсутствие - ошибка
        """
        if self.expected_failure:
            return CheckStatus.XFAIL if self.failures else CheckStatus.FAILED
        return CheckStatus.FAILED if self.failures else CheckStatus.PASSED

    def dump(self) -> Dict[str, object]:
        return {
            'law': self.name,
            'suite': self.suite.value,
            'status': self.status.value,
            'cases': self.cases,
            'failures': self.failures,
            'expected_failure': self.expected_failure,
            'counterexample': self.counterexample,
        }


class CheckReport:
    """
    Итог прогона набора: результаты законов в порядке каталога
    """

    def __init__(self, suite: SuiteName, order: int, results: List[LawResult], corruption: Corruption = None):
        self.suite = suite
        self.order = order
        self.results = results
        self.corruption = corruption

    @property
    def passed(self) -> bool:
        return all(result.status is not CheckStatus.FAILED for result in self.results)

    @property
    def failed(self) -> List[LawResult]:
        return [result for result in self.results if result.status is CheckStatus.FAILED]

    def dump(self) -> Dict[str, object]:
        corruption = None
        if self.corruption is not None:
            name, tree = self.corruption
            corruption = {'map': name.value, 'tree': None if tree is None else render(tree)}
        return {
            'suite': self.suite.value,
            'order': self.order,
            'status': (CheckStatus.PASSED if self.passed else CheckStatus.FAILED).value,
            'corruption': corruption,
            'laws': [result.dump() for result in self.results],
        }


def _registry(corruption: Corruption) -> MapRegistry:
    if corruption is None:
        return default_registry()
    name, tree = corruption
    return default_registry().corrupted(name, tree)


def _check_slice(law: Law, start: int, stop: int) -> Tuple[int, Optional[Tuple[int, str]]]:
    failure = None
    failures = 0
    for index in range(start, min(stop, len(law.cases))):
        outcome = law.check(law.cases[index])
        if outcome is not None:
            failures += 1
            if failure is None:
                failure = (index, outcome)
    return failures, failure


# ----------------------------------------------------------------------------------------------------------------------
#                                           Пул процессов
# ----------------------------------------------------------------------------------------------------------------------


_WORKER: Dict[str, List[Law]] = {}


def _init_worker(suite: SuiteName, order: Optional[int], corruption: Corruption):
    """
    Каждый процесс заново строит реестр (с той же порчей) и каталог законов
    """
    _WORKER['laws'] = build_laws(CheckContext(_registry(corruption), order), suite)


def _run_chunk(task: Tuple[int, int, int]) -> ChunkResult:
    index, start, stop = task
    failures, failure = _check_slice(_WORKER['laws'][index], start, stop)
    return index, start, failures, failure


def _collect(results: List[LawResult], chunks: List[ChunkResult]):
    firsts: Dict[int, Tuple[int, str]] = {}
    for index, _, failures, failure in sorted(chunks, key=lambda chunk: chunk[:2]):
        results[index].failures += failures
        if failure is not None and index not in firsts:
            firsts[index] = failure
    for index, (_, text) in firsts.items():
        results[index].counterexample = text
    for result in results:
        if result.expected_failure and not result.failures:
            result.counterexample = 'ожидаемое нарушение не обнаружено ни на одном случае'


def run_suite(suite: SuiteName, order: Optional[int] = None, jobs: int = 1,
              corruption: Corruption = None) -> CheckReport:
    """
    Проверка всех законов набора

    :param suite: имя набора (all - все наборы)
    :param order: наибольший порядок перебора, по умолчанию из конфигурации
    :param jobs: число процессов; 1 - последовательно в текущем процессе
    :param corruption: (отображение, дерево) для намеренной порчи
    :return: отчёт с результатами в порядке каталога независимо от числа процессов
    """
    suite = SuiteName(suite)
    registry = _registry(corruption)
    corruption = registry.corruption
    ctx = CheckContext(registry, order)
    laws = build_laws(ctx, suite)
    results = [LawResult(law.name, law.suite, len(law.cases), law.expected_failure) for law in laws]

    if jobs <= 1:
        chunks = [(index, 0) + _check_slice(law, 0, len(law.cases)) for index, law in enumerate(laws)]
    else:
        tasks = [(index, start, start + CHUNK) for index, law in enumerate(laws)
                 for start in range(0, len(law.cases), CHUNK)]
        LOGGER.info('Набор %s: %d срезов на %d процессах', suite.value, len(tasks), jobs)
        with Pool(jobs, initializer=_init_worker, initargs=(suite, ctx.order, corruption)) as pool:
            chunks = list(pool.imap_unordered(_run_chunk, tasks))
    _collect(results, chunks)

    for result in results:
        if result.status is CheckStatus.XFAIL:
            LOGGER.warning('%s/%s: ожидаемое нарушение на %d случаях из %d, первое: %s', result.suite.value, result.name,
                           result.failures, result.cases, result.counterexample)
        elif result.status is CheckStatus.FAILED:
            LOGGER.error('%s/%s: %d нарушений из %d, первое: %s', result.suite.value, result.name, result.failures,
                         result.cases, result.counterexample)
        else:
            LOGGER.info('%s/%s: выполнен на %d случаях', result.suite.value, result.name, result.cases)

    return CheckReport(suite, ctx.order, results, corruption)
