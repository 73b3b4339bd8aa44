"""
Реестр именованных структурных отображений
"""
from threading import Lock
from typing import Dict, Iterator, List, Optional, Tuple, Union

from cachetools import LRUCache, cached

from configs import section
from enums import AlgebraTag
from logger import get_logger
from models.trees import Tree, lookup, trees_up_to
from services.coactions.photon import DeltaSigma, Sigma
from services.coactions.semidirect import RestrictedCoaction, SemidirectAntipode, SemidirectCoproduct
from services.coactions.tree_coactions import TreeCoaction
from services.enums import MapFamily, MapName
from services.hopf.base import Antipode, ReducedCoproduct, StructureMap, choose_victim
from services.hopf.charge import ChargeCoaction, ChargeCoproduct
from services.hopf.pruning import PruningCoproduct
from utils import DomainError


LOGGER = get_logger(__name__)

VICTIM_SEARCH_ORDER = 5

FAMILIES = {
    MapFamily.DELTA_P: {AlgebraTag.H_GAMMA: MapName.DELTA_P_GAMMA, AlgebraTag.H_E: MapName.DELTA_P_E},
    MapFamily.ANTIPODE_P: {AlgebraTag.H_GAMMA: MapName.ANTIPODE_P_GAMMA, AlgebraTag.H_E: MapName.ANTIPODE_P_E},
    MapFamily.COACTION: {AlgebraTag.H_GAMMA: MapName.COACTION_GAMMA, AlgebraTag.H_E: MapName.COACTION_E},
}


class MapRegistry:
    """
    Все отображения, построенные в порядке зависимостей. Составные отображения держат ссылки
    на исходные объекты, поэтому испорченный реестр подменяет только одну запись
    """

    def __init__(self, maps: Dict[MapName, StructureMap], corruption: Optional[Tuple[MapName, Tree]] = None):
        self._maps = maps
        self.corruption = corruption

    @classmethod
    def build(cls, cache_size: Optional[int] = None) -> 'MapRegistry':
        """
        Построение всех отображений

        :param cache_size: размер LRU кэша каждого отображения
        """
        cache_size = cache_size or section('algebra').get('cache_size')
        maps: Dict[MapName, StructureMap] = {}

        def put(name: MapName, factory, *args, **kwargs):
            maps[name] = factory(*args, name=name.value, cache_size=cache_size, **kwargs)
            return maps[name]

        delta_p_gamma = put(MapName.DELTA_P_GAMMA, PruningCoproduct, AlgebraTag.H_GAMMA)
        delta_p_e = put(MapName.DELTA_P_E, PruningCoproduct, AlgebraTag.H_E)
        put(MapName.REDUCED_PRUNING, ReducedCoproduct, delta_p_e)
        antipode_p_gamma = put(MapName.ANTIPODE_P_GAMMA, Antipode, delta_p_gamma)
        antipode_p_e = put(MapName.ANTIPODE_P_E, Antipode, delta_p_e)

        delta_alpha = put(MapName.DELTA_ALPHA, ChargeCoproduct, commutative=True)
        put(MapName.REDUCED_ALPHA, ReducedCoproduct, delta_alpha)
        put(MapName.DELTA_SMALL, ChargeCoaction, commutative=True)
        antipode_alpha = put(MapName.ANTIPODE_ALPHA, Antipode, delta_alpha)
        delta_alpha_nc = put(MapName.DELTA_ALPHA_NC, ChargeCoproduct, commutative=False)
        put(MapName.DELTA_SMALL_NC, ChargeCoaction, commutative=False)
        put(MapName.ANTIPODE_ALPHA_NC, Antipode, delta_alpha_nc)

        coaction_gamma = put(MapName.COACTION_GAMMA, TreeCoaction, AlgebraTag.H_GAMMA)
        coaction_e = put(MapName.COACTION_E, TreeCoaction, AlgebraTag.H_E)

        put(MapName.DELTA_QED, SemidirectCoproduct, delta_alpha, delta_p_e, coaction_e)
        put(MapName.ANTIPODE_QED, SemidirectAntipode, antipode_alpha, antipode_p_e, coaction_e)
        put(MapName.DELTA_E, RestrictedCoaction, delta_p_e, coaction_e)

        sigma = put(MapName.SIGMA, Sigma)
        put(MapName.DELTA_GAMMA, DeltaSigma, delta_p_gamma, coaction_gamma, sigma)
        put(MapName.DELTA_ALPHA_GAMMA, SemidirectCoproduct, delta_alpha, delta_p_gamma, coaction_gamma)
        put(MapName.ANTIPODE_ALPHA_GAMMA, SemidirectAntipode, antipode_alpha, antipode_p_gamma, coaction_gamma)
        put(MapName.PHOTON_SEMIDIRECT_COACTION, RestrictedCoaction, delta_p_gamma, coaction_gamma)

        return cls(maps)

    def __getitem__(self, name: Union[MapName, str]) -> StructureMap:
        return self._maps[MapName(name)]

    def __iter__(self) -> Iterator[StructureMap]:
        return iter(self._maps.values())

    def names(self) -> List[str]:
        return [name.value for name in self._maps]

    def resolve(self, name: str, tag: Optional[AlgebraTag] = None) -> StructureMap:
        """
        Отображение по имени или по семейству и алгебре аргумента

        :param name: имя отображения (MapName) или семейства (MapFamily)
        :param tag: алгебра аргумента, обязательна для семейства
        """
        if name in {family.value for family in MapFamily}:
            members = FAMILIES[MapFamily(name)]
            if tag is None:
                raise DomainError(f'Для семейства {name} нужно указать алгебру: '
                                  f'{", ".join(t.value for t in members)}')
            if AlgebraTag(tag) not in members:
                raise DomainError(f'Семейство {name} не определено на {AlgebraTag(tag).value}')
            return self[members[AlgebraTag(tag)]]

        try:
            found = self[name]
        except ValueError as error:
            raise DomainError(f'Неизвестное отображение {name}') from error
        if tag is not None and found.source[-1] is not AlgebraTag(tag):
            raise DomainError(f'Отображение {name} не действует на {AlgebraTag(tag).value}')

        return found

    def describe(self) -> List[Tuple[str, str]]:
        """
        Пары (имя, сигнатура) для вывода списка отображений
        """
        return [(name.value, repr(m).split(': ', 1)[1]) for name, m in self._maps.items()]

    # ------------------------------------------------------------------------------------------------------------------
    #                                           Порча
    # ------------------------------------------------------------------------------------------------------------------

    def corrupted(self, name: Union[MapName, str], tree: Optional[Tree] = None) -> 'MapRegistry':
        """
        Реестр, в котором одно отображение потеряло слагаемое своего образа на одном дереве

        :param name: имя портящегося отображения
        :param tree: дерево; по умолчанию - первое, на котором есть слагаемое хотя бы с двумя непустыми слотами
        """
        name = MapName(name)
        genuine = self[name]
        tree = tree if tree is not None else default_victim_tree(genuine)
        maps = dict(self._maps)
        maps[name] = genuine.corrupted(tree)
        LOGGER.warning('Отображение %s испорчено на %r: выброшено слагаемое %s', name.value, tree,
                       maps[name].corruption[1])
        return MapRegistry(maps, (name, tree))


def _victim_score(structure_map: StructureMap, tree: Tree) -> Optional[int]:
    try:
        unit = structure_map.top_unit(tree)
    except DomainError:
        return None
    image = structure_map.genuine_image(unit)
    victim = choose_victim(structure_map.target, image)
    if victim is None:
        return None
    if len(structure_map.target) > 1:
        return int(sum(1 for word in victim if word) >= 2)
    return int(len(victim[0]) >= 2)


def default_victim_tree(structure_map: StructureMap) -> Tree:
    """
    Первое в каноническом порядке дерево, на котором порча выбрасывает нетривиальное слагаемое
    """
    fallback = None
    for tree in trees_up_to(VICTIM_SEARCH_ORDER, start=1):
        score = _victim_score(structure_map, tree)
        if score is None:
            continue
        if score:
            return tree
        fallback = fallback or tree

    if fallback is None:
        raise DomainError(f'Не найдено дерево для порчи {structure_map.name}')
    return fallback


def parse_corruption(text: str) -> Tuple[MapName, Optional[Tree]]:
    """
    Разбор аргумента порчи NAME[:TREE], дерево задаётся именем или текстом
    """
    from models.parsing import parse
    name, _, tree_text = text.partition(':')
    try:
        name = MapName(name.strip())
    except ValueError as error:
        raise DomainError(f'Неизвестное отображение {name}') from error
    if not tree_text.strip():
        return name, None
    try:
        return name, lookup(tree_text.strip())
    except DomainError:
        return name, parse(tree_text)


@cached(LRUCache(maxsize=1), lock=Lock())
def default_registry() -> MapRegistry:
    """
    Общий реестр неиспорченных отображений
    """
    return MapRegistry.build()
