"""
Перечисления структурных отображений
"""
from enum import Enum


class MapName(str, Enum):
    DELTA_P_GAMMA = 'delta-p-gamma'
    DELTA_P_E = 'delta-p-e'
    REDUCED_PRUNING = 'reduced-pruning'
    ANTIPODE_P_GAMMA = 'antipode-p-gamma'
    ANTIPODE_P_E = 'antipode-p-e'
    DELTA_ALPHA = 'delta-alpha'
    REDUCED_ALPHA = 'reduced-alpha'
    DELTA_SMALL = 'delta-small'
    ANTIPODE_ALPHA = 'antipode-alpha'
    DELTA_ALPHA_NC = 'delta-alpha-nc'
    DELTA_SMALL_NC = 'delta-small-nc'
    ANTIPODE_ALPHA_NC = 'antipode-alpha-nc'
    COACTION_GAMMA = 'coaction-gamma'
    COACTION_E = 'coaction-e'
    DELTA_QED = 'delta-qed'
    ANTIPODE_QED = 'antipode-qed'
    DELTA_E = 'delta-e'
    SIGMA = 'sigma'
    DELTA_GAMMA = 'delta-gamma'
    DELTA_ALPHA_GAMMA = 'delta-alpha-gamma'
    ANTIPODE_ALPHA_GAMMA = 'antipode-alpha-gamma'
    PHOTON_SEMIDIRECT_COACTION = 'photon-semidirect-coaction'


class MapFamily(str, Enum):
    """
    Семейства отображений, член которых выбирается по алгебре аргумента (--tag)
    """
    DELTA_P = 'delta-p'
    ANTIPODE_P = 'antipode-p'
    COACTION = 'coaction'
