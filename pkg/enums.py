from enum import Enum


class AlgebraTag(str, Enum):
    H_GAMMA = 'hgamma'
    H_E = 'he'
    H_ALPHA = 'halpha'
    H_ALPHA_NC = 'halpha-nc'


class RingKind(str, Enum):
    SCALAR = 'scalar'
    MATRIX = 'matrix'


class OutputFormat(str, Enum):
    ASCII = 'ascii'
    LATEX = 'latex'
    JSON = 'json'


class ExpansionKind(str, Enum):
    BARE_PHOTON = 'D'
    BARE_ELECTRON = 'S'
    RENORMALIZED_PHOTON = 'barD'
    RENORMALIZED_ELECTRON = 'barS'
    PRODUCT = 'product'


class SuiteName(str, Enum):
    TREES = 'trees'
    ALGEBRA = 'algebra'
    COASSOC = 'coassoc'
    COUNIT = 'counit'
    ANTIPODE = 'antipode'
    COACTION = 'coaction'
    COUNTS = 'counts'
    SERIES = 'series'
    DYSON = 'dyson'
    ALL = 'all'


class CheckStatus(str, Enum):
    PASSED = 'passed'
    FAILED = 'failed'
    XFAIL = 'xfail'
