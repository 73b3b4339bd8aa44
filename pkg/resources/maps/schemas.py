"""
Модуль с описанием входных и выходных структур элементов алгебр
"""
from json import JSONDecodeError, loads

from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from enums import AlgebraTag
from models.elements import TensorElement, element_from_terms
from models.parsing import ParsedTerm, parse
from models.render import display_tree, sorted_terms
from models.trees import render
from resources.utils import FractionField
from utils import AlgebraError


TAGS = [tag.value for tag in AlgebraTag]

# ----------------------------------------------------------------------------------------------------------------------
#                                           Input/Output schemas
# ----------------------------------------------------------------------------------------------------------------------


def _build(tags, terms) -> TensorElement:
    try:
        parsed = [ParsedTerm(coeff, [[parse(text) for text in slot] for slot in slots]) for coeff, slots in terms]
        return element_from_terms(tags, parsed)
    except AlgebraError as error:
        raise ValidationError(str(error)) from error


class WordTermSchema(Schema):
    coeff = FractionField(description='коэффициент "p/q"', required=True)
    word = fields.List(fields.Str(), description='буквы слова деревьями', required=True)


class ElementSchema(Schema):
    """
    {"tag": ..., "terms": [{"coeff": "p/q", "word": [дерево, ...]}]}; для H^alpha буква
    записывается образующей V(u)
    """
    tag = fields.Str(validate=validate.OneOf(TAGS), description='алгебра элемента', required=True)
    terms = fields.List(fields.Nested(WordTermSchema()), description='слагаемые', required=True)

    @post_load
    def make_element(self, data, **kwargs) -> TensorElement:
        return _build([data['tag']], [(term['coeff'], [term['word']]) for term in data['terms']])


class TermSchema(Schema):
    coeff = FractionField(description='коэффициент "p/q"', required=True)
    slots = fields.List(fields.List(fields.Str()), description='буквы каждого слота деревьями', required=True)


class TensorSchema(Schema):
    """
    {"tags": [...], "terms": [{"coeff": "p/q", "slots": [[дерево, ...], ...]}]}
    """
    tags = fields.List(fields.Str(validate=validate.OneOf(TAGS)), description='алгебры слотов', required=True)
    terms = fields.List(fields.Nested(TermSchema()), description='слагаемые', required=True)

    @validates_schema(skip_on_field_errors=True)
    def schema_validator(self, data, **kwargs):
        for term in data['terms']:
            if len(term['slots']) != len(data['tags']):
                raise ValidationError(f'Слагаемое содержит {len(term["slots"])} слотов, ожидалось {len(data["tags"])}')

    @post_load
    def make_tensor(self, data, **kwargs) -> TensorElement:
        return _build(data['tags'], [(term['coeff'], term['slots']) for term in data['terms']])


def _rendered_terms(x: TensorElement) -> list:
    return [(coeff, [[render(display_tree(tag, letter)) for letter in word] for tag, word in zip(x.tags, key)])
            for key, coeff in sorted_terms(x)]


def dump_tensor(x) -> dict:
    """
    Структура для TensorSchema из элемента алгебры или тензора, слагаемые в порядке вывода
    """
    x = TensorElement.lift(x)
    return {
        'tags': [tag.value for tag in x.tags],
        'terms': [{'coeff': coeff, 'slots': slots} for coeff, slots in _rendered_terms(x)],
    }


def dump_element(x) -> dict:
    """
    Структура для ElementSchema из элемента алгебры или тензора с одним слотом
    """
    x = TensorElement.lift(x)
    if len(x.tags) != 1:
        raise ValidationError(f'Элемент алгебры должен иметь один слот, получено {len(x.tags)}')
    return {
        'tag': x.tags[0].value,
        'terms': [{'coeff': coeff, 'word': slots[0]} for coeff, slots in _rendered_terms(x)],
    }


def dumps_value(x) -> str:
    """
    JSON значения: элемент алгебры для одного слота, тензор для нескольких
    """
    x = TensorElement.lift(x)
    if len(x.tags) == 1:
        return ElementSchema().dumps(dump_element(x), ensure_ascii=False)
    return TensorSchema().dumps(dump_tensor(x), ensure_ascii=False)


def load_tensor(text: str, tags) -> TensorElement:
    """
    Разбор JSON элемента ("tag"/"word") или тензора ("tags"/"slots") с проверкой алгебр слотов
    """
    try:
        data = loads(text)
    except JSONDecodeError as error:
        raise ValidationError(f'Некорректный JSON: {error.msg}') from error
    if isinstance(data, dict) and 'tag' in data:
        x = ElementSchema().load(data)
    else:
        x = TensorSchema().load(data)
    if x.tags != tuple(tags):
        raise ValidationError(f'Ожидались слоты {[tag.value for tag in tags]}, получены {[tag.value for tag in x.tags]}')
    return x


class MapSchema(Schema):
    name = fields.Str(description='имя отображения')
    signature = fields.Str(description='алгебры источника и образа')
