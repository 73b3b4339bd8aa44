"""
Модуль с описанием входных и выходных структур перенормировки
"""
from marshmallow import Schema, ValidationError, fields, post_load, validate

from enums import AlgebraTag, RingKind
from models.characters import Character
from models.parsing import parse
from models.ring import make_ring
from models.trees import render
from resources.utils import RingValueField
from utils import AlgebraError


# ----------------------------------------------------------------------------------------------------------------------
#                                           Input/Output schemas
# ----------------------------------------------------------------------------------------------------------------------


class CharacterTableSchema(Schema):
    """
    Таблица характера {запись дерева: значение}; для H^alpha ключи - образующие V(u)
    """
    tag = fields.Str(description='алгебра-источник', required=True,
                     validate=validate.OneOf([tag.value for tag in AlgebraTag]))
    ring = fields.Str(description='scalar или matrix', load_default=RingKind.SCALAR.value,
                      validate=validate.OneOf([kind.value for kind in RingKind]))
    d = fields.Int(description='размер матриц', load_default=1, validate=validate.Range(min=1))
    label = fields.Str(description='метка q', allow_none=True, load_default=None)
    default = RingValueField(description='значение на буквах вне таблицы', allow_none=True, load_default=None)
    values = fields.Dict(keys=fields.Str(), values=RingValueField(), description='значения на деревьях',
                         required=True)

    @post_load
    def make_character(self, data, **kwargs) -> Character:
        try:
            ring = make_ring(RingKind(data['ring']), data['d'])
            values = {parse(text): value for text, value in data['values'].items()}
            return Character(AlgebraTag(data['tag']), values, ring, data['label'], data['default'])
        except AlgebraError as error:
            raise ValidationError(str(error)) from error


def dump_character(character: Character) -> dict:
    return {
        'tag': character.tag.value,
        'ring': character.ring.kind.value,
        'd': character.ring.dim,
        'label': character.label,
        'default': character.default,
        'values': {render(tree): value for tree, value in character.items()},
    }


class CharacterSetSchema(Schema):
    u_gamma = fields.Nested(CharacterTableSchema(), required=True, description='U^gamma на H^gamma')
    u_e = fields.Nested(CharacterTableSchema(), required=True, description='U^e на H^e')
    c_gamma = fields.Nested(CharacterTableSchema(), required=True, description='C^gamma на H^alpha')
    c_e = fields.Nested(CharacterTableSchema(), required=True, description='C^e на H^e')


class SeriesSchema(Schema):
    order = fields.Int(data_key='N', description='порядок усечения')
    coeffs = fields.List(RingValueField(), description='коэффициенты при alpha^0..alpha^N')


class ResidualSchema(Schema):
    order = fields.Int(description='степень alpha')
    value = RingValueField(description='разность сторон')
    is_zero = fields.Bool(description='невязка нулевая')


class DysonReportSchema(Schema):
    particle = fields.Str(description='photon или electron')
    order = fields.Int(data_key='N', description='порядок усечения')
    status = fields.Function(lambda report: 'passed' if report.passed else 'failed')
    lhs = fields.Nested(SeriesSchema(), description='перенормированная сторона')
    rhs = fields.Nested(SeriesSchema(), description='голая сторона в alpha_0')
    per_order_residuals = fields.List(fields.Nested(ResidualSchema()), attribute='residuals')


class RenormReportSchema(Schema):
    status = fields.Str(description='passed или failed')
    photon = fields.Nested(DysonReportSchema())
    electron = fields.Nested(DysonReportSchema())
