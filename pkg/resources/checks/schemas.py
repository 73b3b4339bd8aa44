"""
Модуль с описанием выходных структур отчёта проверки
"""
from marshmallow import Schema, fields


class LawResultSchema(Schema):
    law = fields.Str(description='имя закона')
    suite = fields.Str(description='набор')
    status = fields.Str(description='passed, failed или xfail (ожидаемое нарушение)')
    cases = fields.Int(description='число проверенных случаев')
    failures = fields.Int(description='число нарушений')
    expected_failure = fields.Bool(description='закон заведомо нарушается')
    counterexample = fields.Str(description='первый контрпример', allow_none=True)


class CorruptionSchema(Schema):
    map = fields.Str(description='испорченное отображение')
    tree = fields.Str(description='дерево, на котором выброшено слагаемое', allow_none=True)


class CheckReportSchema(Schema):
    suite = fields.Str(description='набор')
    order = fields.Int(description='наибольший порядок перебора')
    status = fields.Str(description='passed или failed')
    corruption = fields.Nested(CorruptionSchema(), allow_none=True)
    laws = fields.List(fields.Nested(LawResultSchema()))
