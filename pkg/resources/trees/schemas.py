"""
Модуль с описанием выходных структур перечисления деревьев
"""
from marshmallow import Schema, fields

from models.trees import render, render_latex


class TreeSchema(Schema):
    name = fields.Str(description='имя Y<n>.<k>')
    order = fields.Int(description='число внутренних вершин')
    text = fields.Function(render, description='запись (l v r)')
    latex = fields.Function(render_latex, description='запись LaTeX')


class EnumerationSchema(Schema):
    order = fields.Int(description='порядок деревьев')
    count = fields.Int(description='число деревьев (число Каталана)')
    trees = fields.List(fields.Nested(TreeSchema()), description='деревья в каноническом порядке')
