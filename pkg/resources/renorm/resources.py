"""
Модуль с командой проверки формул Дайсона на модельных характерах
"""
from fractions import Fraction

import click
from sympy import Rational, latex

from configs import section
from enums import AlgebraTag, OutputFormat, RingKind
from models.characters import Character
from resources.renorm.schemas import CharacterSetSchema, RenormReportSchema, dump_character
from resources.utils import EXIT_FAILED, FORMAT_OPTION, command_errors
from services.renormalization.pipeline import DysonReport, dyson_check_electron, dyson_check_photon
from services.renormalization.toy import toy_characters


CHARACTER_NAMES = ('u_gamma', 'u_e', 'c_gamma', 'c_e')

LATEX_SIDES = {
    'photon': r'\bar{D}(\alpha)\, Z_3(\alpha) - D(\alpha_0)',
    'electron': r'\bar{S}(\alpha)\, Z_2(\alpha) - S(\alpha_0)',
}


def _latex(value) -> str:
    if isinstance(value, Fraction):
        value = Rational(value.numerator, value.denominator)
    return latex(value)


def _latex_report(report: DysonReport) -> str:
    terms = ' + '.join(rf'{_latex(residual.value)}\, \alpha^{{{residual.order}}}' for residual in report.residuals)
    return rf'{LATEX_SIDES[report.particle]} &= {terms}'


def _ascii_report(report: DysonReport) -> str:
    lines = [f'{report.particle}: {"passed" if report.passed else "failed"} (N={report.order})']
    lines += [f'  alpha^{residual.order}: {residual.ring.render(residual.value)}' for residual in report.residuals]
    return '\n'.join(lines)


@click.command('renorm')
@click.option('--order', type=click.IntRange(min=1), default=None, help='порядок усечения N')
@click.option('--seed', type=int, default=None, help='зерно модельных характеров')
@click.option('--ring', type=click.Choice([kind.value for kind in RingKind]), default=None, help='кольцо значений U')
@click.option('--d', 'dim', type=click.IntRange(min=1), default=None, help='размер матриц')
@click.option('--zero-counterterms', is_flag=True, help='C^gamma = C^e = 0')
@click.option('--characters', type=click.Path(exists=True, dir_okay=False), default=None,
              help='JSON с таблицами u_gamma, u_e, c_gamma, c_e вместо модельных')
@click.option('--export-characters', type=click.Path(dir_okay=False), default=None,
              help='сохранить использованные таблицы характеров в JSON')
@FORMAT_OPTION
@command_errors
def renormalize(order: int, seed: int, ring: str, dim: int, zero_counterterms: bool, characters: str,
                export_characters: str, fmt: str):
    """
    Проверка D_bar Z_3 = D(alpha_0) и S_bar Z_2 = S(alpha_0) покоэффициентно; код выхода 1 при невязке
    """
    cfg = section('renorm')
    order = order or cfg.get('order', 4)
    seed = seed if seed is not None else cfg.get('seed', 0)
    kind = RingKind(ring or cfg.get('ring', RingKind.SCALAR.value))
    dim = dim or cfg.get('d', 4)

    if characters:
        with open(characters, encoding='utf-8') as file:
            loaded = CharacterSetSchema().loads(file.read())
        u_gamma, u_e, c_gamma, c_e = (loaded[name] for name in CHARACTER_NAMES)
    else:
        u_gamma, u_e, c_gamma, c_e = toy_characters(seed, kind, dim, order)
    if zero_counterterms:
        c_gamma = Character.zero(AlgebraTag.H_ALPHA, c_gamma.ring)
        c_e = Character.zero(AlgebraTag.H_E, c_e.ring)

    if export_characters:
        tables = dict(zip(CHARACTER_NAMES, map(dump_character, (u_gamma, u_e, c_gamma, c_e))))
        with open(export_characters, 'w', encoding='utf-8') as file:
            file.write(CharacterSetSchema().dumps(tables, ensure_ascii=False, indent=2))

    photon = dyson_check_photon(u_gamma, c_gamma, order)
    electron = dyson_check_electron(u_e, c_gamma, c_e, order)
    passed = photon.passed and electron.passed

    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        data = {'status': 'passed' if passed else 'failed', 'photon': photon, 'electron': electron}
        click.echo(RenormReportSchema().dumps(data, ensure_ascii=False))
    elif fmt is OutputFormat.LATEX:
        click.echo('\\begin{align*}')
        click.echo(_latex_report(photon) + ' \\\\')
        click.echo(_latex_report(electron))
        click.echo('\\end{align*}')
    else:
        click.echo(_ascii_report(photon))
        click.echo(_ascii_report(electron))

    if not passed:
        click.get_current_context().exit(EXIT_FAILED)
