import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from bilattice_programs import __version__
from bilattice_programs.bilattice.bilattice import FOUR, BilatticeSpec, bilattice_from_name
from bilattice_programs.core.constants import DEFAULT_BILATTICE
from bilattice_programs.core.exceptions import (
    BilatticeProgramsError, ConfigurationError, ConvergenceError, FragmentError,
)
from bilattice_programs.core.logger import logger, setup_logger
from bilattice_programs.handlers.file_handler import FileHandler
from bilattice_programs.program.grounder import GroundProgram, Grounder
from bilattice_programs.semantics.engine import SemanticsEngine
from bilattice_programs.semantics.interpretation import Interpretation
from bilattice_programs.semantics.reference import DatalogProgram
from bilattice_programs.utils.report_builder import Report, ReportBuilder, pf_trace_entries, stage_trace_entries

COMMANDS = ('eval', 'support', 'sem', 'wfs', 'kk', 'check', 'sound')
PRESETS = ('H_F', 'H_U')
FORMATS = ('table', 'json')

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_FRAGMENT = 3
EXIT_ITERATIONS = 4


@dataclass
class RunConfig:
    """
    One invocation of the command line tool.

    Attributes:
        command: One of COMMANDS.
        programs: Program files; several files are evaluated concurrently and
            reported in the given order.
        hypothesis: Hypothesis file, or None to use the preset in assume.
        assume: 'H_F' (everywhere false, four only) or 'H_U' (everywhere undefined).
        bilattice: Bilattice selector, e.g. 'four' or 'product:unit'.
        trace: Whether reports list every iteration.
        output_format: 'table' or 'json'.
        max_iters: Cap on fixpoint iterations; None for the size-based default.
        output: Write reports to this file instead of stdout.
    """

    command: str
    programs: List[str] = field(default_factory=list)
    hypothesis: Optional[str] = None
    assume: str = 'H_U'
    bilattice: str = DEFAULT_BILATTICE
    trace: bool = False
    output_format: str = 'table'
    max_iters: Optional[int] = None
    output: Optional[str] = None
    verbose: bool = False

    def validate(self) -> BilatticeSpec:
        """
        Checks the combination of options and resolves the bilattice.
        """
        if self.command not in COMMANDS:
            raise ConfigurationError(f"Unknown command '{self.command}'")
        if not self.programs:
            raise ConfigurationError('At least one program file is required (-p)')
        if self.assume not in PRESETS:
            raise ConfigurationError(f"Unknown hypothesis preset '{self.assume}' (expected H_F or H_U)")
        if self.output_format not in FORMATS:
            raise ConfigurationError(f"Unknown output format '{self.output_format}'")
        if self.max_iters is not None and self.max_iters < 1:
            raise ConfigurationError('--max-iters must be positive')
        bilattice = bilattice_from_name(self.bilattice)
        if self.hypothesis is None and self.assume == 'H_F' and bilattice != FOUR \
                and self.command in ('support', 'sem', 'sound'):
            raise ConfigurationError('The everywhere-false hypothesis H_F is only available with --bilattice four')
        return bilattice


class Runner:
    """
    Executes a RunConfig program by program.
    """

    def __init__(self, config: RunConfig, bilattice: BilatticeSpec, hypothesis: Optional[Interpretation] = None):
        self.config = config
        self.bilattice = bilattice
        self.hypothesis = hypothesis

    def _hypothesis_for(self, program: GroundProgram) -> Tuple[Interpretation, str]:
        if self.hypothesis is not None:
            return program.align(self.hypothesis), self.config.hypothesis
        if self.config.assume == 'H_F':
            return program.everywhere(FOUR.false), 'H_F'
        return program.empty(), 'H_U'

    def _report(self, file_name: str, **kwargs) -> Report:
        return Report(self.config.command, os.path.basename(file_name), self.bilattice.name, **kwargs)

    def run_file(self, file_name: str) -> Tuple[int, Optional[Report], Optional[str]]:
        """
        Runs the configured command on one program file.

        Returns:
            Tuple[int, Optional[Report], Optional[str]]: Exit status, the
            report, and an error message when the run failed.
        """
        try:
            program = Grounder.ground(FileHandler.load_program(file_name, self.bilattice))
            engine = SemanticsEngine(program, self.config.max_iters)
            report = getattr(self, f'_run_{self.config.command}')(file_name, program, engine)
            return report.status, report, None
        except FragmentError as e:
            return EXIT_FRAGMENT, None, f'{file_name}: {e}'
        except ConvergenceError as e:
            return EXIT_ITERATIONS, None, f'{file_name}: {e}'
        except BilatticeProgramsError as e:
            return EXIT_INPUT, None, f'{file_name}: {e}'
        except RecursionError:
            logger.error(f'Recursion limit reached while processing {file_name}')
            return EXIT_INPUT, None, f'{file_name}: formulas are nested too deeply to evaluate'

    def _run_eval(self, file_name, program, engine) -> Report:
        return self._report(file_name, interpretation=engine.immediate_consequence(program.facts_interpretation))

    def _run_support(self, file_name, program, engine) -> Report:
        hypothesis, label = self._hypothesis_for(program)
        result = engine.support(hypothesis)
        details = {'hypothesis': label, 'incompatible': result.incompatible, 'pf': result.pf}
        return self._report(file_name, interpretation=result.support, iterations=result.iterations,
                            trace=pf_trace_entries(result.pf_trace), details=details)

    def _run_sem(self, file_name, program, engine) -> Report:
        hypothesis, label = self._hypothesis_for(program)
        result = engine.h_founded_semantics(hypothesis)
        return self._report(file_name, interpretation=result.model, iterations=result.iterations,
                            trace=stage_trace_entries(result.stage_trace), details={'hypothesis': label})

    def _run_wfs(self, file_name, program, engine) -> Report:
        stages = DatalogProgram.from_ground(program).well_founded_stages()
        valuations = [stage.to_three_valued(program.base) for stage in stages]
        return self._report(file_name, interpretation=valuations[-1], iterations=len(stages),
                            trace=stage_trace_entries(valuations, 'W'))

    def _run_kk(self, file_name, program, engine) -> Report:
        stages = DatalogProgram.from_ground(program).kripke_kleene_stages()
        return self._report(file_name, interpretation=stages[-1], iterations=len(stages),
                            trace=stage_trace_entries(stages, 'K'))

    def _run_check(self, file_name, program, engine) -> Report:
        reference = DatalogProgram.from_ground(program)
        comparisons = (
            ('wfs', reference.well_founded().to_three_valued(program.base), program.everywhere(FOUR.false)),
            ('kk', reference.kripke_kleene(), program.empty()),
        )
        verdicts, lines = [], []
        for name, expected, hypothesis in comparisons:
            model = engine.h_founded_semantics(hypothesis).model
            differing = sorted(expected.defined_atoms() | model.defined_atoms(), key=str)
            differing = [atom for atom in differing if expected[atom] != model[atom]]
            verdicts.append(f"{name}: {'MISMATCH' if differing else 'MATCH'}")
            lines.extend(f'{name} mismatch {atom}: {name} = {expected[atom]}, sem = {model[atom]}'
                         for atom in differing)
        report = self._report(file_name, lines=[', '.join(verdicts)] + lines)
        report.status = EXIT_MISMATCH if lines else EXIT_OK
        return report

    def _run_sound(self, file_name, program, engine) -> Report:
        hypothesis, label = self._hypothesis_for(program)
        incompatible = program.facts_interpretation.incompatible_atoms(hypothesis)
        changes = engine.rule_application_changes(hypothesis)
        lines = [f'sound: {str(engine.is_sound(hypothesis)).lower()}',
                 f'survives rule application: {str(engine.survives_rule_application(hypothesis)).lower()}']
        lines.extend(f'changed {atom}: {hypothesis[atom]} -> {value}' for atom, value in changes.items())
        return self._report(file_name, lines=lines, details={'hypothesis': label, 'incompatible': incompatible})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bilattice-programs',
        description='Evaluate logic programs over bilattices: immediate consequences, hypothesis support, '
                    'hypothesis-founded semantics, and well-founded / Kripke-Kleene cross-checks.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('command', choices=COMMANDS, help='what to compute')
    parser.add_argument('-p', '--program', metavar='FILE', action='append', dest='programs', required=True,
                        help='program file; repeat for a batch')
    hypotheses = parser.add_mutually_exclusive_group()
    hypotheses.add_argument('-H', '--hypothesis', metavar='FILE', help='hypothesis file (ground facts)')
    hypotheses.add_argument('--assume', choices=PRESETS, default='H_U',
                            help='hypothesis preset: everywhere false or everywhere undefined (default H_U)')
    parser.add_argument('--bilattice', default=DEFAULT_BILATTICE,
                        help='four, product:L, product:L1,L2 or interval:L with L in bool, unit, chainN')
    parser.add_argument('--trace', action='store_true', help='list every iteration')
    parser.add_argument('--format', dest='output_format', choices=FORMATS, default='table', help='report format')
    parser.add_argument('--max-iters', type=int, metavar='N', help='cap on fixpoint iterations')
    parser.add_argument('-o', '--output', metavar='FILE', help='write the report to FILE')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging on stderr')
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    return RunConfig(command=args.command, programs=args.programs, hypothesis=args.hypothesis,
                     assume=args.assume, bilattice=args.bilattice, trace=args.trace,
                     output_format=args.output_format, max_iters=args.max_iters, output=args.output,
                     verbose=args.verbose)


def run(config: RunConfig) -> Tuple[int, str, List[str]]:
    """
    Runs a configuration.

    Args:
        config (RunConfig): The run to perform.

    Returns:
        Tuple[int, str, List[str]]: Exit status, the rendered reports, and
        error messages for stderr.
    """
    try:
        bilattice = config.validate()
        hypothesis = FileHandler.load_hypothesis(config.hypothesis, bilattice) if config.hypothesis else None
    except BilatticeProgramsError as e:
        return EXIT_INPUT, '', [str(e)]

    logger.info(f'Running {config.command} on {len(config.programs)} program(s) over {bilattice.name}')
    runner = Runner(config, bilattice, hypothesis)
    outcomes = FileHandler.process_all(config.programs, runner.run_file)

    status = max(code for code, _, _ in outcomes)
    reports = [report for _, report, _ in outcomes if report is not None]
    errors = [error for _, _, error in outcomes if error is not None]
    if config.output_format == 'json':
        data = [ReportBuilder.to_dict(report, config.trace) for report in reports]
        text = ReportBuilder.prepare_json(data[0] if len(config.programs) == 1 and data else data, 2) + '\n'
    else:
        text = '\n'.join(ReportBuilder.to_table(report, config.trace) for report in reports)
    return status, text, errors


def main(argv: Optional[List[str]] = None) -> int:
    config = parse_config(argv)
    if config.verbose:
        setup_logger(level=logging.DEBUG)
    status, text, errors = run(config)
    for error in errors:
        print(f'error: {error}', file=sys.stderr)
    if config.output:
        try:
            FileHandler.export_text(text, config.output)
        except BilatticeProgramsError as e:
            print(f'error: {e}', file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return status


if __name__ == '__main__':
    sys.exit(main())
