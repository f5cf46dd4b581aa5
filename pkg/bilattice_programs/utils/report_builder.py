import json
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence

from bilattice_programs.semantics.interpretation import Interpretation
from bilattice_programs.utils.custom_encoder import CustomEncoder


@dataclass
class Report:
    """
    The outcome of one command on one program, ready to be rendered.

    details holds extra header entries (hypothesis, incompatible atoms, the
    PF limit, check verdicts); lines holds free-form lines printed after them.
    """

    command: str
    program: str
    bilattice: str
    interpretation: Optional[Interpretation] = None
    iterations: Optional[int] = None
    trace: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)
    status: int = 0


def pf_trace_entries(trace: Sequence[FrozenSet]) -> List[Dict[str, Any]]:
    return [{'label': f'PF_{index}', 'atoms': sorted(str(atom) for atom in stage)}
            for index, stage in enumerate(trace)]


def stage_trace_entries(stages: Sequence[Interpretation], label: str = 'F') -> List[Dict[str, Any]]:
    """
    One entry per stage, listing the atoms whose value differs from the
    previous stage (every defined atom for the first one).
    """
    entries = []
    previous = None
    for index, stage in enumerate(stages):
        changes = {}
        for atom, value in stage.items():
            if previous is None or previous[atom] != value:
                changes[str(atom)] = stage.bilattice.format_value(value)
        if previous is not None:
            for atom in sorted(previous.defined_atoms() - stage.defined_atoms(), key=str):
                changes[str(atom)] = stage.bilattice.format_value(stage.bilattice.under)
        entries.append({'label': f'{label}_{index}', 'changes': changes})
        previous = stage
    return entries


def _join(items: Iterable[str]) -> str:
    return '{' + ', '.join(items) + '}'


class ReportBuilder:
    """
    Renders reports as `atom = value` tables or as JSON.
    """

    @staticmethod
    def to_table(report: Report, with_trace: bool = False) -> str:
        """
        Header lines start with %; the table lists the defined atoms sorted
        by their text.

        Args:
            report (Report): The report to render.
            with_trace (bool): Whether to include one line per iteration.

        Returns:
            str: The rendered table, newline terminated.
        """
        lines = [f'% command: {report.command}', f'% program: {report.program}',
                 f'% bilattice: {report.bilattice}']
        for key, value in report.details.items():
            if isinstance(value, (set, frozenset, list, tuple)):
                value = _join(sorted(str(item) for item in value))
            lines.append(f'% {key}: {value}')
        if report.iterations is not None:
            lines.append(f'% iterations: {report.iterations}')
        if with_trace:
            for entry in report.trace:
                if 'atoms' in entry:
                    lines.append(f"% {entry['label']}: {_join(entry['atoms'])}")
                else:
                    changes = [f'{atom} = {value}' for atom, value in entry['changes'].items()]
                    lines.append(f"% {entry['label']}: {_join(changes)}")
        lines.extend(report.lines)
        if report.interpretation is not None:
            lines.extend(report.interpretation.table())
        return '\n'.join(lines) + '\n'

    @staticmethod
    def to_dict(report: Report, with_trace: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'command': report.command,
            'program': report.program,
            'bilattice': report.bilattice,
        }
        data.update(report.details)
        if report.interpretation is not None:
            items = report.interpretation.items()
            data['atoms'] = [str(atom) for atom, _ in items]
            data['values'] = {str(atom): report.interpretation.bilattice.format_value(value)
                              for atom, value in items}
        if report.iterations is not None:
            data['iterations'] = report.iterations
        if with_trace:
            data['trace'] = report.trace
        if report.lines:
            data['lines'] = report.lines
        return data

    @staticmethod
    def prepare_json(data, indent=None):
        """
        Converts data to a JSON string using CustomEncoder.

        Args:
            data: The data to be converted to JSON.
            indent (int, optional): Number of spaces for indentation. Defaults to None.

        Returns:
            str: The JSON string representation of the data.
        """
        return json.dumps(data, cls=CustomEncoder, ensure_ascii=False, indent=indent)
