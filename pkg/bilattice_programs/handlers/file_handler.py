import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from bilattice_programs.bilattice.bilattice import FOUR, BilatticeSpec
from bilattice_programs.core.constants import HYPOTHESIS_SUFFIX, MAX_WORKERS, PROGRAM_SUFFIX
from bilattice_programs.core.exceptions import InputError
from bilattice_programs.core.logger import logger
from bilattice_programs.program.parser import parse_hypothesis, parse_program
from bilattice_programs.program.syntax import Program
from bilattice_programs.semantics.interpretation import Interpretation

T = TypeVar('T')


class FileHandler:
    """
    A class to handle local file operations: reading program and hypothesis
    files and writing reports.
    """

    @staticmethod
    def read_text(file_name: str) -> str:
        """
        Reads a UTF-8 text file.

        Args:
            file_name (str): The path to read.

        Returns:
            str: The file contents.
        """
        try:
            with open(file_name, 'r', encoding='utf-8') as infile:
                return infile.read()
        except (OSError, UnicodeDecodeError) as e:
            logger.error(f'Error reading {file_name}: {e}')
            raise InputError(f'Cannot read {file_name}: {e}')

    @staticmethod
    def load_program(file_name: str, bilattice: BilatticeSpec = FOUR) -> Program:
        if not file_name.endswith(PROGRAM_SUFFIX):
            logger.debug(f'{file_name} does not use the {PROGRAM_SUFFIX} suffix')
        program = parse_program(FileHandler.read_text(file_name), bilattice)
        logger.info(f'Loaded {file_name}: {len(program.facts)} facts, {len(program.rules)} rules')
        return program

    @staticmethod
    def load_hypothesis(file_name: str, bilattice: BilatticeSpec = FOUR) -> Interpretation:
        if not file_name.endswith(HYPOTHESIS_SUFFIX):
            logger.debug(f'{file_name} does not use the {HYPOTHESIS_SUFFIX} suffix')
        hypothesis = parse_hypothesis(FileHandler.read_text(file_name), bilattice)
        logger.info(f'Loaded {file_name}: {len(hypothesis)} defined atoms')
        return hypothesis

    @staticmethod
    def export_text(text: str, file_name: str) -> str:
        """
        Writes text to a file, creating parent folders as needed.

        Args:
            text (str): The content.
            file_name (str): The target file path.

        Returns:
            str: The text that was written.
        """
        folder = os.path.dirname(file_name)
        try:
            if folder:
                os.makedirs(folder, exist_ok=True)
            with open(file_name, 'w', encoding='utf-8') as outfile:
                outfile.write(text)
        except OSError as e:
            logger.error(f'Error writing {file_name}: {e}')
            raise InputError(f'Cannot write {file_name}: {e}')
        return text

    @staticmethod
    def process_all(file_names: Sequence[str], task: Callable[[str], T]) -> List[T]:
        """
        Runs a task over several files concurrently.

        Args:
            file_names (Sequence[str]): The files, in reporting order.
            task (Callable[[str], T]): Work to do for one file.

        Returns:
            List[T]: Results in the order of file_names.
        """
        if len(file_names) == 1:
            return [task(file_names[0])]
        with ThreadPoolExecutor(max_workers=MAX_WORKERS) as executor:
            futures = [executor.submit(task, file_name) for file_name in file_names]
            results = []
            for file_name, future in zip(file_names, futures):
                try:
                    results.append(future.result())
                except Exception as e:
                    logger.error(f'Error in FileHandler.process_all for {file_name}: {e}')
                    raise
            return results
