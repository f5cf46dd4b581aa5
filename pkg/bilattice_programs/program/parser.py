import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from bilattice_programs.bilattice.bilattice import FOUR, NAMED_VALUES, BilatticeSpec
from bilattice_programs.core.exceptions import BilatticeError, FunctionSymbolError, ProgramSyntaxError
from bilattice_programs.core.logger import logger
from bilattice_programs.program.syntax import (
    Atom, Binary, Clause, Connective, Const, Formula, Negation, Program, Quantified, Quantifier, Term, Truth, Var,
)
from bilattice_programs.semantics.interpretation import Interpretation

TOKEN_SPECIFICATION = [
    ('COMMENT', r'%[^\n]*'),
    ('NEWLINE', r'\n'),
    ('SKIP', r'[ \t\r]+'),
    ('ARROW', r'<-'),
    ('PLUS', r'\(\+\)'),
    ('TIMES', r'\(\*\)'),
    ('NUMBER', r'\d+(?:\.\d+)?'),
    ('NAME', r'[a-z][A-Za-z0-9_]*'),
    ('VARIABLE', r'[A-Z_][A-Za-z0-9_]*'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
    ('LANGLE', r'<'),
    ('RANGLE', r'>'),
    ('LBRACKET', r'\['),
    ('RBRACKET', r'\]'),
    ('COMMA', r','),
    ('DOT', r'\.'),
    ('EQUALS', r'='),
    ('AND', r'&'),
    ('OR', r'\|'),
    ('NOT', r'~'),
    ('MISMATCH', r'.'),
]
TOKEN_REGEX = re.compile('|'.join('(?P<%s>%s)' % pair for pair in TOKEN_SPECIFICATION))

CONNECTIVES = {
    'AND': Connective.AND,
    'OR': Connective.OR,
    'TIMES': Connective.TIMES,
    'PLUS': Connective.PLUS,
}
QUANTIFIERS = {quantifier.value: quantifier for quantifier in Quantifier}
CLOSING = {'LANGLE': 'RANGLE', 'LBRACKET': 'RBRACKET'}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    """
    Splits program text into tokens, dropping blanks and % comments.
    The list always ends with an EOF token.
    """
    tokens = []
    line, line_start = 1, 0
    for match in TOKEN_REGEX.finditer(text):
        kind = match.lastgroup
        column = match.start() - line_start + 1
        if kind == 'NEWLINE':
            line, line_start = line + 1, match.end()
        elif kind == 'MISMATCH':
            raise ProgramSyntaxError(f'unexpected character {match.group()!r}', line, column)
        elif kind not in ('COMMENT', 'SKIP'):
            tokens.append(Token(kind, match.group(), line, column))
    tokens.append(Token('EOF', '', line, len(text) - line_start + 1))
    return tokens


class ProgramParser:
    """
    Recursive descent parser for program and hypothesis files.

    Statements:
        atom = value.       a fact
        atom.               shorthand for atom = T.
        atom <- formula.    a rule

    Binary connectives from tightest to loosest: & | (*) (+); quantifiers
    extend as far to the right as possible.
    """

    def __init__(self, text: str, bilattice: BilatticeSpec = FOUR):
        self.bilattice = bilattice
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            self.fail(f'expected {what}, found {self.describe(self.current)}')
        return self.advance()

    def fail(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        raise ProgramSyntaxError(message, token.line, token.column)

    @staticmethod
    def describe(token: Token) -> str:
        return 'end of input' if token.kind == 'EOF' else repr(token.text)

    def parse_program(self) -> Program:
        facts: Dict[Atom, Any] = {}
        rules: List[Clause] = []
        while self.current.kind != 'EOF':
            statement = self.parse_statement()
            if isinstance(statement, Clause):
                rules.append(statement)
                continue
            atom, value, token = statement
            if atom in facts and facts[atom] != value:
                self.fail(f'conflicting values for {atom}: {self.bilattice.format_value(facts[atom])} '
                          f'and {self.bilattice.format_value(value)}', token)
            facts[atom] = value
        logger.debug(f'Parsed {len(facts)} facts and {len(rules)} rules')
        return Program(facts, tuple(rules), self.bilattice)

    def parse_statement(self):
        start = self.current
        head = self.parse_atom()
        if self.current.kind == 'ARROW':
            self.advance()
            body = self.parse_formula()
            self.expect('DOT', "'.' after the rule body")
            return Clause(head, body)
        if self.current.kind == 'EQUALS':
            self.advance()
            value = self.parse_value()
        else:
            value = self.bilattice.true
        self.expect('DOT', "'.' at the end of the statement")
        if not head.is_ground:
            self.fail(f'fact {head} is not ground', start)
        return head, value, start

    def parse_atom(self) -> Atom:
        token = self.current
        if token.kind != 'NAME' or token.text in QUANTIFIERS:
            self.fail(f'expected an atom, found {self.describe(token)}')
        self.advance()
        args: Tuple[Term, ...] = ()
        if self.current.kind == 'LPAREN':
            self.advance()
            terms = [self.parse_term()]
            while self.current.kind == 'COMMA':
                self.advance()
                terms.append(self.parse_term())
            self.expect('RPAREN', "')' after the arguments")
            args = tuple(terms)
        return Atom(token.text, args, (token.line, token.column))

    def parse_term(self) -> Term:
        token = self.current
        if token.kind == 'NAME':
            self.advance()
            if self.current.kind == 'LPAREN':
                raise FunctionSymbolError(f'function symbol {token.text} is not supported', token.line, token.column)
            return Const(token.text)
        if token.kind == 'VARIABLE':
            if token.text in NAMED_VALUES:
                self.fail(f'{token.text} is a truth value and cannot be used as a variable')
            self.advance()
            return Var(token.text)
        self.fail(f'expected a constant or a variable, found {self.describe(token)}')

    def parse_formula(self, min_precedence: int = 1) -> Formula:
        left = self.parse_unary()
        while self.current.kind in CONNECTIVES and CONNECTIVES[self.current.kind].precedence >= min_precedence:
            connective = CONNECTIVES[self.advance().kind]
            right = self.parse_formula(connective.precedence + 1)
            left = Binary(connective, left, right)
        return left

    def parse_unary(self) -> Formula:
        token = self.current
        if token.kind == 'NOT':
            self.advance()
            if self.current.kind != 'NAME' or self.current.text in QUANTIFIERS:
                self.fail('negation applies to atoms only')
            return Negation(self.parse_atom())
        if token.kind == 'LPAREN':
            self.advance()
            formula = self.parse_formula()
            self.expect('RPAREN', "')'")
            return formula
        if token.kind == 'NAME' and token.text in QUANTIFIERS:
            self.advance()
            variable = self.expect('VARIABLE', f'a variable after {token.text}')
            if variable.text in NAMED_VALUES:
                self.fail(f'{variable.text} is a truth value and cannot be used as a variable', variable)
            body = self.parse_formula()
            return Quantified(QUANTIFIERS[token.text], Var(variable.text), body)
        if token.kind == 'NAME':
            return self.parse_atom()
        if token.kind in CLOSING or (token.kind == 'VARIABLE' and token.text in NAMED_VALUES):
            return Truth(self.parse_value())
        self.fail(f'expected a formula, found {self.describe(token)}')

    def parse_value(self) -> Any:
        start = self.current
        if start.kind == 'VARIABLE' and start.text in NAMED_VALUES:
            self.advance()
            literal = start.text
        elif start.kind in CLOSING:
            parts = [self.advance().text]
            while self.current.kind != CLOSING[start.kind]:
                if self.current.kind in ('EOF', 'DOT', 'ARROW'):
                    self.fail(f'unterminated value literal starting with {start.text!r}', start)
                parts.append(self.advance().text)
            parts.append(self.advance().text)
            literal = ''.join(parts)
        else:
            self.fail(f'expected a truth value, found {self.describe(start)}')
        try:
            return self.bilattice.parse_value(literal)
        except BilatticeError as e:
            raise ProgramSyntaxError(f'unknown value literal: {e}', start.line, start.column)


def parse_program(text: str, bilattice: BilatticeSpec = FOUR) -> Program:
    """
    Parses the text of a program file.

    Args:
        text (str): Program source.
        bilattice (BilatticeSpec): The bilattice value literals are read in.

    Returns:
        Program: Facts and rules, in source order.
    """
    return ProgramParser(text, bilattice).parse_program()


def parse_hypothesis(text: str, bilattice: BilatticeSpec = FOUR):
    """
    Parses a hypothesis file (ground facts only) into an interpretation whose
    base is the set of atoms it lists. Atoms it does not list are U.
    """
    program = parse_program(text, bilattice)
    if program.rules:
        first = program.rules[0].head
        line, column = first.position or (None, None)
        raise ProgramSyntaxError('hypothesis files contain facts only', line, column)
    return Interpretation(bilattice, program.facts.keys(), program.facts)
