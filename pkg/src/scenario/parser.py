"""Line-oriented scenario parser.

One statement per line; `#` starts a comment outside string literals.

    actor <name> <0x address>
    deploy <Sales|Financial|LetterOfCredit> as <id> [by <actor>]
    <actor> > <id>.<function>(<arg>, ...) [expect-revert <Reason>]
    attach <actor> <path> as <var>
    advance <seconds>

Arguments are "quoted strings" (escapes \\" and \\\\), bare integers, bare
actor names (addresses) and $var references to attached documents.
Every failure is a ScenarioError subclass with a line and column.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path

from src.contracts import REVERT_REASONS, ContractKind, FunctionSpec, ParamType, function_spec
from src.docstore import ContentHash
from src.scenario.errors import (
    ArgumentTypeMismatch,
    ArityMismatch,
    ScenarioError,
    ScenarioSyntaxError,
    UndeclaredActor,
    UndeclaredContract,
    UndeclaredVariable,
    UnknownContractFunction,
)
from src.scenario.script import (
    ActorRef,
    Advance,
    Arg,
    AttachFile,
    Call,
    Deploy,
    IntArg,
    ScenarioScript,
    Step,
    StrArg,
    VarRef,
)
from src.shared.address import Address

log = logging.getLogger("scenario")

KEYWORDS = frozenset({"actor", "deploy", "attach", "advance", "as", "by", "expect-revert"})
EXPECT_REVERT = "expect-revert"
# one simulated week per advance step
MAX_ADVANCE_S = 7 * 24 * 3600

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?[0-9]+")
_WORD = re.compile(r'[^\s"#]+')
_BLANKS = " \t"
_ESCAPES = {'"': '"', "\\": "\\"}


class _Line:
    """Cursor over one source line."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, cls: type[ScenarioError], message: str, pos: int | None = None) -> ScenarioError:
        return cls(self.lineno, (self.pos if pos is None else pos) + 1, message)

    def skip_blanks(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in _BLANKS:
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_blanks()
        return self.pos >= len(self.text) or self.text[self.pos] == "#"

    def peek(self) -> str:
        self.skip_blanks()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _match(self, pattern: re.Pattern, what: str) -> tuple[str, int]:
        self.skip_blanks()
        m = pattern.match(self.text, self.pos)
        if m is None:
            raise self.error(ScenarioSyntaxError, f"expected {what}")
        start, self.pos = self.pos, m.end()
        return m.group(), start

    def ident(self, what: str) -> tuple[str, int]:
        return self._match(_IDENT, what)

    def integer(self, what: str = "integer") -> tuple[int, int]:
        text, start = self._match(_INT, what)
        try:
            return int(text), start
        except ValueError:
            # longer than the interpreter's int-from-str digit limit
            raise self.error(ScenarioSyntaxError, "integer literal too long", start) from None

    def word(self, what: str) -> tuple[str, int]:
        return self._match(_WORD, what)

    def literal(self, token: str) -> int:
        self.skip_blanks()
        if not self.text.startswith(token, self.pos):
            raise self.error(ScenarioSyntaxError, f"expected {token!r}")
        start, self.pos = self.pos, self.pos + len(token)
        return start

    def keyword(self, token: str) -> bool:
        """Consume token if it is the next whole word."""
        self.skip_blanks()
        end = self.pos + len(token)
        if self.text.startswith(token, self.pos) and (end == len(self.text) or self.text[end] in _BLANKS + "#"):
            self.pos = end
            return True
        return False

    def string(self) -> tuple[str, int]:
        self.skip_blanks()
        start = self.pos
        if self.peek() != '"':
            raise self.error(ScenarioSyntaxError, "expected string literal")
        self.pos += 1
        out = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                return "".join(out), start
            if ch == "\\":
                nxt = self.text[self.pos + 1:self.pos + 2]
                if nxt not in _ESCAPES:
                    raise self.error(ScenarioSyntaxError, "unknown escape in string literal")
                out.append(_ESCAPES[nxt])
                self.pos += 2
                continue
            out.append(ch)
            self.pos += 1
        raise self.error(ScenarioSyntaxError, "unterminated string literal", start)

    def end(self) -> None:
        if not self.at_end():
            raise self.error(ScenarioSyntaxError, "unexpected text at end of statement")


class ScenarioParser:
    def __init__(self, base_dir: Path | None = None):
        self.base_dir = base_dir
        self.actors: dict[str, Address] = {}
        self.contracts: dict[str, ContractKind] = {}
        self.vars: set[str] = set()
        self.steps: list[Step] = []

    def parse(self, text: str) -> ScenarioScript:
        for lineno, raw in enumerate(text.split("\n"), start=1):
            line = _Line(raw.rstrip("\r"), lineno)
            if line.at_end():
                continue
            step = self._statement(line)
            if step is not None:
                self.steps.append(step)
        log.debug(f"Parsed scenario: {len(self.actors)} actors, {len(self.steps)} steps")
        return ScenarioScript(actors=dict(self.actors), steps=tuple(self.steps), base_dir=self.base_dir)

    def _statement(self, line: _Line) -> Step | None:
        if line.keyword("actor"):
            self._actor(line)
            return None
        if line.keyword("deploy"):
            return self._deploy(line)
        if line.keyword("attach"):
            return self._attach(line)
        if line.keyword("advance"):
            return self._advance(line)
        return self._call(line)

    def _declared_actor(self, line: _Line) -> str:
        name, col = line.ident("actor name")
        if name not in self.actors:
            raise line.error(UndeclaredActor, f"actor {name!r} is not declared", col)
        return name

    def _actor(self, line: _Line) -> None:
        name, col = line.ident("actor name")
        if name in KEYWORDS:
            raise line.error(ScenarioSyntaxError, f"{name!r} is a reserved word", col)
        if name in self.actors:
            raise line.error(ScenarioSyntaxError, f"actor {name!r} already declared", col)
        text, col = line.word("address")
        try:
            address = Address.from_hex(text)
        except ValueError:
            raise line.error(ScenarioSyntaxError, f"invalid address {text!r}", col) from None
        line.end()
        self.actors[name] = address

    def _deploy(self, line: _Line) -> Deploy:
        kind_text, col = line.ident("contract kind")
        try:
            kind = ContractKind(kind_text)
        except ValueError:
            kinds = "|".join(k.value for k in ContractKind)
            raise line.error(ScenarioSyntaxError, f"unknown contract kind {kind_text!r} (expected {kinds})", col) from None
        if not line.keyword("as"):
            raise line.error(ScenarioSyntaxError, "expected 'as'")
        name, col = line.ident("contract id")
        if name in self.contracts:
            raise line.error(ScenarioSyntaxError, f"contract id {name!r} already deployed", col)
        if line.keyword("by"):
            actor = self._declared_actor(line)
        elif self.actors:
            actor = next(iter(self.actors))
        else:
            raise line.error(UndeclaredActor, "deploy needs a declared actor")
        line.end()
        self.contracts[name] = kind
        return Deploy(kind=kind, name=name, actor=actor, line=line.lineno)

    def _attach(self, line: _Line) -> AttachFile:
        actor = self._declared_actor(line)
        if line.peek() == '"':
            path, _ = line.string()
        else:
            path, _ = line.word("file path")
        if not line.keyword("as"):
            raise line.error(ScenarioSyntaxError, "expected 'as'")
        var, _ = line.ident("variable name")
        line.end()
        self.vars.add(var)
        return AttachFile(actor=actor, path=path, var=var, line=line.lineno)

    def _advance(self, line: _Line) -> Advance:
        seconds, col = line.integer("seconds")
        if seconds < 0:
            raise line.error(ScenarioSyntaxError, "cannot advance by a negative duration", col)
        if seconds > MAX_ADVANCE_S:
            raise line.error(ScenarioSyntaxError, f"cannot advance by more than {MAX_ADVANCE_S} seconds", col)
        line.end()
        return Advance(seconds=seconds, line=line.lineno)

    def _call(self, line: _Line) -> Call:
        actor = self._declared_actor(line)
        line.literal(">")
        contract, col = line.ident("contract id")
        kind = self.contracts.get(contract)
        if kind is None:
            raise line.error(UndeclaredContract, f"contract {contract!r} is not deployed", col)
        line.literal(".")
        function, col = line.ident("function name")
        spec = function_spec(kind, function)
        if spec is None:
            raise line.error(UnknownContractFunction, f"{kind.value} has no function {function!r}", col)
        open_col = line.literal("(")
        args = self._args(line)

        expect = None
        if line.keyword(EXPECT_REVERT):
            expect, col = line.ident("revert reason")
            if expect not in REVERT_REASONS:
                raise line.error(ScenarioSyntaxError, f"unknown revert reason {expect!r}", col)
        line.end()

        if len(args) != spec.arity:
            raise line.error(
                ArityMismatch,
                f"{function} takes {spec.arity} argument(s), got {len(args)}",
                open_col,
            )
        for param, (arg, arg_col) in zip(spec.params, args):
            self._check_arg(line, spec, param, arg, arg_col)

        values = tuple(a for a, _ in args)
        payload_len = 0
        if spec.payload_arg is not None:
            payload_len = len(values[spec.payload_arg].value)
        return Call(
            actor=actor,
            contract=contract,
            function=function,
            args=values,
            payload_len=payload_len,
            view=spec.view,
            expect_revert=expect,
            line=line.lineno,
        )

    def _args(self, line: _Line) -> list[tuple[Arg, int]]:
        args: list[tuple[Arg, int]] = []
        if line.peek() == ")":
            line.pos += 1
            return args
        while True:
            args.append(self._arg(line))
            sep = line.peek()
            if sep == ",":
                line.pos += 1
            elif sep == ")":
                line.pos += 1
                return args
            else:
                raise line.error(ScenarioSyntaxError, "expected ',' or ')'")

    def _arg(self, line: _Line) -> tuple[Arg, int]:
        ch = line.peek()
        if ch == '"':
            text, col = line.string()
            return StrArg(text), col
        if ch == "$":
            col = line.pos
            line.pos += 1
            name, _ = line.ident("variable name")
            return VarRef(name), col
        if ch == "-" or ch.isdigit():
            value, col = line.integer()
            return IntArg(value), col
        if ch and (ch.isalpha() or ch == "_"):
            name, col = line.ident("actor name")
            return ActorRef(name), col
        raise line.error(ScenarioSyntaxError, "expected argument")

    def _check_arg(self, line: _Line, spec: FunctionSpec, param: ParamType, arg: Arg, col: int) -> None:
        if isinstance(arg, ActorRef) and arg.name not in self.actors:
            raise line.error(UndeclaredActor, f"actor {arg.name!r} is not declared", col)
        if isinstance(arg, VarRef) and arg.name not in self.vars:
            raise line.error(UndeclaredVariable, f"variable ${arg.name} is not attached", col)
        if not _accepts(param, arg):
            raise line.error(
                ArgumentTypeMismatch,
                f"{spec.name}: expected {param.value}, got {arg.render()}",
                col,
            )


def _accepts(param: ParamType, arg: Arg) -> bool:
    if param is ParamType.ADDRESS:
        return isinstance(arg, ActorRef) or (isinstance(arg, StrArg) and _is_address(arg.value))
    if param is ParamType.INT:
        return isinstance(arg, IntArg)
    if param is ParamType.HASH:
        return isinstance(arg, VarRef) or (isinstance(arg, StrArg) and _is_hash(arg.value))
    return isinstance(arg, StrArg)


def _is_address(text: str) -> bool:
    try:
        Address.from_hex(text)
    except ValueError:
        return False
    return True


def _is_hash(text: str) -> bool:
    try:
        ContentHash.from_hex(text)
    except ValueError:
        return False
    return True


def parse(text: str | bytes, base_dir: Path | None = None) -> ScenarioScript:
    """Parse scenario text (or UTF-8 bytes) into a ScenarioScript."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            before = text[:e.start]
            line = before.count(b"\n") + 1
            column = e.start - (before.rfind(b"\n") + 1) + 1
            raise ScenarioSyntaxError(line, column, "invalid UTF-8") from None
    return ScenarioParser(base_dir).parse(text)


def parse_file(path: Path) -> ScenarioScript:
    path = Path(path)
    return parse(path.read_bytes(), base_dir=path.parent)
