"""Contract base class, ABI declarations and argument coercion.

Each contract is a deterministic state machine. Public functions are
declared with @abi, which records the on-chain function name, parameter
types, whether it is a view, and which argument (if any) is the
variable-length payload that drives gas.
"""
from __future__ import annotations

import copy
import dataclasses
import hashlib
import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, ClassVar

from src.contracts.errors import BadArguments, NoSuchFunction
from src.docstore import ContentHash
from src.shared.address import Address

log = logging.getLogger("contracts")


class ContractKind(str, Enum):
    SALES = "Sales"
    FINANCIAL = "Financial"
    LETTER_OF_CREDIT = "LetterOfCredit"


class ParamType(str, Enum):
    ADDRESS = "address"
    STRING = "string"
    INT = "int"
    HASH = "hash"
    DOC_TYPES = "doc_types"


@dataclass(frozen=True)
class FunctionSpec:
    name: str
    params: tuple[ParamType, ...]
    method: str
    view: bool = False
    payload_arg: int | None = None

    @property
    def arity(self) -> int:
        return len(self.params)

    def payload_len(self, args: tuple) -> int:
        """Characters in the payload argument; 0 when absent or not a string."""
        if self.payload_arg is None or self.payload_arg >= len(args):
            return 0
        value = args[self.payload_arg]
        return len(value) if isinstance(value, str) else 0

    def coerce(self, args: tuple) -> tuple:
        if len(args) != self.arity:
            raise BadArguments(f"{self.name} takes {self.arity} arguments, got {len(args)}")
        return tuple(coerce_arg(t, a, self.name) for t, a in zip(self.params, args))


def coerce_arg(param: ParamType, value: Any, function_name: str = "?") -> Any:
    if param is ParamType.ADDRESS:
        if isinstance(value, Address):
            return value
        if isinstance(value, str):
            try:
                return Address.from_hex(value)
            except ValueError:
                pass
    elif param is ParamType.STRING:
        if isinstance(value, str):
            return value
    elif param is ParamType.INT:
        if isinstance(value, int) and not isinstance(value, bool):
            return value
    elif param is ParamType.HASH:
        if isinstance(value, ContentHash):
            return value
        if isinstance(value, str):
            try:
                return ContentHash.from_hex(value)
            except ValueError:
                pass
    elif param is ParamType.DOC_TYPES:
        if isinstance(value, str):
            return frozenset(t.strip() for t in value.split(",") if t.strip())
        if isinstance(value, (set, frozenset, list, tuple)) and all(isinstance(t, str) for t in value):
            return frozenset(value)
    raise BadArguments(f"{function_name}: expected {param.value}, got {value!r}")


def abi(name: str, *params: str, view: bool = False, payload: int | None = None) -> Callable:
    """Declare a contract method as an externally callable function."""
    def wrap(fn):
        fn.__abi__ = FunctionSpec(
            name=name,
            params=tuple(ParamType(p) for p in params),
            method=fn.__name__,
            view=view,
            payload_arg=payload,
        )
        return fn
    return wrap


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, (Address, ContentHash)):
        return obj.hex
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj):
        return {f.name: _jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


class Contract:
    """Base for the trade-finance contracts.

    Subclasses set `kind`, implement `initial_state()` and declare functions
    with @abi. Methods take the caller address first.
    """
    kind: ClassVar[ContractKind]
    functions: ClassVar[dict[str, FunctionSpec]] = {}

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.functions = {}
        for attr in vars(cls).values():
            spec = getattr(attr, "__abi__", None)
            if spec is not None:
                cls.functions[spec.name] = spec

    def __init__(self, contract_id: Address):
        self.contract_id = contract_id
        self.state = self.initial_state()
        self._events: list[tuple[str, dict]] = []

    def initial_state(self):
        raise NotImplementedError

    def spec(self, function_name: str) -> FunctionSpec:
        try:
            return self.functions[function_name]
        except KeyError:
            raise NoSuchFunction(f"{self.kind.value} has no function {function_name!r}") from None

    def execute(self, caller: Address, function_name: str, args: tuple = ()) -> Any:
        spec = self.spec(function_name)
        return getattr(self, spec.method)(caller, *spec.coerce(tuple(args)))

    def emit(self, name: str, **data) -> None:
        self._events.append((name, data))

    def drain_events(self) -> list[tuple[str, dict]]:
        events, self._events = self._events, []
        return events

    def snapshot(self):
        return copy.deepcopy(self.state)

    def restore(self, snapshot) -> None:
        self.state = snapshot
        self._events = []

    def state_dict(self) -> dict:
        return _jsonable(self.state)

    def state_hash(self) -> str:
        blob = json.dumps(self.state_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()
