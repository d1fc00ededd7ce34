from src.gasmodel.fees import FeeModel, FeeQuote
from src.gasmodel.schedule import (
    GasModelError,
    GasSchedule,
    ScheduleEntry,
    ScheduleError,
    UnknownFunction,
    default_schedule,
    load_schedule,
    parse_schedule,
    render_schedule,
    write_schedule,
)

__all__ = [
    "FeeModel",
    "FeeQuote",
    "GasModelError",
    "GasSchedule",
    "ScheduleEntry",
    "ScheduleError",
    "UnknownFunction",
    "default_schedule",
    "load_schedule",
    "parse_schedule",
    "render_schedule",
    "write_schedule",
]
