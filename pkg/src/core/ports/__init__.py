from .clock_model_ports import ClockModel
from .command_ports import ClockCommandPort
from .report_ports import ConfigLoaderPort, ReportSinkPort

__all__ = ["ClockCommandPort", "ClockModel", "ConfigLoaderPort", "ReportSinkPort"]
