from .file_report_sink import FileReportSink

__all__ = ["FileReportSink"]
