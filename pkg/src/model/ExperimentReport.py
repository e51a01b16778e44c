from __future__ import annotations

import json
from pathlib import Path

from src.errors import ConfigError, DigestMismatchError
from src.model.ExperimentConfig import ExperimentConfig
from src.model.Spectrum import Spectrum
from src.model.StatisticSummary import StatisticSummary

CODE_VERSION = "1.0.0"


class ExperimentReport:
    """
    Outcome of a replicated experiment.

    The record form is JSON Lines: a header with the config, one line per test function, and a
    final timing line. Wall time lives only on the timing line and is ignored by equality, so two
    runs of one config compare equal.

    Attributes:
        config (ExperimentConfig): The experiment that produced the report.
        statistics (list[StatisticSummary]): One summary per test function, in config order.
        digest (str): Digest of the config.
        run_time (int | None): Wall time in microseconds.
        code_version (str): Version of the code that produced the report.
        samples (dict[str, list[float]]): Raw fluctuation samples by test function name; not part of
            the record.
        first_spectrum (Spectrum | None): Spectrum of replica 0, kept when spectra are dumped.
    """

    def __init__(
        self,
        config: ExperimentConfig,
        statistics: list[StatisticSummary],
        run_time: int = None,
        code_version: str = CODE_VERSION,
        samples: dict[str, list[float]] = None,
        digest: str = None,
        first_spectrum: Spectrum = None,
    ):
        self.config = config
        self.statistics = statistics
        self.digest = config.digest() if digest is None else digest
        self.run_time = run_time
        self.code_version = code_version
        self.samples = samples or {}
        self.first_spectrum = first_spectrum

    def statistic(self, name: str) -> StatisticSummary:
        for summary in self.statistics:
            if summary.name == name:
                return summary
        raise ConfigError(f"Report has no test function named '{name}'.")

    def check_comparable(self, other: ExperimentReport):
        if self.digest != other.digest:
            raise DigestMismatchError(
                f"Reports come from different configs: {self.digest[:12]} vs {other.digest[:12]}."
            )

    def to_records(self) -> list[str]:
        lines = [
            {
                "record": "header",
                "digest": self.digest,
                "code_version": self.code_version,
                "config": self.config.to_dict(),
            }
        ]
        lines += [{"record": "statistic", **summary.to_dict()} for summary in self.statistics]
        lines.append({"record": "timing", "wall_time_us": self.run_time})
        return [json.dumps(line, ensure_ascii=False) for line in lines]

    def save_records(self, file_name: str, directory: str = None) -> Path:
        """
        Append the report records to <directory>/<file_name>.jsonl.
        """

        directory = Path(self.config.output_directory if directory is None else directory)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / f"{file_name}.jsonl"

        with open(path, "a", encoding="utf-8") as file:
            for line in self.to_records():
                file.write(line + "\n")
        return path

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExperimentReport)
            and self.digest == other.digest
            and self.code_version == other.code_version
            and self.config == other.config
            and self.statistics == other.statistics
        )

    def __repr__(self) -> str:
        return f"ExperimentReport(digest={self.digest[:12]}, statistics={[s.name for s in self.statistics]})"

    @staticmethod
    def from_records(lines: list[str]) -> ExperimentReport:
        """
        Rebuild a report from its records. Blank lines are skipped.
        """

        records = [json.loads(line) for line in lines if line.strip()]
        if not records or records[0].get("record") != "header":
            raise ConfigError("Report records must start with a header line.")

        header = records[0]
        config = ExperimentConfig.from_dict(header["config"])
        if config.digest() != header["digest"]:
            raise DigestMismatchError("Report header digest does not match its config.")

        statistics, run_time = [], None
        for record in records[1:]:
            kind = record.pop("record", None)
            if kind == "statistic":
                statistics.append(StatisticSummary.from_dict(record))
            elif kind == "timing":
                run_time = record["wall_time_us"]
            else:
                raise ConfigError(f"Unknown report record kind {kind!r}.")

        return ExperimentReport(config, statistics, run_time, header["code_version"], digest=header["digest"])

    @staticmethod
    def from_file(path: str | Path) -> ExperimentReport:
        with open(path, "r", encoding="utf-8") as file:
            return ExperimentReport.from_records(file.readlines())
