"""Right-censored survival data: ingestion, schema binding and validation.

A :class:`Dataset` stores observed times, 0/1 event indicators, one continuous
exposure column and any number of confounder columns. Storage is columnar
(numpy arrays) so resampling and design-matrix construction stay cheap; the
row-wise :class:`SubjectRecord` view is materialized on demand.

Validation never raises for content problems: :func:`validate` returns either
the dataset unchanged or the full list of violations with row indices, so a
caller can report everything at once.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyDataset, MissingColumn, ParseError


@dataclass(frozen=True)
class SubjectRecord:
    time: float
    status: int
    exposure: float
    confounders: tuple


@dataclass(frozen=True)
class Violation:
    code: str
    row: int | None
    field: str | None
    message: str

    def __str__(self):
        where = "" if self.row is None else f" (row {self.row})"
        return f"{self.code}{where}: {self.message}"


class Dataset:
    """Columnar container for right-censored survival data.

    Immutable after construction; safe to share across threads. Construction
    is permissive (invalid content is representable so that :func:`validate`
    can report on it); shape mismatches are still rejected outright.
    """

    def __init__(self, times, status, exposure, confounders, exposure_name, confounder_names):
        times = np.asarray(times, dtype=float)
        status = np.asarray(status, dtype=int)
        exposure = np.asarray(exposure, dtype=float)
        confounders = np.asarray(confounders, dtype=float)
        if confounders.size == 0:
            confounders = confounders.reshape(len(times), 0)
        if confounders.ndim != 2:
            raise ValueError("confounders must be a 2-d array (n rows x arity)")
        n = len(times)
        if not (len(status) == len(exposure) == confounders.shape[0] == n):
            raise ValueError("all columns must have the same number of rows")
        if confounders.shape[1] != len(confounder_names):
            raise ValueError("confounder_names must match the confounder arity")
        self.times = times
        self.status = status
        self.exposure = exposure
        self.confounders = confounders
        self.exposure_name = str(exposure_name)
        self.confounder_names = tuple(str(c) for c in confounder_names)
        for a in (self.times, self.status, self.exposure, self.confounders):
            a.setflags(write=False)

    @property
    def n(self):
        return len(self.times)

    @property
    def variable_names(self):
        """Exposure first, confounders after, in schema order."""
        return (self.exposure_name,) + self.confounder_names

    @property
    def variable_matrix(self):
        """(n, 1 + arity) matrix of raw variable values in ``variable_names`` order."""
        return np.column_stack([self.exposure, self.confounders])

    @property
    def records(self):
        return [
            SubjectRecord(float(t), int(s), float(z), tuple(float(v) for v in x))
            for t, s, z, x in zip(self.times, self.status, self.exposure, self.confounders)
        ]

    def take(self, indices):
        """Row subset/resample (used by bootstrap and stratified estimators)."""
        idx = np.asarray(indices, dtype=int)
        return Dataset(
            self.times[idx],
            self.status[idx],
            self.exposure[idx],
            self.confounders[idx],
            self.exposure_name,
            self.confounder_names,
        )

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self.exposure_name == other.exposure_name
            and self.confounder_names == other.confounder_names
            and np.array_equal(self.times, other.times)
            and np.array_equal(self.status, other.status)
            and np.array_equal(self.exposure, other.exposure)
            and np.array_equal(self.confounders, other.confounders)
        )


def from_records(records, exposure_name="exposure", confounder_names=()):
    return Dataset(
        [r.time for r in records],
        [r.status for r in records],
        [r.exposure for r in records],
        np.asarray([r.confounders for r in records], dtype=float).reshape(len(records), -1),
        exposure_name,
        confounder_names,
    )


def _parse_float(text, row, column):
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise ParseError(row, column, f"cannot parse {text!r} as a number") from None
    if not math.isfinite(value):
        raise ParseError(row, column, f"non-finite value {text!r}")
    return value


def load_csv(path, time, status, exposure, confounders=()):
    """Read a dataset from a headered CSV file under the given column bindings.

    Parameters
    ----------
    path : str or Path
        CSV file with a header row, comma delimiter, ``.`` decimal separator.
    time, status, exposure : str
        Column names for the observed time, the 0/1 event indicator and the
        continuous exposure.
    confounders : sequence of str
        Column names for the confounder vector (may be empty).

    Row order is preserved. Status must be literally ``0`` or ``1``; any other
    encoding (TRUE/FALSE, labels) is rejected so that ingestion stays
    bit-exact. Missing or non-finite values are a hard error.
    """
    confounders = tuple(confounders)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in (time, status, exposure, *confounders):
            if col not in header:
                raise MissingColumn(col)
        times, events, expo, conf = [], [], [], []
        for i, row in enumerate(reader):
            t = _parse_float(row.get(time), i, time)
            if t <= 0:
                raise ParseError(i, time, f"time must be positive, got {t}")
            raw_status = (row.get(status) or "").strip()
            if raw_status not in ("0", "1"):
                raise ParseError(i, status, f"status must be 0 or 1, got {raw_status!r}")
            times.append(t)
            events.append(int(raw_status))
            expo.append(_parse_float(row.get(exposure), i, exposure))
            conf.append([_parse_float(row.get(c), i, c) for c in confounders])
    if not times:
        raise EmptyDataset(f"{path}: no data rows")
    return Dataset(
        times,
        events,
        expo,
        np.asarray(conf, dtype=float).reshape(len(times), -1),
        exposure,
        confounders,
    )


def write_csv(dataset, path):
    """Write a dataset back out with the same dialect ``load_csv`` reads.

    Floats are written with ``repr`` (shortest round-trip text), so
    ``load_csv(write_csv(d))`` reproduces ``d`` exactly.
    """
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["time", "status", dataset.exposure_name, *dataset.confounder_names])
        for t, s, z, x in zip(dataset.times, dataset.status, dataset.exposure, dataset.confounders):
            writer.writerow([repr(float(t)), int(s), repr(float(z))] + [repr(float(v)) for v in x])


def validate(dataset):
    """Check every dataset invariant; report, never raise.

    Returns the dataset unchanged when everything holds, otherwise the full
    list of :class:`Violation` entries. Idempotent and side-effect free.
    """
    v = []
    if dataset.n < 2:
        v.append(Violation("TooFewRecords", None, None, f"need at least 2 records, got {dataset.n}"))
    for i in range(dataset.n):
        t = dataset.times[i]
        if not np.isfinite(t):
            v.append(Violation("NonFinite", i, "time", f"time is {t}"))
        elif t <= 0:
            v.append(Violation("NonPositiveTime", i, "time", f"time is {t}"))
        if dataset.status[i] not in (0, 1):
            v.append(Violation("BadStatus", i, "status", f"status is {dataset.status[i]}"))
        if not np.isfinite(dataset.exposure[i]):
            v.append(Violation("NonFinite", i, dataset.exposure_name, "exposure is not finite"))
        for j, name in enumerate(dataset.confounder_names):
            if not np.isfinite(dataset.confounders[i, j]):
                v.append(Violation("NonFinite", i, name, f"{name} is not finite"))
    if dataset.n and not np.any(dataset.status == 1):
        v.append(Violation("AllCensored", None, None, "no events in the dataset"))
    finite = dataset.exposure[np.isfinite(dataset.exposure)]
    if dataset.n and np.unique(finite).size < 2:
        v.append(Violation("ConstantExposure", None, dataset.exposure_name,
                           "exposure takes fewer than 2 distinct values"))
    return dataset if not v else v
