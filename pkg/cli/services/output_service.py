"""
Lectura de entradas JSON y escritura de reportes JSON / CSV.
"""
import csv
import io
import json
import logging
import math
from pathlib import Path

import numpy as np

from core.utils.constants import INF_TOKEN
from core.utils.exceptions import InvalidInstanceError

logger = logging.getLogger(__name__)


class OutputService:

    @classmethod
    def clean(cls, value):
        """Tipos de numpy a Python, tuplas a listas e infinito a "inf"."""
        if isinstance(value, dict):
            return {str(key): cls.clean(item) for key, item in value.items()}
        if isinstance(value, (list, tuple, np.ndarray)):
            return [cls.clean(item) for item in value]
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, (float, np.floating)):
            value = float(value)
            if math.isinf(value) and value > 0:
                return INF_TOKEN
            return value
        return value

    @classmethod
    def dumps(cls, data):
        return json.dumps(cls.clean(data), sort_keys=True, indent=2, allow_nan=False) + '\n'

    @staticmethod
    def csv_text(columns, rows):
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({
                key: '' if value is None else INF_TOKEN if value == math.inf else value
                for key, value in row.items()
            })
        return buffer.getvalue()

    @staticmethod
    def load_json(path):
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as exc:
            raise InvalidInstanceError("Cannot read input file", path=str(path), reason=exc.strerror)
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInstanceError(
                "Malformed JSON", path=str(path), line=exc.lineno, column=exc.colno, reason=exc.msg,
            )

    @staticmethod
    def write(text, output=None, stream=None):
        """Escribe en `output` si se indicó, si no en `stream`."""
        if output:
            Path(output).write_text(text, encoding='utf-8')
            logger.info("Report written to %s", output)
        else:
            stream.write(text, ending='')
