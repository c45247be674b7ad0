import json
import logging
from pathlib import Path
from typing import Any, Dict, Tuple

import numpy as np


def _to_builtin(value: Any) -> Any:
    """Convierte escalares y arrays de numpy a tipos serializables"""
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    raise TypeError(f"Tipo no serializable: {type(value).__name__}")


class JsonReportWriter:
    """Serializa informes a JSON con un orden de claves estable"""

    def __init__(self, indent: int = 2):
        self.indent = indent
        self.logger = logging.getLogger(__name__)

    def dumps(self, report: Dict) -> str:
        return json.dumps(report, indent=self.indent, default=_to_builtin, ensure_ascii=False)

    def write(self, report: Dict, path: Path) -> Tuple[bool, str]:
        """
        Escribe el informe en path.
        Retorna una tupla (éxito, mensaje).
        """
        try:
            Path(path).write_text(self.dumps(report) + "\n", encoding='utf-8')
            self.logger.info(f"Informe guardado en {path}")
            return True, f"Informe guardado en {path}"
        except (OSError, TypeError) as e:
            self.logger.error(f"Error al guardar el informe: {str(e)}")
            return False, f"Error al guardar el informe: {str(e)}"
