from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..entities.graph import Graph
from ..value_objects.weight_function import WeightFunction

PathLike = Union[str, Path]


class GraphRepository(ABC):
    """
    Interfaz abstracta para leer y escribir grafos, funciones de pesos y
    matrices. Permite distintas implementaciones de formato.
    """

    @abstractmethod
    def load_graph(self, path: PathLike) -> Graph:
        """
        Lee un grafo.

        Args:
            path: Ruta del fichero

        Returns:
            Graph: El grafo leído

        Raises:
            InputError: si el fichero no existe o está mal formado
        """
        pass

    @abstractmethod
    def save_graph(self, graph: Graph, path: PathLike, header: Optional[str] = None) -> bool:
        """
        Escribe un grafo.

        Args:
            graph: Grafo a guardar
            path: Ruta de destino
            header: Comentario opcional para la cabecera

        Returns:
            bool: True si la operación fue exitosa, False en caso contrario
        """
        pass

    @abstractmethod
    def load_weights(self, path: PathLike, n: int) -> WeightFunction:
        """
        Lee una función de pesos para un grafo de n vértices.
        Los vértices que no aparecen reciben peso 1.
        """
        pass

    @abstractmethod
    def save_weights(self, weights: WeightFunction, path: PathLike) -> bool:
        """Escribe una función de pesos, una línea por vértice"""
        pass

    @abstractmethod
    def load_matrix(self, path: PathLike) -> np.ndarray:
        """Lee una matriz densa"""
        pass

    @abstractmethod
    def format_matrix(self, matrix: np.ndarray) -> str:
        """Representación textual de una matriz en el formato del repositorio"""
        pass

    def save_matrix(self, matrix: np.ndarray, path: PathLike) -> bool:
        """
        Escribe una matriz densa.

        Returns:
            bool: True si la operación fue exitosa, False en caso contrario
        """
        try:
            Path(path).write_text(self.format_matrix(matrix), encoding='utf-8')
            return True
        except OSError:
            return False
