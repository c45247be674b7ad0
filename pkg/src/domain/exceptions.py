class LaplacianBoundsError(Exception):
    """Error base de la aplicación"""


class InputError(LaplacianBoundsError, ValueError):
    """Argumentos o ficheros de entrada inválidos"""


class ResourceLimitError(LaplacianBoundsError):
    """
    Se superó un límite de recursos configurado (caras, subconjuntos,
    búsqueda exhaustiva).
    """

    def __init__(self, message: str, quantity: str = "", value: int = 0, limit: int = 0):
        super().__init__(message)
        self.quantity = quantity
        self.value = value
        self.limit = limit


class NumericError(LaplacianBoundsError, ArithmeticError):
    """Fallo numérico: falta de convergencia o comprobación interna fallida"""
