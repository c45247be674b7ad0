from enum import Enum


class BoundDirection(Enum):
    """
    Sentido de una cota: LOWER exige actual >= cota, UPPER exige actual <= cota
    y EQUAL exige igualdad (identidades algebraicas).
    """
    LOWER = "lower"
    UPPER = "upper"
    EQUAL = "equal"
