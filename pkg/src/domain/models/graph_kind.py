from enum import Enum


class GraphKind(Enum):
    MATCHING = "matching"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EMPTY = "empty"
    RANDOM = "random"
