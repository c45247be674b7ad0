from enum import Enum


class BettiMethod(Enum):
    RANK_ORACLE = "rank-oracle"
    HODGE = "hodge"
    DEGENERATE = "degenerate"
