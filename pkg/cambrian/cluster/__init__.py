from cambrian.cluster.exchange import (
    ExchangeGraphSlice,
    ExchangeMatrix,
    ExtendedExchangeMatrix,
    Seed,
    exchange_graph,
    mutate_seed,
    principal_seed,
    validate,
)
from cambrian.cluster.laurent import LaurentPolynomial, LaurentRing

__all__ = [
    "ExchangeMatrix",
    "ExtendedExchangeMatrix",
    "Seed",
    "ExchangeGraphSlice",
    "validate",
    "principal_seed",
    "mutate_seed",
    "exchange_graph",
    "LaurentRing",
    "LaurentPolynomial",
]
