"""Deterministic partition-theoretic models of the primes."""

from .almost_prime import SemiprimeCounter, build_semiprime_counter, count_k_almost, count_semiprimes
from .divisor import DivisorTable, build_divisor_table, ceil_half_divisor_prefix, divisor_count, divisor_summatory
from .models import (
    FULL_CONSTANTS,
    PRINTED_CONSTANTS,
    Constants,
    FloorVariant,
    ModelContext,
    ModelParams,
    ModelSequence,
    PrimeSource,
    Variant,
    epsilon,
    floor_star,
    model_pi,
    model_prime,
    model_sequence_up_to,
    modified_floor,
    pnt_baseline,
)
from .partitions import Partition, norm, partition_from_integer, supernorm
from .sieve import PrimeTable, build_sieve, nth_prime, prime_pi

__version__ = "0.1.0"
