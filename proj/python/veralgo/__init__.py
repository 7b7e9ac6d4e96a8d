"""Contract-checked classic algorithms and containers.

Thin re-export of the compiled extension. Every operation accepts a
``mode`` keyword ("off", "assert" or "log"); a failing contract in assert
mode raises :class:`ContractViolation`.
"""

from veralgo._core import (
    ContractViolation,
    HashSet,
    MaxHeap,
    Rational,
    TreeSet,
    binary_search,
    div,
    find_euler_circuit,
    has_even_degrees,
    insertion_sort,
    is_acyclic,
    is_connected,
    is_euler_circuit,
    is_euler_trail,
    is_sorted,
    is_stable,
    is_top_sorting,
    power_dc,
    power_naive,
    precedes,
    stable_matching,
    teachers_placement,
    topsort,
)

__all__ = [
    "ContractViolation",
    "HashSet",
    "MaxHeap",
    "Rational",
    "TreeSet",
    "binary_search",
    "div",
    "find_euler_circuit",
    "has_even_degrees",
    "insertion_sort",
    "is_acyclic",
    "is_connected",
    "is_euler_circuit",
    "is_euler_trail",
    "is_sorted",
    "is_stable",
    "is_top_sorting",
    "power_dc",
    "power_naive",
    "precedes",
    "stable_matching",
    "teachers_placement",
    "topsort",
]
