"""Minyatur kaba kuvvet oracle'i."""

from .miniature import Miniature, generate_miniature, designated_pattern, repeated_letter_miniature
from .bruteforce import (
    finite_reduce_oracle, BruteOccurrence, occ_bruteforce, DisjointSet, end_equivalent,
    occurrence_classes, classes_bruteforce, disjoint_or_equivalent_violations,
    repeat_word, star_bruteforce,
)
from .runner import (
    TrialResult, OracleReport, compare_miniature, run_trial, run_oracle,
    ReduceReport, exhaustive_reduce_check,
)

__all__ = [
    'Miniature', 'generate_miniature', 'designated_pattern', 'repeated_letter_miniature',
    'finite_reduce_oracle', 'BruteOccurrence', 'occ_bruteforce', 'DisjointSet', 'end_equivalent',
    'occurrence_classes', 'classes_bruteforce', 'disjoint_or_equivalent_violations',
    'repeat_word', 'star_bruteforce',
    'TrialResult', 'OracleReport', 'compare_miniature', 'run_trial', 'run_oracle',
    'ReduceReport', 'exhaustive_reduce_check',
]
