"""Arithmetic filtrations and diagonals of formal languages."""

from ._langfilter import (
    BudgetError,
    Dfa,
    InputError,
    IoError,
    Nfa,
    build_diag_nfa,
    build_filtered_dfa,
    determinize,
    diag_oracle_accepts,
    diag_word,
    enumerate_accepted,
    enumerate_distinct_filtrations,
    equivalent,
    filter_word,
    filtered_language_oracle,
    in_0n1n,
    in_thm2,
    in_thm5,
    minimize,
    shortest_word_length,
    thm2_words,
    verify,
)

__all__ = [
    "BudgetError",
    "Dfa",
    "InputError",
    "IoError",
    "Nfa",
    "build_diag_nfa",
    "build_filtered_dfa",
    "determinize",
    "diag_oracle_accepts",
    "diag_word",
    "enumerate_accepted",
    "enumerate_distinct_filtrations",
    "equivalent",
    "filter_word",
    "filtered_language_oracle",
    "in_0n1n",
    "in_thm2",
    "in_thm5",
    "minimize",
    "shortest_word_length",
    "thm2_words",
    "verify",
]
