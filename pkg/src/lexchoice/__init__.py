"""Lexicographic multicriteria choice.

A lexicographic preference relation over alternatives, an exact integer
weighted-sum convolution that induces the same order, Pareto-kernel
extraction, and a positional word-key encoder for dictionary ordering.
"""

from .convolution import (AffirmationReport, AgreementReport, ConvolutionValue,
                          DegenerateCriterionError, LexCoefficients, best_by_convolution,
                          check_affirmation1, convolve, lex_coefficients, quantize, ration,
                          scale_diapason, verify_agreement)
from .core_types import (Alternative, DecisionProblem, MalformedInputError, ScaleSpec,
                         Violation, validate_problem)
from .kernels import BACKEND
from .lex_relation import (AxiomReport, ComparisonOutcome, Verdict, check_order_axioms,
                           compare_lex, pareto_kernel, signed_degree_matrix, sort_lex,
                           superiority_degree)
from .lexicon import (AlphabetSpec, LexiconError, UnknownSymbolError, WordKey, WordTooLongError,
                      encode_word, position_weights, sort_lexicon)

__version__ = "0.1.0"
