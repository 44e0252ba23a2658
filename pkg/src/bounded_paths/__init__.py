"""Exact enumeration of height-bounded excursions and meanders.

For a finite step set with formal weights, the generating function of
excursions of height at most ``k`` is ``F_k / F_{k+1}`` and that of meanders
ending at height ``l`` is ``F_{k,l} / F_{k+1}``.  This package computes these
polynomials exactly, by band determinants and by transfer matrices, derives
their rational generating functions in ``k``, and checks every identity
against brute-force path counts.
"""

from __future__ import annotations

from .errors import (
    BoundedPathsError,
    DegreeMismatch,
    IdentityFailed,
    IndexOutOfRange,
    InvalidModel,
    LeadingTermMismatch,
    NonUnitConstantTerm,
    NotDivisible,
    NotSymmetric,
    OrderTooLarge,
    ParseError,
    TailNotZero,
)
from .linalg import PolyMatrix, cofactor, det, det_expand
from .meander import (
    D_tilde_and_N_tilde,
    Fkl_by_cofactor,
    Fkl_column,
    build_meander_system,
    iterate_Fkl,
    meander_sums,
)
from .model import StepModel, one_minus_A, parse_steps, sym_band
from .oracle import dp_count, iperm_sums, verify_series
from .ring import MPoly, TruncatedSeries, parse, rational_series, reduce_fraction, univariate_gcd_in
from .symmetric import sym_F, sym_Fkl, sym_meander_identities, sym_meander_sum, sym_numerators
from .transfer import D_of_z, F_sequence, N_of_z, SubsetIndex, TransferMatrix, build_T, iterate_F

__version__ = "0.1.0"
