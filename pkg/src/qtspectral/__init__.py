"""Quasi-twisted codes over finite fields: spectral structure and
minimum-distance bounds."""

from .errors import (FieldError, InternalCheckError, OracleBudgetError,
                     PoolSizeError, QTSpectralError, RecordScopeError)
from .galois import (FieldElement, FiniteField, RootSetup, field_of_order,
                     make_extension, make_prime_field, root_setup)
from .linalg import (INFINITY, Matrix, column_independence_number, kronecker,
                     min_distance_from_generator, min_distance_from_parity,
                     rank, right_kernel, row_space_equal)
from .polyring import (Factor, Factorization, Polynomial,
                       factor_xm_minus_lambda, minimal_code_generator,
                       primitive_idempotent, quotient_mul)
from .qtstruct import (Eigencode, Eigenvalue, GroebnerMatrix, QTCodeSpec,
                       Spectrum, analyze, chain_eigencode, constituents,
                       dimension, eigencode, groebner_matrix,
                       inverse_isomorphism, parity_check, random_qtcode,
                       scalar_generator_matrix, spectrum)
from .bounds import (BoundRecord, BoundReport, Caps, bch_records, compare_all,
                     exact_record, generalized_spectral_bound, ht_records,
                     jensen_bound, optimize_spectral, roos_records,
                     spectral_bound)

__version__ = "0.1.0"
