"""mechlin: exact-first linear algebra with a numeric wing.

Exact scalars (rationals, Gaussian rationals, polynomials, rational
functions, noncommutative symbols) drive the factoring, determinant,
companion-matrix, and parametric-elimination layers; a double-precision
layer supplies QR eigenvalues, Jacobi SVD, and conditioning.  The same
operations are exposed as a CLI (`mechlin`) and a JSON service.
"""

from .errors import (
    ConstructionError,
    DivisionByZero,
    InvalidArgument,
    MechlinError,
    NoValidOption,
    NonConvergence,
    NonlinearError,
    NotFound,
    NotPositiveDefinite,
    NotSkewSymmetric,
    ParseError,
    RankDeficient,
    ShapeMismatch,
    Singular,
    SingularBlock,
    VariableMismatch,
    ZeroPivot,
)
from .scalars import GaussianRational, gaussian_sqrt, is_zero, parse_gaussian, rational_sqrt
from .polys import Poly, RatFunc, parse_poly, poly_gcd, poly_str
from .ncexpr import NCExpr, nc_normalize, nc_sym
from .symexpr import SymExpr
from .matrix import Matrix, block_join, block_split, hstack, matmul, sym_matrix, vstack
from .eqparse import LinearSystem, parse_system, render_system
from .factor import (
    LDLTFactors,
    PLUFactors,
    QRFactors,
    SolveResult,
    TuringFactors,
    block_lu_2x2,
    cholesky,
    inverse,
    ldlt,
    lstsq,
    lu_no_pivot_feasible,
    plu,
    project_colspace,
    qr,
    rank,
    rref,
    schur_complement,
    solve,
    solve_square,
    turing,
)
from .determinant import (
    cramer_solve,
    det,
    det2x2,
    det_laplace,
    det_schur,
    det_turing,
    inv2x2,
    inverse_exact,
    symbolic_det_termcount,
)
from .companion import (
    CompanionResult,
    EigExact,
    charpoly,
    colleague_chebyshev,
    companion_pencil,
    eig_exact_small,
    frobenius_companion,
    height,
    is_nonderogatory,
    mandelbrot_companion,
    mandelbrot_poly,
    min_height_companion_search,
    minpoly,
    pencil_charpoly,
)
from .numeric import (
    EigResult,
    SVDResult,
    backward_error_eig,
    condition_number,
    eig_condition,
    eig_qr,
    gallery3_sensitivity,
    hessenberg,
    svd_jacobi,
)
from .parametric import (
    CaseTree,
    Condition,
    Leaf,
    ParamMatrix,
    parametric_det,
    parametric_rref,
    specialize,
    specialize_leaf,
)
from .generators import cayley, exam_unimodular_question, gallery3, generate
from .api import mc_floor_answer

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
