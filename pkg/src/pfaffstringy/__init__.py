"""Exact stringy E-functions of Pfaffian varieties, their hyperplane cuts,
and the numerical side of Pfaffian double mirrors."""
from .errors import ParameterError, PoleError, SeriesSpecError, ZeroDenominatorError
from .hpd import (SectionSpec, case_consistency, classify_types, euler_gap, relation_check,
                  relation_rhs, rewritten_identity_check, section_dims, sod_predict)
from .pfaffian import (DiscrepancyKind, PfaffianSpec, discrepancy, stringy_pf_closed,
                       stringy_pf_strata, verify_key_lemma)
from .qalgebra import LaurentPoly, RatFunc, parse, render
from .qhypergeom import PhiParam, PhiSeriesSpec, eval_phi, verify_identity
from .qseries import QSymbolSpec, e_grassmannian, e_strata_pf, gauss_binomial, q_pochhammer
from .report import VerificationReport
from .sections import CutSpec, f_closed, f_recursive, l_iso, verify_abcd

__version__ = "0.1.0"
