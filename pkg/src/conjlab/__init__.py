"""conjlab: conjugacy class sizes of finite groups given by generators,
the divisibility-cover digraph on those sizes, the SP/CH/CA/F group
classes, and classification of SP groups into structural types."""

from .classgraph import (ClassSizeSet, CoverDigraph, build_gamma, class_size_set,
                         export, gamma_of_group, is_primitive, n_set)
from .classifier import (FrobeniusStructure, SPClassification, Verdict,
                         check_corollary1, classify, find_frobenius_structure)
from .errors import (CapExceeded, ConjlabError, ConstructionError,
                     InternalCheckError, SpecFileError)
from .families import (FamilyRequest, agl1, alternating_group, build_family,
                       cyclic_group, dihedral_group, direct_product,
                       elementary_abelian_group, gl2, heisenberg,
                       quaternion_group, remark_group, sl2, standard_group,
                       symmetric_group, to_permutation, type3_frobenius)
from .gf import Field, make_field
from .groups import (DEFAULT_MAX_ORDER, ConjugacyClass, FiniteGroup, MatrixRep,
                     PermutationRep, QuotientRep, Subgroup)
from .predicates import (PredicateReport, evaluate, is_ca, is_ch, is_f, is_sp,
                         rank)
from .specio import (analysis_report, group_spec_dict, load_group_spec,
                     parse_group_spec, write_group_spec)
from .verify import (CorpusEntry, SuiteReport, default_corpus,
                     expected_N_linear, load_corpus_dir, run_all,
                     run_corollary_suite, run_lemma_invariants,
                     run_schur_cover_check, run_theorem1_suite,
                     run_theorem2_suite)

__version__ = "0.1.0"
