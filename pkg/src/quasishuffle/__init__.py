"""Quasi-shuffle Hopf algebras over graded alphabets, computed exactly."""
from .algebra import (Element, FCoeffs, LyndonExpression, exp_map, log_map, lyndon_express,
                      psi, quasi_shuffle, shuffle)
from .alphabets import (QSYM, ConfigAlphabet, EulerAlphabet, PartitionAlphabet, QSymAlphabet,
                        TruncAlphabet, make_alphabet, parse_alphabet_config)
from .dual import (DualElement, antipode_star, concat_product, dual_coproduct, exp_star,
                   is_primitive, lie_bracket, log_star, pairing)
from .euler import hat_word, pi_r, pi_r_star
from .expr import from_json, parse_element, parse_expression, parse_word, to_json
from .hopf import TensorElement, antipode, coproduct, counit, deshuffle, hopf_check
from .qdeform import (delta_q, phi_matrix, phi_q, phi_q_inverse, q_shuffle,
                      varchenko_det)
from .qsym import QSymElement, basis_convert, qsym_antipode, qsym_coproduct, qsym_product
from .scalars import CycloNum, RatMatrix, TruncSeries, mat_det, mat_rank, mat_solve
from .series import MultiPoly, euler_sum_numeric, injectivity_rank, phi_n, psi_r_subst
from .words import (Alphabet, Letter, act, compositions, is_lyndon, lyndon_count,
                    lyndon_factorization, lyndon_words, validate_alphabet, words_of_degree)

__all__ = [name for name in dir() if not name.startswith("_")]
