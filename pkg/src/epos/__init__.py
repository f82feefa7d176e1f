"""Exact chromatic symmetric functions in the elementary basis, with
machine-checked e-positivity certificates for spiders with legs (4m+2, 2m, 1).
"""

from .compositions import (
    EQUAL,
    GREATER,
    LESS,
    Composition,
    Partition,
    alpha_compare,
    compositions_min2,
    compositions_path_support,
    first_odd,
    format_composition,
    last_odd,
    parse_composition,
    rotate_longest_odd_prefix,
    rotate_longest_odd_suffix,
    surplus,
    tail_even_length,
    underlying_partition,
    weight,
    weight_prime,
)
from .decomposition import (
    Triple,
    VerifyResult,
    b2_pair_sum,
    b_coeff,
    classify,
    classify_triples,
    f_poly,
    g_coeff,
    g_pos_sum,
    membership,
    s_membership,
    triple_space,
    verify_lemma_t1234,
    verify_lemma_x0,
    verify_lemma_y,
    w_fun,
    x0_fun,
    x1_fun,
    x2_fun,
    y_fun,
)
from .efun import (
    EFunction,
    add,
    e_term,
    from_json_dict,
    is_e_positive,
    mul,
    negative_terms,
    p_partition_to_e,
    p_to_e,
    scale,
    to_json_dict,
)
from .expansions import path_csf_e, spider4m_csf, spider_csf_e
from .graph_oracle import Graph, csf_subset_expansion, parse_graph_file, path_graph, spider_graph
from .injections import (
    CertGroup,
    Certificate,
    c1,
    c2,
    c3,
    c4,
    certify,
    invert_phi1,
    invert_phi2,
    invert_phi3,
    invert_phi41,
    invert_phi42,
    phi1,
    phi2,
    phi3,
    phi4,
    phi41,
    phi41_bar_qlo,
    phi42,
    phi4_variant,
    u_rotation,
    verify_disjointness,
    verify_injections,
)

__version__ = "0.1.0"
