"""Sparse adjacency-matrix simulator for cellular automata and related dynamical systems.

States evolve as x' = f(A x) with A a compressed-row matrix built from a
stencil or a random wiring, and f a lookup table or an elementwise map.
"""

from ._adjdyn import (
    DynamicalSystem,
    Error,
    ReadoutModel,
    Rule,
    SparseMatrix,
    apply_rule,
    blinker_state,
    coupled_map_lattice,
    detect_cycle,
    echo_state_network,
    elementary_ca,
    elementary_rule,
    game_of_life,
    game_of_life_rule,
    generate_ca_1d,
    generate_ca_2d,
    generate_random_digraph,
    glider_state,
    is_symmetric,
    life_like_rule,
    logistic_map,
    pattern_weights,
    pca_project,
    random_binary_state,
    random_boolean_network,
    random_boolean_tables,
    random_uniform_state,
    read_matrix_market,
    read_states,
    render_text,
    spectral_radius,
    tanh_map,
    train_linear_readout,
    write_matrix_market,
    write_states,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
