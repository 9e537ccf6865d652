"""Identify large bipartite subgraphs with local switching and eigenvector methods."""

from .graph import (
    Bipartition,
    CutReport,
    Graph,
    connected_components,
    cut_report,
    ext_int_degrees,
    from_edge_list,
    is_connected,
    read_edge_list,
    remove_edge,
    two_color,
    write_edge_list,
)
from .kernels import BACKEND
from .oracle import OracleResult, max_cut_exact
from .partitioning import Method, MethodResult, eigen_sign_partition, local_switching, movement_routine
from .spectral import MatrixKind, build_matrix, extremal_vector, perron_vector, sym_eigen
from .bipartivity import (
    EdgeIndex,
    beta_new,
    beta_original,
    edge_beta,
    greedy_remove,
    phi_a_scores,
    phi_nl_scores,
)
from .generators import Model, sample_instance

__version__ = "0.1.0"
