"""Gaussian diamond relay networks: approximate FD/HD capacities, relay selection, lemma checks."""
__version__ = "0.1.0"

from ._kernels import BACKEND, backends
from .closed_forms import closed_form_hd, single_relay_hd, two_relay_hd
from .cuts import (CapExceeded, CutValue, cut_matrix, fd_capacity, fd_capacity_threshold,
                   fd_cut_value, hd_state_cut_value, masked_links)
from .network import (DiamondNetwork, NetworkError, from_channel_gains, gen_paper_example,
                      gen_random, gen_worst_case_family, load_network, subnetwork)
from .results import CapacityResult, Schedule
from .schedule_lp import (LPError, evaluate_schedule, hd_capacity, hd_capacity_fixed_schedule,
                          schedule_support)
from .simplify import (SelectionReport, best_k_fd, best_k_hd, half_half_single_relay,
                       sweep_family_ratios)
from .verify import (LemmaVerdict, check_fd_partition, check_lemma1, check_lemma2, check_lemma3,
                     check_lemma_chain, check_table1_row)

__all__ = [
    "BACKEND", "backends", "closed_form_hd", "single_relay_hd", "two_relay_hd", "CapExceeded",
    "CutValue", "cut_matrix", "fd_capacity", "fd_capacity_threshold", "fd_cut_value",
    "hd_state_cut_value", "masked_links", "DiamondNetwork", "NetworkError", "from_channel_gains",
    "gen_paper_example", "gen_random", "gen_worst_case_family", "load_network", "subnetwork",
    "CapacityResult", "Schedule", "LPError", "evaluate_schedule", "hd_capacity",
    "hd_capacity_fixed_schedule", "schedule_support", "SelectionReport", "best_k_fd", "best_k_hd",
    "half_half_single_relay", "sweep_family_ratios", "LemmaVerdict", "check_fd_partition",
    "check_lemma1", "check_lemma2", "check_lemma3", "check_lemma_chain", "check_table1_row",
]
