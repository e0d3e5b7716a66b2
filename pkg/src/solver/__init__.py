"""
gridbond exact solver: domination predicates, brute-force oracles and the
column-profile DP for total domination.
"""

from .vertex_set import (
    UNDEFINED, VertexSet, GammaResult, Enumeration,
    is_dominating, is_total_dominating, neighborhood_union,
    is_dominating_mask, is_total_dominating_mask
)
from .bruteforce import gamma_bruteforce, gamma_t_bruteforce, enumerate_min_tds
from .profile_dp import DpProfile, ProfileDP, gamma_t_dp
from .push_down import push_down

__all__ = [
    "UNDEFINED",
    "VertexSet",
    "GammaResult",
    "Enumeration",
    "is_dominating",
    "is_total_dominating",
    "neighborhood_union",
    "is_dominating_mask",
    "is_total_dominating_mask",
    "gamma_bruteforce",
    "gamma_t_bruteforce",
    "enumerate_min_tds",
    "DpProfile",
    "ProfileDP",
    "gamma_t_dp",
    "push_down",
]
