"""Local limits of 231- and 321-avoiding permutations."""

from ._permlocal import (
    Permutation,
    RootedPermutation,
    __version__,
    avoids,
    btree_to_perm,
    c_occ,
    c_occ_proportion,
    e_plus,
    enumerate_class,
    inverse,
    limit231_window,
    limit321_window,
    local_distance,
    lr_maxima,
    otree_to_perm,
    p231,
    p321,
    pat,
    pat_interval,
    perm_to_btree,
    perm_to_otree,
    restrict,
    rl_maxima,
    run_convergence,
    symbolic_pat_j,
    uniform_av231,
    uniform_av321,
    verify_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
