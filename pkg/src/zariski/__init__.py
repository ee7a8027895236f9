"""Executable constructions for Zariski-type topologies on groups.

Submodules:

* ``perm``     -- finitely supported permutations of N, partial bijections;
* ``words``    -- group/semigroup words, evaluation, degree-3 reduction;
* ``ragged``   -- ragged matrix pairs, basic open sets, normal forms;
* ``witness``  -- hyperconnectedness witnesses via partial-bijection extension;
* ``sepgroup`` -- the countable abelian group separating bounded Zariski
  topologies, with exact normal-form arithmetic and solvers;
* ``symtop``   -- constructive symmetric-group lemmas (stabilizers,
  maximal-subsemigroup decomposition);
* ``finite``   -- exhaustive oracles on small finite groups;
* ``cli``      -- seeded, reproducible experiment runner.

The hot permutation kernels run from a compiled extension when available;
``zariski.backend_name()`` reports which implementation is active.
"""

from zariski._backend import backend_name

__version__ = "0.1.0"

__all__ = ["backend_name", "__version__"]
