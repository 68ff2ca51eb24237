"""Support tau-tilting theory over blocks of modular group algebras.

Layers, bottom up:

- ``field``: exact arithmetic and linear algebra over F_{p^m}
- ``algebra``: finite dimensional algebras, modules, homological operators
- ``tilting``: support tau-tilting pairs, bricks, silting, mutation graphs
- ``grouprep``: permutation groups, group algebras, blocks, induction
- ``clifford``: transport of tilting data along index-prime-to-p covers
- ``catalog`` / ``cli``: named group pairs and the command line front end
"""

from .field import Field, NoSolution
from .algebra import (Algebra, AMod, ModMap, FieldNotSplitting, NotSymmetric,
                      ZeroModule, decompose, direct_sum, dual_module, ext1_dim,
                      hom_basis, hom_dim, is_iso, minimal_presentation,
                      module_from_action, projective_cover, quotient_module,
                      radical_mod, s_count, simples_and_pims, submodule,
                      syzygy, tau, tau_inv, top_mod, zero_module)
from .tilting import (Brick, HasseQuiver, Semibrick, STiltPair, TwoSMC,
                      TwoTermComplex, brick_label, dual_pair, enumerate_hasse,
                      g_vector, in_fac, in_sub, in_torsion_closure,
                      is_support_tau_tilting, is_tau_rigid,
                      is_two_term_presilting, left_mutation, left_semibrick,
                      right_semibrick, two_smc, two_term_silting,
                      validate_two_smc)
from .grouprep import (BlockIdem, GroupAlgebraHandle, KGMod, NotNormal,
                       NotSubgroup, PermGroup, block_cut,
                       central_primitive_idempotents, conjugate_module,
                       coset_representatives, covers, direct_product,
                       group_handle, induce, inertia_of_block, kg_from_amod,
                       lift_block_module, mackey_check, perm_from_cycles,
                       principal_block, restrict, seed_radical_from_normal,
                       tensor_modules, trivial_module)
from .clifford import (CoveringPair, ExtensionFamily, FieldTooSmall,
                       HypothesisFailed, UnsupportedQuotient,
                       check_hypotheses, counting_check, dual_kg,
                       extending_modules, extension_count_e, ind_brick_image,
                       ind_module, ind_semibrick, ind_stau, is_stable,
                       pim_transport, property_suite, quotient_regular_module,
                       stability_propagates, verify_hasse_embedding,
                       verify_squares)
from .catalog import CATALOG, ENTRIES, CatalogEntry, build

__all__ = [
    "Field", "NoSolution",
    "Algebra", "AMod", "ModMap", "FieldNotSplitting", "NotSymmetric",
    "ZeroModule", "decompose", "direct_sum", "dual_module", "ext1_dim",
    "hom_basis", "hom_dim", "is_iso", "minimal_presentation",
    "module_from_action", "projective_cover", "quotient_module",
    "radical_mod", "s_count", "simples_and_pims", "submodule", "syzygy",
    "tau", "tau_inv", "top_mod", "zero_module",
    "Brick", "HasseQuiver", "Semibrick", "STiltPair", "TwoSMC",
    "TwoTermComplex", "brick_label", "dual_pair", "enumerate_hasse",
    "g_vector", "in_fac", "in_sub", "in_torsion_closure",
    "is_support_tau_tilting", "is_tau_rigid", "is_two_term_presilting",
    "left_mutation", "left_semibrick", "right_semibrick", "two_smc",
    "two_term_silting", "validate_two_smc",
    "BlockIdem", "GroupAlgebraHandle", "KGMod", "NotNormal", "NotSubgroup",
    "PermGroup", "block_cut", "central_primitive_idempotents",
    "conjugate_module", "coset_representatives", "covers", "direct_product",
    "group_handle", "induce", "inertia_of_block", "kg_from_amod",
    "lift_block_module", "mackey_check", "perm_from_cycles",
    "principal_block", "restrict", "seed_radical_from_normal",
    "tensor_modules", "trivial_module",
    "CoveringPair", "ExtensionFamily", "FieldTooSmall", "HypothesisFailed",
    "UnsupportedQuotient", "check_hypotheses", "counting_check", "dual_kg",
    "extending_modules", "extension_count_e", "ind_brick_image", "ind_module",
    "ind_semibrick", "ind_stau", "is_stable", "pim_transport",
    "property_suite", "quotient_regular_module", "stability_propagates",
    "verify_hasse_embedding", "verify_squares",
    "CATALOG", "ENTRIES", "CatalogEntry", "build",
]
