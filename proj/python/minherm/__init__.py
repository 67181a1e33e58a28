"""Supports of minimal hermitian matrices.

Thin wrapper over the C++ core: moment algebra, support certificates, the
adequacy of a pair of orthogonal subspaces by Riemannian descent, an
independent convex-distance oracle, rank-one critical point analysis and
block/perturbation constructions.
"""

from ._minherm import (  # noqa: F401
    Appendix,
    AdequacyResult,
    CampaignStats,
    CharacterizationReport,
    ComposedSupport,
    DensityPoint,
    DescentConfig,
    F,
    Fixture,
    FwOptions,
    FwResult,
    MembershipResult,
    MinhermError,
    OrthoPair,
    RankOneCritical,
    SpherePoint,
    SupportCertificate,
    SweepSample,
    appendix_fixture,
    block_compose,
    build_minimal,
    critical_residual,
    delta_diag,
    descend,
    dominant_eigenvector,
    fw_distance,
    gradient,
    hadamard_square,
    hessian_quadratic,
    interior_campaign,
    lift_rank_one,
    moment_body_membership,
    normalize_witness,
    orthogonalize_same_moment,
    rank_one_defect,
    spectral_norm,
    support_certificate,
    sweep_curve,
    validate_pair,
    verify_characterization,
)

__all__ = [name for name in dir() if not name.startswith("_")]
