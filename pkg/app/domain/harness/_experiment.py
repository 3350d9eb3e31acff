"""Prediction vs. construction vs. solver on one augmentation instance."""

from loguru import logger

from app.app_config import get_app_environ_config
from app.domain.constructions import augment_and_label, parity_failure
from app.domain.graph import chromatic_number_exact, pendant_vertices
from app.domain.labeling import extract_profile, require_local_antimagic
from app.domain.solver import certify, solve_chi_la
from app.domain.utils.fingerprint import instance_hash
from app.schemas import ColorProfile, EdgeLabeling, ExperimentReport, Graph

from ._dispatch import predict
from ._preconditions import require_class
from .harness_models import FamilyCheck


def _base_is_star(g: Graph) -> bool:
    return len(pendant_vertices(g)) == g.vertex_count - 1


def run_experiment(
    g: Graph,
    f: EdgeLabeling,
    i: int,
    s: int,
    use_solver: bool = False,
    edge_limit: int | None = None,
    jobs: int | None = None,
) -> ExperimentReport:
    """Predict, build G(V_i, s) with its extended labeling, certify, and optionally solve.

    The construction is skipped when the parity rule fails. The solver only runs when
    the augmented graph fits the edge limit.
    """
    require_local_antimagic(g, f, what="base labeling")
    profile = extract_profile(g, f)
    require_class(profile, i, 1, profile.t, "Augmented")
    predicted = predict(profile, i, s, base_is_star=_base_is_star(g))

    constructed_count = constructed_valid = None
    certified_value = solver_value = None
    if parity_failure(profile.class_size(i), s) is None:
        construction = augment_and_label(g, f, i, s)
        constructed_valid = construction.valid
        if construction.valid:
            constructed_count = construction.color_count
            certificate = certify(construction.graph, construction.labeling)
            if certificate is not None:
                certified_value = certificate.chi_la

            limit = get_app_environ_config().LA_EDGE_LIMIT if edge_limit is None else edge_limit
            if use_solver and construction.graph.edge_count <= limit:
                solver_value = solve_chi_la(construction.graph, edge_limit=limit, jobs=jobs).chi_la
    else:
        logger.info("Parity rule fails for class {} with s={}; no construction run", i, s)

    consistent = ExperimentReport.judge(
        predicted,
        constructed_count,
        solver_value,
        certified_value=certified_value,
        constructed_valid=constructed_valid,
    )
    if not consistent:
        logger.warning("Inconsistent experiment on {} (i={}, s={}): {}", g.describe(), i, s, predicted)

    return ExperimentReport(
        instance=g.describe(),
        instance_hash=instance_hash(g, f),
        target_class=i,
        s=s,
        predicted=predicted,
        constructed_color_count=constructed_count,
        constructed_valid=constructed_valid,
        certified=certified_value is not None,
        solver_value=solver_value,
        consistent=consistent,
    )


def run_profile_experiment(profile: ColorProfile, i: int, s: int, instance: str = "synthetic") -> ExperimentReport:
    """Prediction-only report for a profile entered without its labeling."""
    predicted = predict(profile, i, s)
    return ExperimentReport(
        instance=instance,
        target_class=i,
        s=s,
        predicted=predicted,
        consistent=ExperimentReport.judge(predicted, None, None),
    )


def check_family_member(g: Graph, f: EdgeLabeling) -> FamilyCheck:
    k = len(pendant_vertices(g))
    chromatic = chromatic_number_exact(g, vertex_limit=get_app_environ_config().LA_CHROMATIC_VERTEX_LIMIT)
    certificate = certify(g, f)

    reasons: list[str] = []
    if k < 1:
        reasons.append("graph has no pendant vertex")
    if k < chromatic - 1:
        reasons.append(f"k={k} is below chi(G) - 1 = {chromatic - 1}")
    if certificate is None:
        reasons.append(f"labeling does not attain k + 1 = {k + 1} colours")
    return FamilyCheck(
        pendant_count=k,
        chromatic_number=chromatic,
        certified_chi_la=certificate.chi_la if certificate else None,
        member=not reasons,
        reasons=reasons,
    )
